#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "carc/pqsm.hpp"

namespace carc {

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultEnumCap = 1'000'000;

// CARC_ENUM_CAP when set to a positive integer, kDefaultEnumCap otherwise.
std::size_t enum_cap_from_env();

// One model per transitive orientation of the module's overlap graph, all
// sharing the metachord's slots and non-overlap orientation.
std::vector<OrientedPermutationModel> admissible_models(const Metachord& mc, const ModuleTree& mt);

// Circular orders of slot letters (symbol = CA-module, superscript = slot)
// allowed by the tree. Throws CapacityError beyond `cap` orders.
std::vector<CircularWord> slot_orders(const PQSTree& pqs, std::size_t cap);

// Streams every conformal model once; stops early when visit returns false.
void for_each_conformal(const PQSMTree& t, const std::function<bool(const CircularWord&)>& visit,
                        std::size_t cap);

// All conformal models in lexicographic order of their canonical rotation.
std::vector<CircularWord> enumerate_conformal(const PQSMTree& t, std::size_t cap);

// Children orders (tau0, tau1) an inner node of a module tree may take.
std::vector<std::pair<std::vector<int>, std::vector<int>>> module_node_orders(const ModuleTree& mt, int node);

// Membership in the model space described by the tree, without enumerating it.
bool is_admissible(const CircularWord& w, const PQSMTree& t);

}  // namespace carc
