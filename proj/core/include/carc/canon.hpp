#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "carc/models.hpp"
#include "carc/pqsm.hpp"
#include "carc/tuple_sort.hpp"

namespace carc {

struct CanonOptions {
  bool counting_sorts = true;  // false: comparison sorts
};

// Node `node` of the module tree of CA-module `module`, read from slot
// `flavor` towards the other slot.
struct DualMetachord {
  int module = 0;
  int node = 0;
  int flavor = 0;
  friend auto operator<=>(const DualMetachord&, const DualMetachord&) = default;
};

enum class EntryKind : std::uint64_t { MetachordLeaf, MetachordInner, QNode, PNode, Root };

// Tuples numbered level by level. Each entry is stored with its kind so that
// tuples of different kinds never share a number.
class CanonTable {
 public:
  struct Entry {
    EntryKind kind;
    Tuple tuple;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  // Num: the number the next new entry receives.
  std::uint64_t next() const { return entries_.size(); }
  // Numbers one level; equal entries share a number, numbers follow the
  // lexicographic order of (kind, tuple).
  std::vector<std::uint64_t> add_level(const std::vector<Entry>& items, const CanonOptions& opt);
  const std::vector<Entry>& entries() const { return entries_; }
  // (u, Num-1, kind, length, tuple..., ..., 0, kind, length, tuple...).
  std::vector<std::uint64_t> linearize(int universals) const;

 private:
  std::vector<Entry> entries_;
};

std::map<DualMetachord, int> levels_of_metachords(const PQSMTree& t);

// The tree rooted at its centre, or at a synthetic node between two centres.
struct RootedPQS {
  int root = -1;                    // -1 when synthetic
  std::array<int, 2> centers{-1, -1};
  std::vector<int> level;           // synthetic root sits at level 0
  std::vector<int> parent;          // for two centres: each other
  int max_level = 0;

  bool synthetic() const { return root < 0; }
};

RootedPQS root_pqs(const PQSTree& pqs);

using MetachordNums = std::map<DualMetachord, std::uint64_t>;

Tuple canon_metachord(const PQSMTree& t, const DualMetachord& l, const MetachordNums& num,
                      const std::vector<int>& mult, std::uint64_t num_next);

// slot_num[m][j]: number of the metachord read from slot j of CA-module m.
Tuple canon_qnode(const PQSMTree& t, const RootedPQS& r, int q, const std::vector<std::uint64_t>& node_num,
                  const std::vector<std::array<std::uint64_t, 2>>& slot_num, std::uint64_t num_next);

Tuple canon_pnode(const PQSTree& pqs, const RootedPQS& r, int p, const std::vector<std::uint64_t>& node_num);

std::vector<std::uint64_t> canonize(const ArcModel& m, const CanonOptions& opt = {});
bool isomorphic(const ArcModel& a, const ArcModel& b, const CanonOptions& opt = {});

std::string format_canonical(const std::vector<std::uint64_t>& form);

}  // namespace carc
