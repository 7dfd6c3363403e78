#pragma once

#include <array>
#include <vector>

#include "carc/graph.hpp"
#include "carc/models.hpp"
#include "carc/moddecomp.hpp"
#include "carc/words.hpp"

namespace carc {

struct CAModule {
  VertexList vertices;  // sorted
  int representant = -1;  // least vertex
  int component = -1;     // index into PQSTree::components
};

// The letters of a CA-module split into its two slots, with the orientation
// of its non-overlapping pairs and the model read from the source word.
struct Metachord {
  std::vector<Letter> slot0;  // sorted; holds the representant's 0-letter
  std::vector<Letter> slot1;
  TransitiveOrientation lt;
  OrientedPermutationModel base;
};

// Modular decomposition of a CA-module in the overlap graph, with the child
// order each node shows in the two words of the base model.
struct ModuleTree {
  MDTree md;
  std::vector<std::vector<int>> order0;
  std::vector<std::vector<int>> order1;
};

enum class RootKind { Serial, Prime, Parallel };
enum class PQSKind { Slot, Q, P };

std::string_view to_string(RootKind k);
std::string_view to_string(PQSKind k);

struct PQSNode {
  PQSKind kind = PQSKind::Q;
  std::vector<int> order;  // neighbours, in the circular order of the source word
  int module = -1;         // slots
  int side = -1;           // slots: 0 or 1
  int component = -1;      // Q-nodes
};

// Q-nodes come first (one per component), then two slots per CA-module, then
// P-nodes.
struct PQSTree {
  RootKind root_kind = RootKind::Prime;
  std::vector<PQSNode> nodes;
  std::vector<VertexList> components;
  std::vector<int> q_node;
  std::vector<std::array<int, 2>> slot_node;

  int size() const { return static_cast<int>(nodes.size()); }
  bool is_inner(int node) const { return nodes[node].kind != PQSKind::Slot; }
  // Stored order reversed with the two slots of every CA-module exchanged.
  std::vector<int> reflected_order(int node) const;
  bool reflection_symmetric(int node) const;
  // Vertices of the components reachable from `neighbor` without `node`.
  VertexList side_vertices(int node, int neighbor, const std::vector<CAModule>& modules) const;
};

struct PQSMTree {
  Graph graph;
  Graph overlap;
  SideSets sides;
  MDTree overlap_md;
  std::vector<CAModule> modules;
  std::vector<Metachord> metachords;
  std::vector<ModuleTree> module_trees;
  PQSTree pqs;
  CircularWord source;
};

std::vector<CAModule> compute_ca_modules(const Graph& gov, const MDTree& t, const ChordModel& phi);

// Maximal modules of the overlap graph inside each top-level module that
// carry a consistent permutation model, found by trying every subset.
std::vector<CAModule> ca_modules_definitional(const Graph& gov, const ChordModel& phi);

Metachord metachord_of(const ChordModel& phi, const CAModule& s);
ModuleTree module_tree_of(const Graph& gov, const CAModule& s, const Metachord& mc);

// Some vertex outside both components sees them on opposite sides.
bool separated(const SideSets& sides, const VertexList& q1, const VertexList& q2);

PQSTree build_pqs_tree(const Graph& gov, const MDTree& t, const ChordModel& phi,
                       const std::vector<CAModule>& modules, const std::vector<Metachord>& mcs);

// phi restricted to the letters of a component, each gap replaced by the
// plain letter of its P-node (symbol = node id).
CircularWord extended_model(const CircularWord& phi, const PQSTree& pqs,
                            const std::vector<CAModule>& modules, int qnode);

// Classes of the K relation of each child of a prime node of the overlap graph.
std::vector<VertexList> k_relation_prime(const Graph& gov, const SideSets& sides, const MDTree& t,
                                         int node);

// Plain letters inside the shortest block holding k^j and missing k^(1-j).
std::vector<Letter> inside_set(const CircularWord& phi_q, const std::vector<Letter>& k0,
                               const std::vector<Letter>& k1);

// Full construction from a normalized model of a twin-free, universal-free graph.
PQSMTree build_pqsm(const ArcModel& normalized);

}  // namespace carc
