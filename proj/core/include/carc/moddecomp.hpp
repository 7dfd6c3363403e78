#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "carc/graph.hpp"
#include "carc/words.hpp"

namespace carc {

enum class ModuleKind { Leaf, Serial, Parallel, Prime };

std::string_view to_string(ModuleKind k);

struct MDNode {
  ModuleKind kind = ModuleKind::Leaf;
  VertexList vertices;        // sorted, labels of the input graph
  std::vector<int> children;  // ordered by least vertex
  int parent = -1;
  int depth = 0;
};

// Modular decomposition tree; nodes[0] is the root.
struct MDTree {
  std::vector<MDNode> nodes;

  bool empty() const { return nodes.empty(); }
  int leaf_of(int v) const;
  // Index of the child of `node` whose module contains v.
  int child_containing(int node, int v) const;
};

// Decomposes g[vertices]; an empty list means all of g.
MDTree modular_decomposition(const Graph& g, const VertexList& vertices = {});

bool is_module(const Graph& g, const VertexList& m, const VertexList& within = {});

// Set of ordered pairs (x, y), read x -> y.
struct TransitiveOrientation {
  std::set<std::pair<int, int>> arcs;

  bool has(int x, int y) const { return arcs.count({x, y}) > 0; }
  friend bool operator==(const TransitiveOrientation&, const TransitiveOrientation&) = default;
  friend auto operator<=>(const TransitiveOrientation&, const TransitiveOrientation&) = default;
};

// Reads a permutation model of g[U]: x prec y for adjacent pairs and x lt y for
// non-adjacent pairs, whenever x precedes y in tau0.
std::pair<TransitiveOrientation, TransitiveOrientation> pm_to_orientations(
    const OrientedPermutationModel& p, const Graph& g);

// Inverse of pm_to_orientations. The tau0 letter of v is its letter in slot0
// when given, v^0 otherwise.
OrientedPermutationModel orientations_to_pm(const TransitiveOrientation& lt,
                                            const TransitiveOrientation& prec,
                                            const VertexList& vertices,
                                            const std::vector<Letter>& slot0 = {});

// All transitive orientations of g restricted to the vertices of t. Prime
// nodes take the orientation of `seed` and its reverse when a seed is given.
// Empty when the restriction is not a comparability graph.
std::vector<TransitiveOrientation> enumerate_transitive_orientations(
    const Graph& g, const MDTree& t, const std::optional<TransitiveOrientation>& seed = {});

// Product of k! over serial nodes with k children and 2 over prime nodes.
std::size_t count_transitive_orientations(const MDTree& t);

}  // namespace carc
