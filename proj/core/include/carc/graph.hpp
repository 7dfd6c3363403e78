#pragma once

#include <boost/dynamic_bitset.hpp>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace carc {

using VertexSet = boost::dynamic_bitset<>;
using VertexList = std::vector<int>;

// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  VertexSet closed_neighborhood(int v) const;
  int degree(int v) const { return static_cast<int>(adj_[v].count()); }
  std::size_t edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  // Induced subgraph; vertex i of the result is vertices[i].
  Graph induced(std::span<const int> vertices) const;
  Graph complement() const;
  // Vertex v of this graph becomes perm[v].
  Graph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adj_;
};

VertexSet make_set(int n, std::span<const int> vertices);
VertexList to_list(const VertexSet& s);

// Relation of v to u derived from closed neighbourhoods, read "v REL u".
enum class PairRelation { Disjoint, Contains, ContainedIn, CoverCircle, Overlap };

std::string_view to_string(PairRelation r);

PairRelation classify_pair(const Graph& g, int v, int u);

// All pairwise relations, rel[v][u] = classify_pair(g, v, u).
std::vector<std::vector<PairRelation>> relation_matrix(const Graph& g);

// L(v) collects Contains and CoverCircle partners, R(v) Disjoint and
// ContainedIn partners.
struct SideSets {
  std::vector<VertexSet> left;
  std::vector<VertexSet> right;
};

SideSets side_sets(const Graph& g);
std::pair<VertexList, VertexList> left_right_sets(const Graph& g, int v);

VertexList universal_vertices(const Graph& g);
// Classes of vertices with equal closed neighbourhoods, singletons included.
std::vector<VertexList> twin_classes(const Graph& g);
bool twin_free_and_universal_free(const Graph& g);

// Pairs in relation Overlap. Requires a twin-free, universal-free graph.
Graph overlap_graph(const Graph& g);

// G' = G with every vertex v blown up to mult[v] twins, plus `universals`
// universal vertices. origin[v] is the vertex of G' that v stands for.
struct Representation {
  Graph base;
  std::vector<int> mult;
  int universals = 0;
  VertexList origin;
};

Representation compute_representation(const Graph& g);

std::vector<VertexList> connected_components(const Graph& g);

}  // namespace carc
