#include "carc/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace carc {

Graph::Graph(int n) : adj_(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n))) {
  if (n < 0) throw std::invalid_argument("negative graph order");
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("self-loop");
  if (u < 0 || v < 0 || u >= order() || v >= order())
    throw std::out_of_range("edge endpoint out of range");
  adj_[u].set(v);
  adj_[v].set(u);
}

VertexSet Graph::closed_neighborhood(int v) const {
  VertexSet s = adj_[v];
  s.set(v);
  return s;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adj_) total += row.count();
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u)
    for (auto v = adj_[u].find_next(u); v != VertexSet::npos; v = adj_[u].find_next(v))
      out.emplace_back(u, static_cast<int>(v));
  return out;
}

Graph Graph::induced(std::span<const int> vertices) const {
  Graph h(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

Graph Graph::complement() const {
  Graph h(order());
  for (int u = 0; u < order(); ++u)
    for (int v = u + 1; v < order(); ++v)
      if (!adjacent(u, v)) h.add_edge(u, v);
  return h;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != order()) throw std::invalid_argument("permutation size mismatch");
  Graph h(order());
  for (auto [u, v] : edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

VertexSet make_set(int n, std::span<const int> vertices) {
  VertexSet s(static_cast<std::size_t>(n));
  for (int v : vertices) s.set(v);
  return s;
}

VertexList to_list(const VertexSet& s) {
  VertexList out;
  out.reserve(s.count());
  for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) out.push_back(static_cast<int>(v));
  return out;
}

std::string_view to_string(PairRelation r) {
  switch (r) {
    case PairRelation::Disjoint: return "disjoint";
    case PairRelation::Contains: return "contains";
    case PairRelation::ContainedIn: return "contained_in";
    case PairRelation::CoverCircle: return "cover_circle";
    case PairRelation::Overlap: return "overlap";
  }
  return "?";
}

namespace {

bool proper_subset(const VertexSet& a, const VertexSet& b) { return a.is_proper_subset_of(b); }

bool all_inside(const Graph& g, const VertexSet& candidates, const VertexSet& container) {
  for (auto w = candidates.find_first(); w != VertexSet::npos; w = candidates.find_next(w))
    if (!proper_subset(g.closed_neighborhood(static_cast<int>(w)), container)) return false;
  return true;
}

}  // namespace

PairRelation classify_pair(const Graph& g, int v, int u) {
  if (u == v) throw std::invalid_argument("classify_pair needs distinct vertices");
  if (!g.adjacent(u, v)) return PairRelation::Disjoint;
  const VertexSet nv = g.closed_neighborhood(v);
  const VertexSet nu = g.closed_neighborhood(u);
  if (proper_subset(nu, nv)) return PairRelation::Contains;
  if (proper_subset(nv, nu)) return PairRelation::ContainedIn;
  if ((nv | nu).all() && all_inside(g, nv - nu, nv) && all_inside(g, nu - nv, nu))
    return PairRelation::CoverCircle;
  return PairRelation::Overlap;
}

std::vector<std::vector<PairRelation>> relation_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<std::vector<PairRelation>> rel(n, std::vector<PairRelation>(n, PairRelation::Disjoint));
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      if (u != v) rel[v][u] = classify_pair(g, v, u);
  return rel;
}

SideSets side_sets(const Graph& g) {
  const int n = g.order();
  SideSets s{std::vector<VertexSet>(n, VertexSet(n)), std::vector<VertexSet>(n, VertexSet(n))};
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      switch (classify_pair(g, v, u)) {
        case PairRelation::Contains:
        case PairRelation::CoverCircle: s.left[v].set(u); break;
        case PairRelation::Disjoint:
        case PairRelation::ContainedIn: s.right[v].set(u); break;
        case PairRelation::Overlap: break;
      }
    }
  }
  return s;
}

std::pair<VertexList, VertexList> left_right_sets(const Graph& g, int v) {
  VertexList left, right;
  for (int u = 0; u < g.order(); ++u) {
    if (u == v) continue;
    switch (classify_pair(g, v, u)) {
      case PairRelation::Contains:
      case PairRelation::CoverCircle: left.push_back(u); break;
      case PairRelation::Disjoint:
      case PairRelation::ContainedIn: right.push_back(u); break;
      case PairRelation::Overlap: break;
    }
  }
  return {left, right};
}

VertexList universal_vertices(const Graph& g) {
  VertexList out;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == g.order() - 1) out.push_back(v);
  return out;
}

std::vector<VertexList> twin_classes(const Graph& g) {
  std::map<std::vector<int>, VertexList> by_nbhd;
  for (int v = 0; v < g.order(); ++v) by_nbhd[to_list(g.closed_neighborhood(v))].push_back(v);
  std::vector<VertexList> out;
  for (auto& [key, cls] : by_nbhd) out.push_back(std::move(cls));
  std::sort(out.begin(), out.end());
  return out;
}

bool twin_free_and_universal_free(const Graph& g) {
  return universal_vertices(g).empty() && twin_classes(g).size() == static_cast<std::size_t>(g.order());
}

Graph overlap_graph(const Graph& g) {
  if (!twin_free_and_universal_free(g))
    throw std::invalid_argument("overlap graph needs a twin-free, universal-free graph");
  Graph ov(g.order());
  for (int v = 0; v < g.order(); ++v)
    for (int u = v + 1; u < g.order(); ++u)
      if (classify_pair(g, v, u) == PairRelation::Overlap) ov.add_edge(v, u);
  return ov;
}

Representation compute_representation(const Graph& g) {
  Representation rep;
  VertexSet universal = make_set(g.order(), universal_vertices(g));
  rep.universals = static_cast<int>(universal.count());
  for (const auto& cls : twin_classes(g)) {
    if (universal.test(cls.front())) continue;
    rep.origin.push_back(cls.front());
    rep.mult.push_back(static_cast<int>(cls.size()));
  }
  // twin_classes is sorted by least member, so origin is increasing.
  rep.base = g.induced(rep.origin);
  return rep;
}

std::vector<VertexList> connected_components(const Graph& g) {
  std::vector<VertexList> comps;
  VertexSet seen(g.order());
  for (int s = 0; s < g.order(); ++s) {
    if (seen.test(s)) continue;
    VertexList comp{s}, stack{s};
    seen.set(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      const auto& nb = g.neighbors(v);
      for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u)) {
        if (seen.test(u)) continue;
        seen.set(u);
        comp.push_back(static_cast<int>(u));
        stack.push_back(static_cast<int>(u));
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace carc
