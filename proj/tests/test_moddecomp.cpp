#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "carc/moddecomp.hpp"
#include "carc/oracle.hpp"
#include "support.hpp"

using namespace carc;
using carc::testing::L;

namespace {

Graph path4() {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  return g;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution edge(p);
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (edge(rng)) g.add_edge(a, b);
  return g;
}

bool connected(const Graph& g) { return connected_components(g).size() <= 1; }

// Graph of crossing chords for the circular word tau0 tau1.
Graph crossing_graph(const OrientedPermutationModel& p, int n) {
  std::vector<int> at0(n), at1(n);
  for (std::size_t i = 0; i < p.tau0.size(); ++i) at0[p.tau0[i].symbol] = static_cast<int>(i);
  for (std::size_t i = 0; i < p.tau1.size(); ++i) at1[p.tau1[i].symbol] = static_cast<int>(i);
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if ((at0[a] < at0[b]) == (at1[a] < at1[b])) g.add_edge(a, b);
  return g;
}

}  // namespace

TEST_CASE("decomposition of small graphs") {
  const MDTree p4 = modular_decomposition(path4());
  CHECK(p4.nodes[0].kind == ModuleKind::Prime);
  CHECK(p4.nodes[0].children.size() == 4);
  for (int c : p4.nodes[0].children) CHECK(p4.nodes[c].kind == ModuleKind::Leaf);

  const MDTree empty = modular_decomposition(Graph(5));
  CHECK(empty.nodes[0].kind == ModuleKind::Parallel);
  CHECK(empty.nodes[0].children.size() == 5);

  Graph k4(4);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) k4.add_edge(a, b);
  CHECK(modular_decomposition(k4).nodes[0].kind == ModuleKind::Serial);
}

TEST_CASE("is_module") {
  const Graph g = path4();
  CHECK(is_module(g, {2}));
  CHECK(is_module(g, {0, 1, 2, 3}));
  CHECK_FALSE(is_module(g, {0, 2}));
}

TEST_CASE("strong modules agree with brute force") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = random_graph(rng, n, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
    const MDTree t = modular_decomposition(g);
    std::vector<VertexList> got;
    for (const auto& nd : t.nodes) got.push_back(nd.vertices);
    std::sort(got.begin(), got.end());
    CHECK(got == oracle::brute_strong_modules(g));

    for (std::size_t id = 0; id < t.nodes.size(); ++id) {
      const auto& nd = t.nodes[id];
      if (nd.kind == ModuleKind::Leaf) {
        CHECK(nd.vertices.size() == 1);
        continue;
      }
      VertexList joined;
      for (int c : nd.children) {
        CHECK(t.nodes[c].parent == static_cast<int>(id));
        joined.insert(joined.end(), t.nodes[c].vertices.begin(), t.nodes[c].vertices.end());
      }
      std::sort(joined.begin(), joined.end());
      CHECK(joined == nd.vertices);
      const Graph sub = g.induced(nd.vertices);
      CHECK((nd.kind == ModuleKind::Parallel) == !connected(sub));
      CHECK((nd.kind == ModuleKind::Serial) == !connected(sub.complement()));
    }
  }
}

TEST_CASE("decomposition of a subset keeps the original labels") {
  const Graph g = path4();
  const MDTree t = modular_decomposition(g, {1, 2, 3});
  CHECK(t.nodes[0].vertices == VertexList{1, 2, 3});
  CHECK(t.nodes[t.leaf_of(3)].vertices == VertexList{3});
}

TEST_CASE("permutation models and orientations") {
  Graph edge(2);
  edge.add_edge(0, 1);
  const OrientedPermutationModel crossing{{L('a', 0), L('b', 0)}, {L('a', 1), L('b', 1)}};
  auto [lt, prec] = pm_to_orientations(crossing, edge);
  CHECK(prec.arcs == std::set<std::pair<int, int>>{{0, 1}});
  CHECK(lt.arcs.empty());

  const OrientedPermutationModel apart{{L('a', 0), L('b', 0)}, {L('b', 1), L('a', 1)}};
  auto [lt2, prec2] = pm_to_orientations(apart, Graph(2));
  CHECK(lt2.arcs == std::set<std::pair<int, int>>{{0, 1}});
  CHECK(prec2.arcs.empty());
  CHECK_THROWS(pm_to_orientations(apart, edge));

  TransitiveOrientation total;
  total.arcs = {{0, 1}, {0, 2}, {1, 2}};
  const auto p = orientations_to_pm(total, {}, {0, 1, 2});
  CHECK(p.tau0 == LinearWord{L('a', 0), L('b', 0), L('c', 0)});
  CHECK(p.tau1 == LinearWord{L('c', 1), L('b', 1), L('a', 1)});
  const auto q = orientations_to_pm({}, total, {0, 1, 2});
  CHECK(q.tau0 == LinearWord{L('a', 0), L('b', 0), L('c', 0)});
  CHECK(q.tau1 == LinearWord{L('a', 1), L('b', 1), L('c', 1)});
}

TEST_CASE("orientations round-trip on every permutation model up to five chords") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> p0(n), p1(n);
    std::iota(p0.begin(), p0.end(), 0);
    do {
      std::iota(p1.begin(), p1.end(), 0);
      do {
        OrientedPermutationModel p;
        for (int v : p0) p.tau0.emplace_back(v, 0);
        for (int v : p1) p.tau1.emplace_back(v, 1);
        const Graph g = crossing_graph(p, n);
        const auto [lt, prec] = pm_to_orientations(p, g);
        VertexList all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        REQUIRE(orientations_to_pm(lt, prec, all) == p);
      } while (std::next_permutation(p1.begin(), p1.end()));
    } while (std::next_permutation(p0.begin(), p0.end()));
  }
}

TEST_CASE("transitive orientation counts") {
  SUBCASE("serial node with three children") {
    Graph k3(3);
    k3.add_edge(0, 1);
    k3.add_edge(0, 2);
    k3.add_edge(1, 2);
    const MDTree t = modular_decomposition(k3);
    CHECK(enumerate_transitive_orientations(k3, t).size() == 6);
    CHECK(count_transitive_orientations(t) == 6);
  }
  SUBCASE("prime node") {
    const Graph g = path4();
    const MDTree t = modular_decomposition(g);
    const auto all = enumerate_transitive_orientations(g, t);
    REQUIRE(all.size() == 2);
    TransitiveOrientation rev;
    for (auto [x, y] : all[0].arcs) rev.arcs.insert({y, x});
    CHECK(rev == all[1]);
    const auto seeded = enumerate_transitive_orientations(g, t, all[1]);
    CHECK(std::set(seeded.begin(), seeded.end()) == std::set(all.begin(), all.end()));
  }
  SUBCASE("parallel node") {
    const Graph g(4);
    CHECK(enumerate_transitive_orientations(g, modular_decomposition(g)).size() == 1);
  }
  SUBCASE("odd cycle") {
    Graph c5(5);
    for (int v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);
    CHECK(enumerate_transitive_orientations(c5, modular_decomposition(c5)).empty());
  }
}
