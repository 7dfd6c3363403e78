#include <doctest.h>

#include <algorithm>
#include <random>

#include "carc/graph.hpp"
#include "carc/models.hpp"
#include "support.hpp"

using namespace carc;

namespace {

Graph path4() {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  return g;
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g = path4();
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(to_list(g.closed_neighborhood(1)) == VertexList{0, 1, 2});
  CHECK(g.complement().edge_count() == 3);
  const std::vector<int> sub{1, 2, 3};
  CHECK(g.induced(sub).edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  const std::vector<int> perm{3, 2, 1, 0};
  CHECK(g.relabeled(perm) == g);
  CHECK(connected_components(g).size() == 1);
}

TEST_CASE("pair relations of P4") {
  const Graph g = path4();
  CHECK(classify_pair(g, 1, 0) == PairRelation::Contains);
  CHECK(classify_pair(g, 0, 1) == PairRelation::ContainedIn);
  CHECK(classify_pair(g, 1, 2) == PairRelation::CoverCircle);
  CHECK(classify_pair(g, 0, 2) == PairRelation::Disjoint);
  const auto [l, r] = left_right_sets(g, 1);
  CHECK(l == VertexList{0, 2});
  CHECK(r == VertexList{3});
  CHECK(overlap_graph(g).edge_count() == 0);
  CHECK(overlap_graph(g).order() == 4);
}

TEST_CASE("relations are consistent in both directions") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const ArcModel m{CircularWord(carc::testing::random_arc_word(rng, 1 + static_cast<int>(rng() % 8)))};
    const auto rel = relation_matrix(m.graph);
    const auto sides = side_sets(m.graph);
    for (int v = 0; v < m.order(); ++v) {
      CHECK_FALSE(sides.left[v].intersects(sides.right[v]));
      for (int u = 0; u < m.order(); ++u) {
        if (u == v) continue;
        const PairRelation a = rel[v][u], b = rel[u][v];
        if (a == PairRelation::Contains) CHECK(b == PairRelation::ContainedIn);
        else if (a == PairRelation::ContainedIn) CHECK(b == PairRelation::Contains);
        else CHECK(a == b);
        CHECK((a == PairRelation::Disjoint) == !m.graph.adjacent(v, u));
        if (sides.left[v].test(u)) CHECK(a != PairRelation::Disjoint);
      }
    }
  }
}

TEST_CASE("overlap graph of the worked example") {
  const ArcModel m = carc::testing::worked_example();
  const Graph gov = overlap_graph(m.graph);
  CHECK(connected_components(gov).size() == 1);
  CHECK(gov.adjacent(0, 5));
  CHECK_FALSE(gov.adjacent(0, 1));
  CHECK(gov.adjacent(7, 6));
}

TEST_CASE("overlap graph rejects twins and universal vertices") {
  Graph k2(2);
  k2.add_edge(0, 1);
  CHECK_THROWS(overlap_graph(k2));
  CHECK_FALSE(twin_free_and_universal_free(k2));
}

TEST_CASE("representation") {
  SUBCASE("triangle with a pendant") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    CHECK(universal_vertices(g) == VertexList{2});
    const auto rep = compute_representation(g);
    CHECK(rep.universals == 1);
    CHECK(rep.base.order() == 2);
    CHECK(rep.base.edge_count() == 0);
    auto mult = rep.mult;
    std::sort(mult.begin(), mult.end());
    CHECK(mult == std::vector<int>{1, 2});
    CHECK(rep.origin.size() == 2);
  }
  SUBCASE("K2") {
    Graph g(2);
    g.add_edge(0, 1);
    const auto rep = compute_representation(g);
    CHECK(rep.universals == 2);
    CHECK(rep.base.order() == 0);
  }
  SUBCASE("twin-free, universal-free graphs are their own base") {
    const Graph g = path4();
    const auto rep = compute_representation(g);
    CHECK(rep.base == g);
    CHECK(rep.universals == 0);
    CHECK(rep.mult == std::vector<int>{1, 1, 1, 1});
  }
}

TEST_CASE("representation counts every vertex once") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const ArcModel m{CircularWord(carc::testing::random_arc_word(rng, 1 + static_cast<int>(rng() % 8)))};
    const auto rep = compute_representation(m.graph);
    int total = rep.universals;
    for (int x : rep.mult) total += x;
    CHECK(total == m.order());
    CHECK(twin_free_and_universal_free(rep.base));
    CHECK(rep.base == m.graph.induced(rep.origin));
  }
}
