#include <doctest.h>

#include <random>
#include <set>

#include "carc/enumerate.hpp"
#include "carc/models.hpp"
#include "carc/oracle.hpp"
#include "carc/pqsm.hpp"
#include "support.hpp"

using namespace carc;
using carc::testing::L;

namespace {

// a=[1,4], b=[3,6], c=[5,8], d=[7,10] on a circle of 12 units.
ArcModel p4_intervals() {
  return ArcModel(CircularWord({L('a', 0), L('b', 0), L('a', 1), L('c', 0), L('b', 1), L('d', 0), L('c', 1), L('d', 1)}));
}

}  // namespace

TEST_CASE("intersection graph of interval arcs") {
  const ArcModel m = p4_intervals();
  CHECK(m.graph.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(vertex_count(m.word.letters()) == 4);
  CHECK_THROWS(vertex_count({L('a', 0), L('c', 1)}));
}

TEST_CASE("check_normalized reports a missing containment") {
  const ArcModel m = p4_intervals();
  const auto bad = check_normalized(m.graph, m);
  bool found = false;
  for (const auto& x : bad)
    found |= x.kind == Violation::Kind::Relation && x.v == 0 && x.u == 1 && x.expected == PairRelation::ContainedIn &&
             x.actual == PairRelation::Overlap;
  CHECK(found);
}

TEST_CASE("normalize P4") {
  const ArcModel m = p4_intervals();
  const ArcModel out = normalize(m.graph, m);
  CHECK(check_normalized(m.graph, out).empty());
  EndpointIndex idx(out.word.letters(), 4);
  CHECK(idx.relation(1, 0) == PairRelation::Contains);
  CHECK(idx.relation(2, 3) == PairRelation::Contains);
  CHECK(idx.relation(1, 2) == PairRelation::CoverCircle);
}

TEST_CASE("normalize leaves normalized models alone") {
  const ArcModel m = carc::testing::worked_example();
  CHECK(check_normalized(m.graph, m).empty());
  std::vector<EndpointMove> trace;
  CHECK(normalize(m.graph, m, &trace).word == m.word);
  CHECK(trace.empty());
}

TEST_CASE("normalize rejects graphs outside its domain") {
  const ArcModel tri{CircularWord({L('a', 0), L('b', 0), L('c', 0), L('a', 1), L('b', 1), L('c', 1)})};
  CHECK_THROWS_AS(normalize(tri.graph, tri), NormalizationError);
}

TEST_CASE("normalize is idempotent and extension-only") {
  std::mt19937_64 rng(21);
  int done = 0;
  while (done < 300) {
    const ArcModel m{CircularWord(carc::testing::random_arc_word(rng, 2 + static_cast<int>(rng() % 7)))};
    if (!twin_free_and_universal_free(m.graph)) continue;
    ++done;
    std::vector<EndpointMove> trace;
    const ArcModel once = normalize(m.graph, m, &trace);
    CHECK(normalize(once.graph, once).word == once.word);
    CHECK(check_normalized(m.graph, once).empty());
    for (const auto& mv : trace) CHECK(mv.letter.symbol != mv.passed.symbol);
  }
}

TEST_CASE("normalized and conformal models correspond") {
  std::mt19937_64 rng(8);
  int done = 0;
  while (done < 200) {
    const ArcModel m{CircularWord(carc::testing::random_arc_word(rng, 2 + static_cast<int>(rng() % 7)))};
    if (!twin_free_and_universal_free(m.graph)) continue;
    ++done;
    const ArcModel nm = normalize(m.graph, m);
    const ChordModel c = arcs_to_chords(nm);
    CHECK(c.word == nm.word);
    CHECK(c.graph == overlap_graph(m.graph));
    VertexList all;
    for (int v = 0; v < m.order(); ++v) all.push_back(v);
    CHECK(check_conformal(m.graph, c.word, all));
    CHECK(chords_to_arcs(c, m.graph).word == nm.word);
  }
}

TEST_CASE("conformal models of the worked example are distinct normalized models") {
  const ArcModel m = carc::testing::worked_example();
  const auto models = enumerate_conformal(build_pqsm(m), enum_cap_from_env());
  REQUIRE(models.size() == 4);
  std::set<CircularWord> seen;
  for (const auto& w : models) {
    const ArcModel a = chords_to_arcs(ChordModel{w, overlap_graph(m.graph)}, m.graph);
    CHECK(a.graph == m.graph);
    CHECK(check_normalized(m.graph, a).empty());
    seen.insert(a.word);
  }
  CHECK(seen.size() == 4);
}

TEST_CASE("chords_to_arcs rejects non-conformal input") {
  const ArcModel m = p4_intervals();
  CHECK_THROWS(chords_to_arcs(ChordModel{m.word, overlap_graph(m.graph)}, m.graph));
}

TEST_CASE("check_conformal on an overlapping pair") {
  const ArcModel m = carc::testing::worked_example();
  const VertexList af{0, 5};
  CHECK(check_conformal(m.graph, CircularWord({L('a', 0), L('f', 0), L('a', 1), L('f', 1)}), af));
  CHECK_FALSE(check_conformal(m.graph, CircularWord({L('a', 0), L('a', 1), L('f', 0), L('f', 1)}), af));
}

TEST_CASE("reflection maps conformal models to conformal models") {
  const ArcModel m = carc::testing::worked_example();
  VertexList all;
  for (int v = 0; v < m.order(); ++v) all.push_back(v);
  CHECK(check_conformal(m.graph, reflect(m.word), all));
  CHECK(arcs_to_chords(ArcModel(reflect(m.word))).word == reflect(arcs_to_chords(m).word));
}

TEST_CASE("base_model keeps one vertex per twin class") {
  // Triangle a, b, c with pendant d on c: base is {a, d}.
  const ArcModel m{CircularWord({L('a', 0), L('b', 0), L('c', 0), L('a', 1), L('b', 1), L('d', 0), L('c', 1), L('d', 1)})};
  const auto rep = compute_representation(m.graph);
  const ArcModel b = base_model(m, rep);
  CHECK(b.graph == rep.base);
}
