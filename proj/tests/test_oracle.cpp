#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "carc/oracle.hpp"
#include "support.hpp"

using namespace carc;
using carc::testing::L;

TEST_CASE("arc words per rotation class") {
  CHECK(oracle::gen_arc_models(1).size() == 1);
  const auto two = oracle::gen_arc_models(2);
  CHECK(two.size() == 6);
  std::set<std::size_t> edge_counts;
  for (const auto& m : two) edge_counts.insert(m.graph.edge_count());
  CHECK(edge_counts == std::set<std::size_t>{0, 1});
  const auto three = oracle::gen_arc_models(3);
  CHECK(three.size() == 120);
  std::set<CircularWord> distinct;
  for (const auto& m : three) distinct.insert(m.word);
  CHECK(distinct.size() == 120);
  std::size_t five = 0;
  oracle::for_each_arc_word(5, [&](const std::vector<Letter>&) { ++five; });
  CHECK(five == 362880);
}

TEST_CASE("independent intersection test agrees with the models") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    const auto w = carc::testing::random_arc_word(rng, 1 + static_cast<int>(rng() % 9));
    CHECK(oracle::arc_graph(w) == ArcModel(CircularWord(w)).graph);
  }
}

TEST_CASE("brute-force isomorphism") {
  Graph p4(4), claw(4);
  p4.add_edge(0, 1);
  p4.add_edge(1, 2);
  p4.add_edge(2, 3);
  claw.add_edge(0, 1);
  claw.add_edge(0, 2);
  claw.add_edge(0, 3);
  CHECK(oracle::brute_iso(p4, p4));
  CHECK_FALSE(oracle::brute_iso(p4, claw));
  const std::vector<int> perm{2, 0, 3, 1};
  CHECK(oracle::brute_iso(p4, p4.relabeled(perm)));
  Graph c4 = p4;
  c4.add_edge(3, 0);
  Graph paw = claw;
  paw.add_edge(1, 2);
  CHECK_FALSE(oracle::brute_iso(c4, paw));
}

TEST_CASE("brute-force modules") {
  Graph p4(4);
  p4.add_edge(0, 1);
  p4.add_edge(1, 2);
  p4.add_edge(2, 3);
  CHECK(oracle::brute_modules(p4).size() == 5);
  Graph k4(4);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) k4.add_edge(a, b);
  CHECK(oracle::brute_modules(k4).size() == 15);
  CHECK(oracle::brute_strong_modules(k4).size() == 5);
}

TEST_CASE("brute-force transitive orientations") {
  Graph k3(3);
  k3.add_edge(0, 1);
  k3.add_edge(0, 2);
  k3.add_edge(1, 2);
  CHECK(oracle::brute_transitive_orientation_count(k3) == 6);
  Graph p4(4);
  p4.add_edge(0, 1);
  p4.add_edge(1, 2);
  p4.add_edge(2, 3);
  CHECK(oracle::brute_transitive_orientation_count(p4) == 2);
  Graph c5(5);
  for (int v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);
  CHECK(oracle::brute_transitive_orientation_count(c5) == 0);
}

TEST_CASE("brute-force conformal models") {
  const ArcModel m = carc::testing::worked_example();
  const auto all = oracle::brute_conformal_models(m.graph);
  CHECK(all.size() == 4);
  CHECK(std::count(all.begin(), all.end(), m.word) == 1);
}

TEST_CASE("corpus") {
  const auto small = oracle::build_corpus(4);
  CHECK(small.size() == 18);
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = i + 1; j < small.size(); ++j) CHECK_FALSE(oracle::brute_iso(small[i].graph, small[j].graph));

  std::stringstream io;
  oracle::write_corpus(io, 4, small);
  CHECK(io.str().rfind("n 4 count 18\n", 0) == 0);
  int n = 0;
  const auto back = oracle::read_corpus(io, &n);
  CHECK(n == 4);
  REQUIRE(back.size() == small.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].model.word == small[i].model.word);
    CHECK(back[i].graph == small[i].graph);
  }
  std::stringstream bad("n 4 count 2\nv0^0,v0^1\n");
  CHECK_THROWS(oracle::read_corpus(bad));
}

// The 52 graphs on one to five vertices, except C4 + K1 and K2,3.
TEST_CASE("the cached corpus holds every circular-arc graph up to five vertices") {
  const auto& c = carc::testing::corpus5();
  CHECK(c.size() == 50);
  std::size_t reduced = 0;
  for (const auto& e : c) reduced += twin_free_and_universal_free(e.graph);
  CHECK(reduced == 16);
}
