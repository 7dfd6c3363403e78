#include <doctest.h>

#include <algorithm>
#include <random>

#include "carc/tuple_sort.hpp"

using namespace carc;

TEST_CASE("least rotation") {
  const Tuple t{2, 1, 3, 1};
  CHECK(least_rotation(t) == Tuple{1, 2, 1, 3});
  CHECK(least_rotation_index(t) == 3);
  const Tuple flat{4, 4, 4};
  CHECK(least_rotation(flat) == flat);
  const Tuple least{0, 5, 1};
  CHECK(least_rotation(least) == least);
  CHECK(least_rotation(Tuple{}).empty());
}

TEST_CASE("least rotation matches the naive minimum") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 2000; ++i) {
    Tuple t(1 + rng() % 10);
    for (auto& x : t) x = rng() % 3;
    Tuple best = t;
    for (std::size_t r = 1; r < t.size(); ++r) {
      Tuple rot(t.begin() + static_cast<std::ptrdiff_t>(r), t.end());
      rot.insert(rot.end(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(r));
      best = std::min(best, rot);
    }
    REQUIRE(least_rotation(t) == best);
  }
}

TEST_CASE("sorting tuple entries") {
  std::vector<Tuple> ts{{3, 1}, {2}};
  sort_tuple_entries(ts);
  CHECK(ts == std::vector<Tuple>{{1, 3}, {2}});
  std::vector<Tuple> none;
  sort_tuple_entries(none);
  CHECK(none.empty());

  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Tuple> a(rng() % 6);
    for (auto& t : a) {
      t.resize(rng() % 7);
      for (auto& x : t) x = rng() % 20;
    }
    auto b = a;
    sort_tuple_entries(a);
    sort_tuple_entries_generic(b);
    REQUIRE(a == b);
  }
}

TEST_CASE("lexicographic sort of tuples") {
  const std::vector<Tuple> ts{{1, 2}, {1, 2}, {1, 3}};
  const LexOrder o = lex_sort_tuples(ts);
  CHECK(o.group == std::vector<std::size_t>{0, 0, 1});
  CHECK(o.order.size() == 3);
  CHECK(o.order.back() == 2);
  CHECK(lex_sort_tuples({{7}}).group == std::vector<std::size_t>{0});

  const std::vector<Tuple> mixed{{2}, {}, {1, 5}, {1}, {2}};
  const LexOrder m = lex_sort_tuples(mixed);
  CHECK(m.group == std::vector<std::size_t>{3, 0, 2, 1, 3});

  std::mt19937_64 rng(6);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Tuple> r(1 + rng() % 9);
    for (auto& t : r) {
      t.resize(rng() % 5);
      for (auto& x : t) x = rng() % 4;
    }
    const LexOrder x = lex_sort_tuples(r), y = lex_sort_tuples_generic(r);
    REQUIRE(x.group == y.group);
    for (std::size_t k = 0; k + 1 < x.order.size(); ++k) CHECK(r[x.order[k]] <= r[x.order[k + 1]]);
  }
}
