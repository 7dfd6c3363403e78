#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "carc/canon.hpp"
#include "carc/enumerate.hpp"
#include "carc/models.hpp"
#include "carc/tuple_sort.hpp"

using namespace carc;

namespace {

std::vector<Letter> random_word(std::mt19937_64& rng, int n) {
  std::vector<Letter> w;
  for (int v = 0; v < n; ++v) {
    w.emplace_back(v, 0);
    w.emplace_back(v, 1);
  }
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

// Twin-free, universal-free models of order n.
std::vector<ArcModel> reduced_models(int n, int count) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(n));
  std::vector<ArcModel> out;
  while (static_cast<int>(out.size()) < count) {
    ArcModel m{CircularWord(random_word(rng, n))};
    if (twin_free_and_universal_free(m.graph)) out.push_back(std::move(m));
  }
  return out;
}

void BM_Canonize(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<ArcModel> models;
  for (int i = 0; i < 32; ++i) models.emplace_back(CircularWord(random_word(rng, static_cast<int>(state.range(0)))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonize(models[i++ % models.size()]));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Canonize)->RangeMultiplier(2)->Range(8, 256)->Complexity();

void BM_Normalize(benchmark::State& state) {
  const auto models = reduced_models(static_cast<int>(state.range(0)), 16);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& m = models[i++ % models.size()];
    benchmark::DoNotOptimize(normalize(m.graph, m));
  }
}
BENCHMARK(BM_Normalize)->DenseRange(4, 16, 4);

void BM_BuildAndEnumerate(benchmark::State& state) {
  auto models = reduced_models(static_cast<int>(state.range(0)), 16);
  for (auto& m : models) m = normalize(m.graph, m);
  std::size_t i = 0;
  for (auto _ : state) {
    const PQSMTree t = build_pqsm(models[i++ % models.size()]);
    std::size_t count = 0;
    for_each_conformal(t, [&](const CircularWord&) { return ++count < 10000; }, kDefaultEnumCap);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_BuildAndEnumerate)->DenseRange(4, 12, 4);

void BM_LexSortTuples(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::vector<Tuple> ts(static_cast<std::size_t>(state.range(0)));
  for (auto& t : ts) {
    t.resize(rng() % 8);
    for (auto& x : t) x = rng() % 64;
  }
  for (auto _ : state) benchmark::DoNotOptimize(lex_sort_tuples(ts));
}
BENCHMARK(BM_LexSortTuples)->Range(64, 16384);

}  // namespace

BENCHMARK_MAIN();
