#include "support.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>

namespace carc::testing {

std::vector<Letter> random_arc_word(std::mt19937_64& rng, int n) {
  std::vector<Letter> w;
  for (int v = 0; v < n; ++v) {
    w.emplace_back(v, 0);
    w.emplace_back(v, 1);
  }
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

ArcModel relabel(const ArcModel& m, const std::vector<int>& perm) {
  std::vector<Letter> w;
  for (const auto& l : m.word.letters()) w.emplace_back(perm[l.symbol], l.sup);
  return ArcModel(CircularWord(std::move(w)));
}

ArcModel perturb(std::mt19937_64& rng, const ArcModel& m, int steps) {
  std::vector<Letter> w = m.word.letters();
  if (w.size() < 3) return m;
  std::uniform_int_distribution<std::size_t> pick(0, w.size() - 1);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = pick(rng), j = (i + 1) % w.size();
    if (w[i].symbol == w[j].symbol) continue;
    std::swap(w[i], w[j]);
    if (!(oracle::arc_graph(w) == m.graph)) std::swap(w[i], w[j]);
  }
  return ArcModel(CircularWord(std::move(w)));
}

ArcModel worked_example() {
  return ArcModel(CircularWord({L('a', 1), L('b', 1), L('c', 0), L('d', 1), L('e', 0), L('f', 1), L('h', 1),
                                L('i', 0), L('c', 1), L('b', 0), L('e', 1), L('d', 0), L('a', 0), L('g', 0),
                                L('i', 1), L('h', 0), L('g', 1), L('f', 0)}));
}

const std::vector<oracle::CorpusEntry>& corpus5() {
  static const std::vector<oracle::CorpusEntry> corpus = [] {
    const std::filesystem::path path = CARC_CORPUS_CACHE;
    if (std::ifstream in{path}) {
      try {
        int n = 0;
        auto c = oracle::read_corpus(in, &n);
        if (n == 5) return c;
      } catch (const std::exception&) {
      }
    }
    auto c = oracle::build_corpus(5);
    const auto tmp = path.string() + ".tmp" + std::to_string(std::random_device{}());
    {
      std::ofstream out(tmp);
      oracle::write_corpus(out, 5, c);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
    return c;
  }();
  return corpus;
}

}  // namespace carc::testing
