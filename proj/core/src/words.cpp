#include "carc/words.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace carc {

CircularWord::CircularWord(std::vector<Letter> letters)
    : letters_(std::move(letters)) {
  if (letters_.empty()) return;
  std::vector<Letter> sorted = letters_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("circular word has a repeated letter: " +
                                to_string(*std::adjacent_find(sorted.begin(), sorted.end())));
  // With distinct letters the least rotation starts at the least letter.
  auto first = std::min_element(letters_.begin(), letters_.end());
  std::rotate(letters_.begin(), first, letters_.end());
}

std::optional<std::size_t> CircularWord::find(Letter l) const {
  auto it = std::find(letters_.begin(), letters_.end(), l);
  if (it == letters_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - letters_.begin());
}

bool rotate_equal(const CircularWord& a, const CircularWord& b) { return a == b; }

CircularWord reflect(const CircularWord& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  for (auto& l : out) l = l.flipped();
  return CircularWord(std::move(out));
}

CircularWord restrict_to(const CircularWord& w, std::span<const int> symbols) {
  std::set<int> keep(symbols.begin(), symbols.end());
  std::vector<Letter> out;
  for (const auto& l : w.letters())
    if (keep.count(l.symbol)) out.push_back(l);
  return CircularWord(std::move(out));
}

namespace {

// Maximal cyclic runs of marked positions as (start, length).
std::vector<std::pair<std::size_t, std::size_t>> cyclic_runs(const std::vector<bool>& mark) {
  const std::size_t n = mark.size();
  std::vector<std::pair<std::size_t, std::size_t>> runs;
  if (n == 0) return runs;
  if (std::all_of(mark.begin(), mark.end(), [](bool b) { return b; })) {
    runs.emplace_back(0, n);
    return runs;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!mark[i] || mark[(i + n - 1) % n]) continue;
    std::size_t len = 0;
    while (mark[(i + len) % n]) ++len;
    runs.emplace_back(i, len);
  }
  return runs;
}

LinearWord slice(const std::vector<Letter>& w, std::size_t start, std::size_t len) {
  LinearWord out;
  out.reserve(len);
  for (std::size_t k = 0; k < len; ++k) out.push_back(w[(start + k) % w.size()]);
  return out;
}

bool one_copy_each(const LinearWord& block, const std::set<int>& symbols) {
  std::set<int> seen;
  for (const auto& l : block)
    if (!symbols.count(l.symbol) || !seen.insert(l.symbol).second) return false;
  return seen.size() == symbols.size();
}

}  // namespace

std::optional<LinearWord> contiguous_subword(const CircularWord& w,
                                             std::span<const Letter> letters) {
  if (letters.empty()) return LinearWord{};
  std::vector<bool> mark(w.size(), false);
  for (const auto& l : letters) {
    auto pos = w.find(l);
    if (!pos || mark[*pos]) return std::nullopt;
    mark[*pos] = true;
  }
  auto runs = cyclic_runs(mark);
  if (runs.size() != 1) return std::nullopt;
  return slice(w.letters(), runs[0].first, runs[0].second);
}

std::optional<OrientedPermutationModel> consistent_permutation_model(
    const CircularWord& w, std::span<const int> symbols) {
  std::set<int> u(symbols.begin(), symbols.end());
  if (u.empty()) return std::nullopt;
  const auto& letters = w.letters();
  std::vector<bool> mark(letters.size(), false);
  std::size_t count = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (u.count(letters[i].symbol)) {
      mark[i] = true;
      ++count;
    }
  }
  const std::size_t k = u.size();
  if (count != 2 * k) return std::nullopt;

  std::vector<OrientedPermutationModel> candidates;
  auto consider = [&](LinearWord a, LinearWord b) {
    if (!one_copy_each(a, u) || !one_copy_each(b, u)) return;
    candidates.push_back({std::move(a), std::move(b)});
  };
  auto runs = cyclic_runs(mark);
  if (runs.size() == 2) {
    if (runs[0].second != k || runs[1].second != k) return std::nullopt;
    consider(slice(letters, runs[0].first, k), slice(letters, runs[1].first, k));
  } else if (runs.size() == 1) {
    auto [start, len] = runs[0];
    if (len == letters.size()) {
      for (std::size_t s = 0; s < len; ++s)
        consider(slice(letters, s, k), slice(letters, s + k, k));
    } else {
      consider(slice(letters, start, k), slice(letters, start + k, k));
    }
  } else {
    return std::nullopt;
  }
  if (candidates.empty()) return std::nullopt;

  const Letter r0(*u.begin(), 0);
  for (auto& c : candidates)
    if (std::find(c.tau0.begin(), c.tau0.end(), r0) == c.tau0.end()) std::swap(c.tau0, c.tau1);
  return *std::min_element(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    return std::tie(a.tau0, a.tau1) < std::tie(b.tau0, b.tau1);
  });
}

std::string to_string(const Letter& l) {
  std::string s = std::to_string(l.symbol);
  if (!l.plain()) s += "^" + std::to_string(l.sup);
  return s;
}

std::string to_string(const LinearWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += to_string(w[i]);
  }
  return s;
}

std::string to_string(const CircularWord& w) { return "[" + to_string(w.letters()) + "]"; }

}  // namespace carc
