#include "carc/tuple_sort.hpp"

#include <algorithm>
#include <numeric>

namespace carc {

std::size_t least_rotation_index(std::span<const std::uint64_t> s) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<long> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    long i = f[j - k - 1];
    const std::uint64_t sj = s[j % n];
    while (i != -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && sj != s[k % n]) {
      if (sj < s[k % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

Tuple least_rotation(std::span<const std::uint64_t> t) {
  const std::size_t k = least_rotation_index(t);
  Tuple out(t.begin() + static_cast<long>(k), t.end());
  out.insert(out.end(), t.begin(), t.begin() + static_cast<long>(k));
  return out;
}

void sort_tuple_entries(std::vector<Tuple>& ts) {
  std::uint64_t top = 0;
  std::size_t total = 0;
  for (const auto& t : ts) {
    total += t.size();
    for (auto x : t) top = std::max(top, x);
  }
  if (total == 0) return;
  // Entries are bucketed by value once; sweeping the buckets in order
  // rebuilds every tuple with its entries ascending.
  std::vector<std::size_t> count(static_cast<std::size_t>(top) + 2, 0);
  for (const auto& t : ts)
    for (auto x : t) ++count[x + 1];
  std::partial_sum(count.begin(), count.end(), count.begin());
  std::vector<std::size_t> owner(total);
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (auto x : ts[i]) owner[count[x]++] = i;
  std::vector<std::size_t> fill(ts.size(), 0);
  // count[x] now marks the end of bucket x; walk buckets to recover values.
  std::size_t idx = 0;
  for (std::uint64_t x = 0; x <= top; ++x) {
    const std::size_t end = count[x];
    for (; idx < end; ++idx) ts[owner[idx]][fill[owner[idx]]++] = x;
  }
}

LexOrder lex_sort_tuples(const std::vector<Tuple>& ts) {
  const std::size_t m = ts.size();
  LexOrder out;
  out.group.assign(m, 0);
  if (m == 0) return out;
  std::size_t lmax = 0;
  std::uint64_t top = 0;
  for (const auto& t : ts) {
    lmax = std::max(lmax, t.size());
    for (auto x : t) top = std::max(top, x);
  }
  const std::size_t range = static_cast<std::size_t>(top) + 1;

  // Distinct values present at each position, ascending: bucket all
  // (position, value) pairs by value, then stably by position.
  std::vector<std::vector<std::size_t>> by_value(range);
  for (const auto& t : ts)
    for (std::size_t j = 0; j < t.size(); ++j) by_value[t[j]].push_back(j);
  std::vector<std::vector<std::uint64_t>> present(lmax);
  for (std::uint64_t x = 0; x < range; ++x)
    for (std::size_t j : by_value[x])
      if (present[j].empty() || present[j].back() != x) present[j].push_back(x);

  std::vector<std::vector<std::size_t>> by_length(lmax + 1);
  for (std::size_t i = 0; i < m; ++i) by_length[ts[i].size()].push_back(i);

  std::vector<std::size_t> queue;
  std::vector<std::vector<std::size_t>> bucket(range);
  for (std::size_t j = lmax; j >= 1; --j) {
    std::vector<std::size_t> next = by_length[j];
    next.insert(next.end(), queue.begin(), queue.end());
    for (std::size_t i : next) bucket[ts[i][j - 1]].push_back(i);
    queue.clear();
    for (auto x : present[j - 1]) {
      queue.insert(queue.end(), bucket[x].begin(), bucket[x].end());
      bucket[x].clear();
    }
  }
  out.order = by_length[0];
  out.order.insert(out.order.end(), queue.begin(), queue.end());

  std::size_t rank = 0;
  for (std::size_t k = 0; k < m; ++k) {
    if (k > 0 && ts[out.order[k]] != ts[out.order[k - 1]]) ++rank;
    out.group[out.order[k]] = rank;
  }
  return out;
}

void sort_tuple_entries_generic(std::vector<Tuple>& ts) {
  for (auto& t : ts) std::sort(t.begin(), t.end());
}

LexOrder lex_sort_tuples_generic(const std::vector<Tuple>& ts) {
  LexOrder out;
  out.order.resize(ts.size());
  std::iota(out.order.begin(), out.order.end(), 0);
  std::stable_sort(out.order.begin(), out.order.end(), [&](std::size_t a, std::size_t b) { return ts[a] < ts[b]; });
  out.group.assign(ts.size(), 0);
  std::size_t rank = 0;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    if (k > 0 && ts[out.order[k]] != ts[out.order[k - 1]]) ++rank;
    out.group[out.order[k]] = rank;
  }
  return out;
}

}  // namespace carc
