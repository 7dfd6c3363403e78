#include "carc/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace carc::oracle {

void for_each_arc_word(int n, const std::function<void(const std::vector<Letter>&)>& visit) {
  if (n <= 0) return;
  std::vector<Letter> rest;
  rest.emplace_back(0, 1);
  for (int v = 1; v < n; ++v) {
    rest.emplace_back(v, 0);
    rest.emplace_back(v, 1);
  }
  std::sort(rest.begin(), rest.end());
  std::vector<Letter> word(rest.size() + 1);
  word[0] = Letter(0, 0);
  do {
    std::copy(rest.begin(), rest.end(), word.begin() + 1);
    visit(word);
  } while (std::next_permutation(rest.begin(), rest.end()));
}

std::vector<ArcModel> gen_arc_models(int n) {
  std::vector<ArcModel> out;
  for_each_arc_word(n, [&](const std::vector<Letter>& w) { out.emplace_back(CircularWord(w)); });
  return out;
}

namespace {

// Relative positions of the endpoints of two arcs; true if they share a point.
bool arcs_meet(std::size_t a0, std::size_t a1, std::size_t b0, std::size_t b1) {
  auto within = [](std::size_t s, std::size_t e, std::size_t p) { return s < e ? (s < p && p < e) : (p > s || p < e); };
  return within(a0, a1, b0) || within(a0, a1, b1) || within(b0, b1, a0) || within(b0, b1, a1);
}

}  // namespace

Graph arc_graph(const std::vector<Letter>& word) {
  const int n = static_cast<int>(word.size() / 2);
  std::vector<std::size_t> p0(n), p1(n);
  for (std::size_t i = 0; i < word.size(); ++i) (word[i].sup == 0 ? p0 : p1)[word[i].symbol] = i;
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (arcs_meet(p0[a], p1[a], p0[b], p1[b])) g.add_edge(a, b);
  return g;
}

bool brute_iso(const Graph& g, const Graph& h) {
  const int n = g.order();
  if (n != h.order()) return false;
  if (n > 12) throw std::invalid_argument("brute_iso is limited to 12 vertices");
  std::vector<int> dg(n), dh(n);
  for (int v = 0; v < n; ++v) {
    dg[v] = g.degree(v);
    dh[v] = h.degree(v);
  }
  {
    auto a = dg, b = dh;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return dg[a] > dg[b]; });
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> extend = [&](int k) {
    if (k == n) return true;
    const int v = order[k];
    for (int w = 0; w < n; ++w) {
      if (used[w] || dh[w] != dg[v]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j) ok = g.adjacent(v, order[j]) == h.adjacent(w, map[order[j]]);
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (extend(k + 1)) return true;
      used[w] = false;
    }
    map[v] = -1;
    return false;
  };
  return extend(0);
}

namespace {

// 1: u on the left of v, 0: on the right, 2: chords must cross.
std::vector<std::vector<int>> side_table(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint32_t> nb(n, 0);
  for (int v = 0; v < n; ++v) {
    nb[v] |= 1u << v;
    for (int u = 0; u < n; ++u)
      if (g.adjacent(v, u)) nb[v] |= 1u << u;
  }
  const std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);
  auto strictly_inside = [](std::uint32_t a, std::uint32_t b) { return (a & b) == a && a != b; };
  auto all_inside = [&](std::uint32_t ws, std::uint32_t container) {
    for (int w = 0; w < n; ++w)
      if ((ws >> w & 1) && !strictly_inside(nb[w], container)) return false;
    return true;
  };
  std::vector<std::vector<int>> side(n, std::vector<int>(n, -1));
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      if (!(nb[v] >> u & 1)) side[v][u] = 0;
      else if (strictly_inside(nb[u], nb[v])) side[v][u] = 1;
      else if (strictly_inside(nb[v], nb[u])) side[v][u] = 0;
      else if ((nb[v] | nb[u]) == all && all_inside(nb[v] & ~nb[u], nb[v]) && all_inside(nb[u] & ~nb[v], nb[u]))
        side[v][u] = 1;
      else side[v][u] = 2;
    }
  }
  return side;
}

}  // namespace

std::vector<CircularWord> brute_conformal_models(const Graph& g) {
  const int n = g.order();
  if (n > 9) throw std::invalid_argument("brute_conformal_models is limited to 9 vertices");
  if (n == 0) return {};
  const auto side = side_table(g);
  std::vector<Letter> word{Letter(0, 0)};
  std::vector<int> placed(static_cast<std::size_t>(2 * n), -1);  // position of each letter
  placed[0] = 0;
  std::vector<CircularWord> out;

  // Letters not yet placed all land in the gap before 0^0, past every placed
  // letter, so a pair is decided once one of its chords is complete.
  const int later = 2 * n;
  auto at = [&](int v, int s) { return placed[2 * v + s] >= 0 ? placed[2 * v + s] : later; };
  auto inside = [&](int v, int p) {
    const int a = at(v, 0), b = at(v, 1);
    return a < b ? (a < p && p < b) : (p > a || p < b);
  };
  auto pair_ok = [&](int v, int u) {
    const int in_v = inside(v, at(u, 0)) + inside(v, at(u, 1));
    const int in_u = inside(u, at(v, 0)) + inside(u, at(v, 1));
    const auto want = [](int s, int in) { return s == 1 ? in == 2 : s == 0 ? in == 0 : in == 1; };
    return want(side[v][u], in_v) && want(side[u][v], in_u);
  };

  std::function<void()> grow = [&]() {
    if (static_cast<int>(word.size()) == 2 * n) {
      out.emplace_back(word);
      return;
    }
    for (int v = 0; v < n; ++v) {
      for (int s = 0; s < 2; ++s) {
        if (placed[2 * v + s] >= 0) continue;
        placed[2 * v + s] = static_cast<int>(word.size());
        word.emplace_back(v, s);
        bool ok = true;
        const bool complete = placed[2 * v + 1 - s] >= 0;
        for (int u = 0; u < n && ok; ++u) {
          if (u == v) continue;
          const bool u_complete = placed[2 * u] >= 0 && placed[2 * u + 1] >= 0;
          const bool u_started = placed[2 * u] >= 0 || placed[2 * u + 1] >= 0;
          if (u_complete || (complete && u_started)) ok = pair_ok(v, u);
        }
        if (ok) grow();
        word.pop_back();
        placed[2 * v + s] = -1;
      }
    }
  };
  grow();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexList> brute_modules(const Graph& g) {
  const int n = g.order();
  if (n > 16) throw std::invalid_argument("brute_modules is limited to 16 vertices");
  std::vector<VertexList> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int z = 0; z < n && ok; ++z) {
      if (mask >> z & 1) continue;
      bool seen_adj = false, seen_non = false;
      for (int x = 0; x < n; ++x)
        if (mask >> x & 1) (g.adjacent(z, x) ? seen_adj : seen_non) = true;
      ok = !(seen_adj && seen_non);
    }
    if (!ok) continue;
    VertexList m;
    for (int x = 0; x < n; ++x)
      if (mask >> x & 1) m.push_back(x);
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<VertexList> brute_strong_modules(const Graph& g) {
  const auto all = brute_modules(g);
  std::vector<VertexList> out;
  for (const auto& a : all) {
    bool strong = true;
    for (const auto& b : all) {
      VertexList common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      if (!common.empty() && common.size() < a.size() && common.size() < b.size()) strong = false;
    }
    if (strong) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t brute_transitive_orientation_count(const Graph& g) {
  const auto edges = g.edges();
  if (edges.size() > 24) throw std::invalid_argument("too many edges for brute force");
  const int n = g.order();
  std::size_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
    std::vector<std::vector<bool>> arc(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [a, b] = edges[i];
      if (mask >> i & 1) arc[b][a] = true;
      else arc[a][b] = true;
    }
    bool transitive = true;
    for (int a = 0; a < n && transitive; ++a)
      for (int b = 0; b < n && transitive; ++b)
        if (arc[a][b])
          for (int c = 0; c < n && transitive; ++c)
            if (arc[b][c] && !arc[a][c]) transitive = false;
    count += transitive;
  }
  return count;
}

std::vector<CorpusEntry> build_corpus(int max_n) {
  std::vector<CorpusEntry> out;
  for (int n = 1; n <= max_n; ++n) {
    std::map<std::vector<std::pair<int, int>>, std::vector<Letter>> labelled;
    for_each_arc_word(n, [&](const std::vector<Letter>& w) {
      auto edges = arc_graph(w).edges();
      labelled.emplace(std::move(edges), w);
    });
    std::map<std::vector<int>, std::vector<std::size_t>> by_degrees;
    std::vector<CorpusEntry> level;
    for (const auto& [edges, w] : labelled) {
      Graph g = arc_graph(w);
      std::vector<int> deg;
      for (int v = 0; v < n; ++v) deg.push_back(g.degree(v));
      std::sort(deg.begin(), deg.end());
      auto& bucket = by_degrees[deg];
      bool fresh = true;
      for (std::size_t i : bucket)
        if (brute_iso(level[i].graph, g)) fresh = false;
      if (!fresh) continue;
      bucket.push_back(level.size());
      level.push_back({g, ArcModel(CircularWord(w))});
    }
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

namespace {

std::string word_line(const CircularWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += "v" + std::to_string(w[i].symbol) + "^" + std::to_string(w[i].sup);
  }
  return s;
}

Letter parse_token(const std::string& tok) {
  const auto caret = tok.find('^');
  if (tok.size() < 4 || tok[0] != 'v' || caret == std::string::npos || caret + 2 != tok.size())
    throw std::invalid_argument("bad corpus token '" + tok + "'");
  const int sup = tok.back() - '0';
  if (sup != 0 && sup != 1) throw std::invalid_argument("bad corpus token '" + tok + "'");
  return Letter(std::stoi(tok.substr(1, caret - 1)), sup);
}

}  // namespace

void write_corpus(std::ostream& out, int max_n, const std::vector<CorpusEntry>& corpus) {
  out << "n " << max_n << " count " << corpus.size() << '\n';
  for (const auto& e : corpus) out << word_line(e.model.word) << '\n';
}

std::vector<CorpusEntry> read_corpus(std::istream& in, int* max_n) {
  std::string tag1, tag2;
  int n = 0;
  std::size_t count = 0;
  if (!(in >> tag1 >> n >> tag2 >> count) || tag1 != "n" || tag2 != "count")
    throw std::invalid_argument("corpus header must read 'n <n> count <k>'");
  if (max_n) *max_n = n;
  std::vector<CorpusEntry> out;
  std::string line;
  std::getline(in, line);
  while (out.size() < count && std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<Letter> w;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) w.push_back(parse_token(tok));
    ArcModel m{CircularWord(w)};
    out.push_back({arc_graph(w), m});
  }
  if (out.size() != count) throw std::invalid_argument("corpus file is truncated");
  return out;
}

}  // namespace carc::oracle
