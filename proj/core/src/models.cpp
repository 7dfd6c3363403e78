#include "carc/models.hpp"

#include <algorithm>
#include <optional>

namespace carc {

int vertex_count(const std::vector<Letter>& letters) {
  if (letters.size() % 2 != 0) throw std::invalid_argument("arc word has odd length");
  const int n = static_cast<int>(letters.size() / 2);
  std::vector<bool> seen(letters.size(), false);
  for (const auto& l : letters) {
    if (l.plain() || l.symbol < 0 || l.symbol >= n)
      throw std::invalid_argument("letter " + to_string(l) + " is not an endpoint of vertices 0.." +
                                  std::to_string(n - 1));
    auto slot = static_cast<std::size_t>(2 * l.symbol + l.sup);
    if (seen[slot]) throw std::invalid_argument("repeated letter " + to_string(l));
    seen[slot] = true;
  }
  return n;
}

EndpointIndex::EndpointIndex(const std::vector<Letter>& letters, int n)
    : pos_(static_cast<std::size_t>(2 * n), 0), size_(letters.size()) {
  for (std::size_t i = 0; i < letters.size(); ++i)
    pos_[2 * letters[i].symbol + letters[i].sup] = i;
}

bool EndpointIndex::inside(int v, std::size_t p) const {
  const std::size_t a = pos(v, 0), b = pos(v, 1);
  return a < b ? (a < p && p < b) : (p > a || p < b);
}

PairRelation EndpointIndex::relation(int v, int u) const {
  const int u_in_v = inside(v, pos(u, 0)) + inside(v, pos(u, 1));
  const int v_in_u = inside(u, pos(v, 0)) + inside(u, pos(v, 1));
  if (u_in_v == 0 && v_in_u == 0) return PairRelation::Disjoint;
  if (u_in_v == 2 && v_in_u == 0) return PairRelation::Contains;
  if (u_in_v == 0 && v_in_u == 2) return PairRelation::ContainedIn;
  if (u_in_v == 2 && v_in_u == 2) return PairRelation::CoverCircle;
  if (u_in_v == 1 && v_in_u == 1) return PairRelation::Overlap;
  throw std::logic_error("inconsistent endpoint positions");
}

Graph intersection_graph(const CircularWord& w) {
  const int n = vertex_count(w.letters());
  EndpointIndex idx(w.letters(), n);
  Graph g(n);
  for (int v = 0; v < n; ++v)
    for (int u = v + 1; u < n; ++u)
      if (idx.relation(v, u) != PairRelation::Disjoint) g.add_edge(v, u);
  return g;
}

ArcModel::ArcModel(CircularWord w) : word(std::move(w)), graph(intersection_graph(word)) {}

namespace {

std::vector<Violation> violations_of(const std::vector<std::vector<PairRelation>>& rel,
                                     const Graph& g, const std::vector<Letter>& letters) {
  const int n = g.order();
  EndpointIndex idx(letters, n);
  std::vector<Violation> out;
  for (int v = 0; v < n; ++v) {
    for (int u = v + 1; u < n; ++u) {
      const PairRelation actual = idx.relation(v, u);
      const bool meets = actual != PairRelation::Disjoint;
      if (meets != g.adjacent(v, u)) {
        out.push_back({Violation::Kind::Intersection, v, u, rel[v][u], actual});
      } else if (actual != rel[v][u]) {
        out.push_back({Violation::Kind::Relation, v, u, rel[v][u], actual});
      }
    }
  }
  return out;
}

// Mutable model used while normalizing.
class Workspace {
 public:
  Workspace(const Graph& g, std::vector<Letter> letters, std::vector<EndpointMove>* trace)
      : g_(g),
        rel_(relation_matrix(g)),
        w_(std::move(letters)),
        idx_(w_, g.order()),
        count_(violations().size()),
        trace_(trace) {}

  const std::vector<Letter>& letters() const { return w_; }
  std::size_t violation_count() const { return count_; }
  std::vector<Violation> violations() const { return violations_of(rel_, g_, w_); }
  const std::vector<std::vector<PairRelation>>& rel() const { return rel_; }

  std::size_t index_of(Letter l) const {
    return static_cast<std::size_t>(std::find(w_.begin(), w_.end(), l) - w_.begin());
  }

  // Moves `l` outward over one neighbour; fails if that changes the graph.
  bool step(Letter l, std::vector<EndpointMove>& log) {
    const std::size_t len = w_.size();
    const std::size_t i = index_of(l);
    const std::size_t j = l.sup == 1 ? (i + 1) % len : (i + len - 1) % len;
    const Letter passed = w_[j];
    if (passed.symbol == l.symbol) return false;
    const bool was_bad = bad(l.symbol, passed.symbol);
    swap_at(i, j);
    const PairRelation now = idx_.relation(l.symbol, passed.symbol);
    if ((now != PairRelation::Disjoint) != g_.adjacent(l.symbol, passed.symbol)) {
      swap_at(i, j);
      return false;
    }
    count_ = count_ - was_bad + bad(l.symbol, passed.symbol);
    log.push_back({l, passed});
    return true;
  }

  // Moves `l` outward until it has passed `target`.
  bool move_past(Letter l, Letter target, std::vector<EndpointMove>& log) {
    for (std::size_t guard = 0; guard < w_.size(); ++guard) {
      if (!step(l, log)) return false;
      if (log.back().passed == target) return true;
    }
    return false;
  }

  void commit(const std::vector<EndpointMove>& log) {
    if (trace_) trace_->insert(trace_->end(), log.begin(), log.end());
  }

  // Applies `attempt` and keeps it only if the violation count drops.
  template <class F>
  bool attempt(F&& f) {
    const auto saved = w_;
    const EndpointIndex saved_idx = idx_;
    const std::size_t before = count_;
    std::vector<EndpointMove> log;
    if (f(log) && count_ < before) {
      commit(log);
      return true;
    }
    w_ = saved;
    idx_ = saved_idx;
    count_ = before;
    return false;
  }

 private:
  bool bad(int v, int u) const { return idx_.relation(v, u) != rel_[v][u]; }

  void swap_at(std::size_t i, std::size_t j) {
    std::swap(w_[i], w_[j]);
    idx_.set(w_[i], i);
    idx_.set(w_[j], j);
  }

  const Graph& g_;
  std::vector<std::vector<PairRelation>> rel_;
  std::vector<Letter> w_;
  EndpointIndex idx_;
  std::size_t count_;
  std::vector<EndpointMove>* trace_;
};

// Contains violation: with v^0 u^0 v^1 u^1, v^1 travels past u^1 (or the mirror).
bool fix_contains(Workspace& ws, int v, int u) {
  return ws.attempt([&](std::vector<EndpointMove>& log) {
    EndpointIndex idx(ws.letters(), static_cast<int>(ws.letters().size() / 2));
    if (idx.inside(v, idx.pos(u, 0))) return ws.move_past(Letter(v, 1), Letter(u, 1), log);
    return ws.move_past(Letter(v, 0), Letter(u, 0), log);
  });
}

// CoverCircle violation with v^0 u^0 v^1 u^1: u^1 and v^0 meet inside the gap
// from u^1 to v^0, at the split point given.
bool fix_cover_at(Workspace& ws, int v, int u, std::size_t split) {
  return ws.attempt([&](std::vector<EndpointMove>& log) {
    const std::size_t len = ws.letters().size();
    for (std::size_t k = 0; k < split; ++k)
      if (!ws.step(Letter(u, 1), log)) return false;
    while (true) {
      const std::size_t iv = ws.index_of(Letter(v, 0));
      const Letter before = ws.letters()[(iv + len - 1) % len];
      if (!ws.step(Letter(v, 0), log)) return false;
      if (before == Letter(u, 1)) return true;
    }
  });
}

bool fix_cover(Workspace& ws, int v, int u) {
  EndpointIndex idx(ws.letters(), static_cast<int>(ws.letters().size() / 2));
  if (!idx.inside(v, idx.pos(u, 0))) std::swap(v, u);
  const auto& w = ws.letters();
  const std::size_t len = w.size();
  const std::size_t from = idx.pos(u, 1), to = idx.pos(v, 0);
  const std::size_t gap = (to + len - from - 1) % len;
  for (std::size_t split = 0; split <= gap; ++split)
    if (fix_cover_at(ws, v, u, split)) return true;
  return false;
}

// Best single-endpoint outward move, accepted only if it lowers the count.
bool greedy_move(Workspace& ws) {
  const int n = static_cast<int>(ws.letters().size() / 2);
  const std::size_t before = ws.violation_count();
  std::optional<std::vector<EndpointMove>> best;
  std::size_t best_count = before;
  const auto saved = ws.letters();
  for (int v = 0; v < n; ++v) {
    for (int sup = 0; sup < 2; ++sup) {
      std::vector<EndpointMove> log;
      Workspace trial = ws;
      while (trial.step(Letter(v, sup), log)) {
        const std::size_t c = trial.violation_count();
        if (c < best_count) {
          best_count = c;
          best = log;
        }
        if (log.size() > saved.size()) break;
      }
    }
  }
  if (!best) return false;
  return ws.attempt([&](std::vector<EndpointMove>& log) {
    for (const auto& mv : *best)
      if (!ws.step(mv.letter, log)) return false;
    return true;
  });
}

}  // namespace

std::vector<Violation> check_normalized(const Graph& g, const ArcModel& m) {
  if (g.order() != m.order()) throw std::invalid_argument("model and graph differ in order");
  return violations_of(relation_matrix(g), g, m.word.letters());
}

ArcModel normalize(const Graph& g, const ArcModel& m, std::vector<EndpointMove>* trace) {
  if (!twin_free_and_universal_free(g))
    throw NormalizationError("graph has twins or universal vertices");
  if (m.graph != g) throw NormalizationError("model does not represent the graph");
  const int n = g.order();
  Workspace ws(g, m.word.letters(), trace);
  const auto& rel = ws.rel();
  const std::size_t budget = 4 * static_cast<std::size_t>(n) * n + 4;
  for (std::size_t round = 0; round < budget; ++round) {
    auto bad = ws.violations();
    if (bad.empty()) return ArcModel(CircularWord(ws.letters()));

    // Containments first, widest container first.
    std::vector<std::pair<int, int>> contains, covers;
    for (const auto& x : bad) {
      if (x.kind != Violation::Kind::Relation) throw NormalizationError("intersection lost");
      if (rel[x.v][x.u] == PairRelation::Contains) contains.emplace_back(x.v, x.u);
      else if (rel[x.v][x.u] == PairRelation::ContainedIn) contains.emplace_back(x.u, x.v);
      else if (rel[x.v][x.u] == PairRelation::CoverCircle) covers.emplace_back(x.v, x.u);
    }
    std::stable_sort(contains.begin(), contains.end(), [&](auto a, auto b) {
      return g.degree(a.first) > g.degree(b.first);
    });
    bool progressed = false;
    for (auto [v, u] : contains)
      if ((progressed = fix_contains(ws, v, u))) break;
    if (!progressed && contains.empty())
      for (auto [v, u] : covers)
        if ((progressed = fix_cover(ws, v, u))) break;
    if (!progressed) progressed = greedy_move(ws);
    if (!progressed) {
      for (auto [v, u] : covers)
        if ((progressed = fix_cover(ws, v, u))) break;
    }
    if (!progressed)
      throw NormalizationError("no outward move reduces the " + std::to_string(bad.size()) +
                               " remaining violations");
  }
  throw NormalizationError("normalization did not converge");
}

ChordModel arcs_to_chords(const ArcModel& m) { return {m.word, overlap_graph(m.graph)}; }

ArcModel chords_to_arcs(const ChordModel& c, const Graph& g) {
  VertexList all(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) all[v] = v;
  if (!check_conformal(g, c.word, all)) throw std::invalid_argument("chord model is not conformal");
  return ArcModel(c.word);
}

bool check_conformal(const Graph& g, const CircularWord& w, const VertexList& u) {
  return check_conformal(side_sets(g), g, w, u);
}

bool check_conformal(const SideSets& sides, const Graph& g, const CircularWord& w,
                     const VertexList& u) {
  const int n = g.order();
  std::vector<std::size_t> pos(static_cast<std::size_t>(2 * n), w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& l = w[i];
    if (l.plain() || l.symbol < 0 || l.symbol >= n) continue;
    pos[2 * l.symbol + l.sup] = i;
  }
  const std::size_t len = w.size();
  auto inside = [&](int v, std::size_t p) {
    const std::size_t a = pos[2 * v], b = pos[2 * v + 1];
    return a < b ? (a < p && p < b) : (p > a || p < b);
  };
  for (int v : u)
    if (pos[2 * v] == len || pos[2 * v + 1] == len) return false;
  for (int v : u) {
    for (int x : u) {
      if (x == v) continue;
      const int in = inside(v, pos[2 * x]) + inside(v, pos[2 * x + 1]);
      if (sides.left[v].test(x)) {
        if (in != 2) return false;
      } else if (sides.right[v].test(x)) {
        if (in != 0) return false;
      } else if (in != 1) {
        return false;
      }
    }
  }
  return true;
}

ArcModel base_model(const ArcModel& m, const Representation& rep) {
  std::vector<int> new_id(static_cast<std::size_t>(m.order()), -1);
  for (std::size_t i = 0; i < rep.origin.size(); ++i) new_id[rep.origin[i]] = static_cast<int>(i);
  std::vector<Letter> letters;
  for (const auto& l : m.word.letters())
    if (new_id[l.symbol] >= 0) letters.emplace_back(new_id[l.symbol], l.sup);
  return ArcModel(CircularWord(std::move(letters)));
}

}  // namespace carc
