#include "carc/moddecomp.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace carc {

std::string_view to_string(ModuleKind k) {
  switch (k) {
    case ModuleKind::Leaf: return "leaf";
    case ModuleKind::Serial: return "serial";
    case ModuleKind::Parallel: return "parallel";
    case ModuleKind::Prime: return "prime";
  }
  return "?";
}

int MDTree::leaf_of(int v) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].kind == ModuleKind::Leaf && nodes[i].vertices.front() == v) return static_cast<int>(i);
  throw std::out_of_range("vertex not in decomposition");
}

int MDTree::child_containing(int node, int v) const {
  for (int c : nodes[node].children) {
    const auto& vs = nodes[c].vertices;
    if (std::binary_search(vs.begin(), vs.end(), v)) return c;
  }
  throw std::out_of_range("vertex not below node");
}

namespace {

// Components of g[m] (complemented when `co` is set).
std::vector<VertexSet> components(const Graph& g, const VertexSet& m, bool co) {
  std::vector<VertexSet> out;
  VertexSet left = m;
  while (left.any()) {
    VertexSet comp(m.size());
    std::vector<std::size_t> stack{left.find_first()};
    comp.set(stack.back());
    left.reset(stack.back());
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      VertexSet next = co ? (left - g.neighbors(static_cast<int>(v))) : (left & g.neighbors(static_cast<int>(v)));
      for (auto u = next.find_first(); u != VertexSet::npos; u = next.find_next(u)) {
        comp.set(u);
        left.reset(u);
        stack.push_back(u);
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

// Least module of g[m] containing `seed`.
VertexSet module_closure(const Graph& g, const VertexSet& m, VertexSet seed) {
  bool grown = true;
  while (grown) {
    grown = false;
    VertexSet outside = m - seed;
    for (auto z = outside.find_first(); z != VertexSet::npos; z = outside.find_next(z)) {
      const VertexSet& nz = g.neighbors(static_cast<int>(z));
      if (nz.intersects(seed) && !seed.is_subset_of(nz)) {
        seed.set(z);
        grown = true;
      }
    }
  }
  return seed;
}

int build(const Graph& g, const VertexSet& m, int parent, int depth, MDTree& t) {
  const int id = static_cast<int>(t.nodes.size());
  t.nodes.push_back({});
  t.nodes[id].vertices = to_list(m);
  t.nodes[id].parent = parent;
  t.nodes[id].depth = depth;
  if (m.count() == 1) return id;

  std::vector<VertexSet> parts = components(g, m, false);
  ModuleKind kind = ModuleKind::Parallel;
  if (parts.size() == 1) {
    parts = components(g, m, true);
    kind = ModuleKind::Serial;
  }
  if (parts.size() == 1) {
    kind = ModuleKind::Prime;
    parts.clear();
    VertexSet left = m;
    while (left.any()) {
      const auto x = left.find_first();
      VertexSet part(m.size());
      part.set(x);
      // A proper closure lies inside the class of x.
      for (auto y = left.find_next(x); y != VertexSet::npos; y = left.find_next(y)) {
        if (part.test(y)) continue;
        VertexSet pair(m.size());
        pair.set(x);
        pair.set(y);
        VertexSet closure = module_closure(g, m, pair);
        if (closure != m) part |= closure;
      }
      left -= part;
      parts.push_back(std::move(part));
    }
  }
  std::sort(parts.begin(), parts.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.find_first() < b.find_first(); });
  t.nodes[id].kind = kind;
  for (const auto& p : parts) {
    const int c = build(g, p, id, depth + 1, t);
    t.nodes[id].children.push_back(c);
  }
  return id;
}

}  // namespace

MDTree modular_decomposition(const Graph& g, const VertexList& vertices) {
  MDTree t;
  VertexSet m(static_cast<std::size_t>(g.order()));
  if (vertices.empty()) m.set();
  else for (int v : vertices) m.set(v);
  if (m.none()) return t;
  build(g, m, -1, 0, t);
  return t;
}

bool is_module(const Graph& g, const VertexList& m, const VertexList& within) {
  VertexSet in = make_set(g.order(), m);
  VertexSet scope(static_cast<std::size_t>(g.order()));
  if (within.empty()) scope.set();
  else for (int v : within) scope.set(v);
  VertexSet outside = scope - in;
  for (auto z = outside.find_first(); z != VertexSet::npos; z = outside.find_next(z)) {
    const std::size_t hits = (g.neighbors(static_cast<int>(z)) & in).count();
    if (hits > 0 && hits < in.count()) return false;
  }
  return true;
}

std::pair<TransitiveOrientation, TransitiveOrientation> pm_to_orientations(
    const OrientedPermutationModel& p, const Graph& g) {
  if (p.tau0.size() != p.tau1.size()) throw std::invalid_argument("permutation model sides differ");
  std::map<int, std::size_t> p0, p1;
  for (std::size_t i = 0; i < p.tau0.size(); ++i) p0[p.tau0[i].symbol] = i;
  for (std::size_t i = 0; i < p.tau1.size(); ++i) p1[p.tau1[i].symbol] = i;
  if (p0.size() != p.tau0.size() || p1.size() != p.tau1.size())
    throw std::invalid_argument("permutation model repeats a vertex");
  TransitiveOrientation lt, prec;
  for (auto [x, px] : p0) {
    auto it = p1.find(x);
    if (it == p1.end()) throw std::invalid_argument("permutation model sides hold different vertices");
    for (auto [y, py] : p0) {
      if (x == y || px > py) continue;
      const bool same = p1.at(x) < p1.at(y);
      if (same != g.adjacent(x, y))
        throw std::invalid_argument("permutation model does not represent the graph");
      (same ? prec : lt).arcs.insert({x, y});
    }
  }
  return {lt, prec};
}

OrientedPermutationModel orientations_to_pm(const TransitiveOrientation& lt,
                                            const TransitiveOrientation& prec,
                                            const VertexList& vertices,
                                            const std::vector<Letter>& slot0) {
  auto first = [&](int a, int b) { return prec.has(a, b) || lt.has(a, b); };
  auto second = [&](int a, int b) { return prec.has(a, b) || lt.has(b, a); };
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      const int a = vertices[i], b = vertices[j];
      const int covered = prec.has(a, b) + prec.has(b, a) + lt.has(a, b) + lt.has(b, a);
      if (covered != 1) throw std::invalid_argument("orientations do not cover each pair exactly once");
    }
  auto ordered = [&](auto before) {
    VertexList order = vertices;
    std::sort(order.begin(), order.end(), before);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = i + 1; j < order.size(); ++j)
        if (!before(order[i], order[j])) throw std::invalid_argument("orientations are not transitive");
    return order;
  };
  std::map<int, Letter> zero;
  for (int v : vertices) zero[v] = Letter(v, 0);
  for (const auto& l : slot0) zero[l.symbol] = l;
  OrientedPermutationModel p;
  for (int v : ordered(first)) p.tau0.push_back(zero.at(v));
  for (int v : ordered(second)) p.tau1.push_back(zero.at(v).flipped());
  return p;
}

namespace {

// Orientation of the quotient of a prime node by Gamma-forcing, as pairs of
// child positions. Empty when the quotient has no transitive orientation.
std::optional<std::vector<std::pair<int, int>>> force_prime_quotient(const Graph& g, const std::vector<int>& reps) {
  const int k = static_cast<int>(reps.size());
  auto adj = [&](int a, int b) { return g.adjacent(reps[a], reps[b]); };
  std::vector<std::vector<int>> dir(k, std::vector<int>(k, 0));  // 1: a->b, -1: b->a
  std::deque<std::pair<int, int>> queue;
  bool conflict = false;
  auto orient = [&](int a, int b) {
    if (dir[a][b] == 1) return;
    if (dir[a][b] == -1) {
      conflict = true;
      return;
    }
    dir[a][b] = 1;
    dir[b][a] = -1;
    queue.emplace_back(a, b);
  };
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (a == b || !adj(a, b) || dir[a][b] != 0) continue;
      orient(a, b);
      while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        for (int z = 0; z < k; ++z) {
          if (z == x || z == y) continue;
          if (adj(x, z) && !adj(y, z)) orient(x, z);
          if (adj(z, y) && !adj(z, x)) orient(z, y);
        }
      }
    }
  }
  if (conflict) return std::nullopt;
  std::vector<std::pair<int, int>> arcs;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (dir[a][b] == 1) arcs.emplace_back(a, b);
  for (auto [a, b] : arcs)
    for (int c = 0; c < k; ++c)
      if (dir[b][c] == 1 && dir[a][c] != 1) return std::nullopt;
  return arcs;
}

struct NodeChoices {
  int node;
  std::vector<std::vector<std::pair<int, int>>> options;  // child-position arcs
};

}  // namespace

std::size_t count_transitive_orientations(const MDTree& t) {
  std::size_t total = 1;
  for (const auto& node : t.nodes) {
    if (node.kind == ModuleKind::Prime) total *= 2;
    if (node.kind == ModuleKind::Serial)
      for (std::size_t i = 2; i <= node.children.size(); ++i) total *= i;
  }
  return total;
}

std::vector<TransitiveOrientation> enumerate_transitive_orientations(
    const Graph& g, const MDTree& t, const std::optional<TransitiveOrientation>& seed) {
  std::vector<NodeChoices> choices;
  for (std::size_t id = 0; id < t.nodes.size(); ++id) {
    const auto& node = t.nodes[id];
    const int k = static_cast<int>(node.children.size());
    NodeChoices nc{static_cast<int>(id), {}};
    if (node.kind == ModuleKind::Serial) {
      std::vector<int> perm(k);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<std::pair<int, int>> arcs;
        for (int i = 0; i < k; ++i)
          for (int j = i + 1; j < k; ++j) arcs.emplace_back(perm[i], perm[j]);
        nc.options.push_back(std::move(arcs));
      } while (std::next_permutation(perm.begin(), perm.end()));
    } else if (node.kind == ModuleKind::Prime) {
      std::vector<int> reps;
      for (int c : node.children) reps.push_back(t.nodes[c].vertices.front());
      std::vector<std::pair<int, int>> arcs;
      if (seed) {
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b)
            if (a != b && g.adjacent(reps[a], reps[b]) && seed->has(reps[a], reps[b])) arcs.emplace_back(a, b);
      } else {
        auto forced = force_prime_quotient(g, reps);
        if (!forced) return {};
        arcs = std::move(*forced);
      }
      std::vector<std::pair<int, int>> reversed;
      for (auto [a, b] : arcs) reversed.emplace_back(b, a);
      nc.options.push_back(std::move(arcs));
      nc.options.push_back(std::move(reversed));
    } else {
      continue;
    }
    choices.push_back(std::move(nc));
  }

  std::vector<TransitiveOrientation> out;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    TransitiveOrientation o;
    for (std::size_t i = 0; i < choices.size(); ++i) {
      const auto& node = t.nodes[choices[i].node];
      for (auto [a, b] : choices[i].options[pick[i]])
        for (int x : t.nodes[node.children[a]].vertices)
          for (int y : t.nodes[node.children[b]].vertices) o.arcs.insert({x, y});
    }
    out.push_back(std::move(o));
    std::size_t i = 0;
    while (i < choices.size() && ++pick[i] == choices[i].options.size()) pick[i++] = 0;
    if (i == choices.size()) break;
  }
  return out;
}

}  // namespace carc
