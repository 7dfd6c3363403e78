#include "carc/pqsm.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <stdexcept>

namespace carc {

std::string_view to_string(RootKind k) {
  switch (k) {
    case RootKind::Serial: return "serial";
    case RootKind::Prime: return "prime";
    case RootKind::Parallel: return "parallel";
  }
  return "?";
}

std::string_view to_string(PQSKind k) {
  switch (k) {
    case PQSKind::Slot: return "S";
    case PQSKind::Q: return "Q";
    case PQSKind::P: return "P";
  }
  return "?";
}

namespace {

bool consistent(const CircularWord& w, const VertexList& u) {
  return consistent_permutation_model(w, u).has_value();
}

VertexList merged(const std::vector<VertexList>& parts) {
  VertexList out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t shift = 0; shift < a.size(); ++shift) {
    bool same = true;
    for (std::size_t i = 0; i < a.size() && same; ++i) same = a[(i + shift) % a.size()] == b[i];
    if (same) return true;
  }
  return false;
}

// Maximal unions of the given consistent modules that are again consistent.
// A consistent union occupies two runs of the word, each a chain of
// adjacent blocks of distinct members, so chains are all that is searched.
std::vector<VertexList> maximal_unions(const CircularWord& w, const std::vector<VertexList>& kids) {
  struct Block {
    std::size_t start;
    std::size_t length;
    int kid;
  };
  std::vector<Block> blocks;
  std::map<std::size_t, std::size_t> block_at;
  for (std::size_t i = 0; i < kids.size(); ++i) {
    auto pm = consistent_permutation_model(w, kids[i]);
    if (!pm) throw std::logic_error("child expected to be consistent");
    for (const auto* side : {&pm->tau0, &pm->tau1}) {
      block_at[*w.find(side->front())] = blocks.size();
      blocks.push_back({*w.find(side->front()), side->size(), static_cast<int>(i)});
    }
  }
  std::set<std::vector<int>> found;
  for (const auto& first : blocks) {
    std::vector<bool> used(kids.size(), false);
    std::vector<int> members;
    const Block* cur = &first;
    for (std::size_t steps = 0; steps < blocks.size(); ++steps) {
      if (used[cur->kid]) break;
      used[cur->kid] = true;
      members.push_back(cur->kid);
      std::vector<VertexList> parts;
      for (int k : members) parts.push_back(kids[k]);
      if (consistent(w, merged(parts))) {
        auto key = members;
        std::sort(key.begin(), key.end());
        found.insert(key);
      }
      auto next = block_at.find((cur->start + cur->length) % w.size());
      if (next == block_at.end()) break;
      cur = &blocks[next->second];
    }
  }
  std::vector<VertexList> out;
  std::vector<bool> covered(kids.size(), false);
  for (const auto& f : found) {
    bool maximal = true;
    for (const auto& h : found)
      if (h.size() > f.size() && std::includes(h.begin(), h.end(), f.begin(), f.end())) maximal = false;
    if (!maximal) continue;
    std::vector<VertexList> parts;
    for (int k : f) {
      if (covered[k]) throw std::logic_error("maximal consistent unions overlap");
      covered[k] = true;
      parts.push_back(kids[k]);
    }
    out.push_back(merged(parts));
  }
  return out;
}

struct Partial {
  bool whole = false;
  std::vector<VertexList> modules;
};

Partial solve(const MDTree& t, int node, const CircularWord& w) {
  const auto& nd = t.nodes[node];
  if (consistent(w, nd.vertices)) return {true, {}};
  Partial out;
  std::vector<VertexList> whole;
  for (int c : nd.children) {
    Partial r = solve(t, c, w);
    if (r.whole) whole.push_back(t.nodes[c].vertices);
    else out.modules.insert(out.modules.end(), r.modules.begin(), r.modules.end());
  }
  if (nd.kind == ModuleKind::Prime) {
    out.modules.insert(out.modules.end(), whole.begin(), whole.end());
  } else {
    auto unions = maximal_unions(w, whole);
    out.modules.insert(out.modules.end(), unions.begin(), unions.end());
  }
  return out;
}

std::vector<VertexList> top_modules(const MDTree& t) {
  if (t.empty() || t.nodes[0].kind == ModuleKind::Leaf)
    throw std::invalid_argument("overlap graph needs at least two vertices");
  std::vector<VertexList> out;
  for (int c : t.nodes[0].children) out.push_back(t.nodes[c].vertices);
  return out;
}

std::vector<CAModule> finish(std::vector<std::pair<VertexList, int>> found) {
  std::vector<CAModule> out;
  for (auto& [vs, comp] : found) out.push_back({vs, vs.front(), comp});
  std::sort(out.begin(), out.end(),
            [](const CAModule& a, const CAModule& b) { return a.representant < b.representant; });
  return out;
}

}  // namespace

std::vector<CAModule> compute_ca_modules(const Graph& gov, const MDTree& t, const ChordModel& phi) {
  (void)gov;
  const bool parallel = t.nodes.at(0).kind == ModuleKind::Parallel;
  const auto tops = top_modules(t);
  std::vector<std::pair<VertexList, int>> found;
  for (std::size_t i = 0; i < tops.size(); ++i) {
    const int comp = parallel ? static_cast<int>(i) : 0;
    Partial r = solve(t, t.nodes[0].children[i], phi.word);
    if (r.whole) found.emplace_back(tops[i], comp);
    else for (auto& m : r.modules) found.emplace_back(std::move(m), comp);
  }
  return finish(std::move(found));
}

std::vector<CAModule> ca_modules_definitional(const Graph& gov, const ChordModel& phi) {
  const MDTree t = modular_decomposition(gov);
  const bool parallel = t.nodes.at(0).kind == ModuleKind::Parallel;
  const auto tops = top_modules(t);
  std::vector<std::pair<VertexList, int>> found;
  for (std::size_t i = 0; i < tops.size(); ++i) {
    const auto& m = tops[i];
    if (m.size() > 24) throw std::invalid_argument("module too large for subset search");
    std::vector<VertexList> good;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m.size()); ++mask) {
      VertexList s;
      for (std::size_t b = 0; b < m.size(); ++b)
        if (mask >> b & 1) s.push_back(m[b]);
      if (is_module(gov, s) && consistent(phi.word, s)) good.push_back(std::move(s));
    }
    for (const auto& s : good) {
      bool maximal = true;
      for (const auto& h : good)
        if (h.size() > s.size() && std::includes(h.begin(), h.end(), s.begin(), s.end())) maximal = false;
      if (maximal) found.emplace_back(s, parallel ? static_cast<int>(i) : 0);
    }
  }
  return finish(std::move(found));
}

Metachord metachord_of(const ChordModel& phi, const CAModule& s) {
  auto pm = consistent_permutation_model(phi.word, s.vertices);
  if (!pm) throw std::invalid_argument("vertex set has no consistent permutation model");
  Metachord mc;
  mc.slot0 = pm->tau0;
  mc.slot1 = pm->tau1;
  std::sort(mc.slot0.begin(), mc.slot0.end());
  std::sort(mc.slot1.begin(), mc.slot1.end());
  mc.lt = pm_to_orientations(*pm, phi.graph).first;
  mc.base = std::move(*pm);
  return mc;
}

ModuleTree module_tree_of(const Graph& gov, const CAModule& s, const Metachord& mc) {
  ModuleTree mt;
  mt.md = modular_decomposition(gov, s.vertices);
  mt.order0.resize(mt.md.nodes.size());
  mt.order1.resize(mt.md.nodes.size());
  auto order_in = [&](const LinearWord& tau, const MDNode& node) {
    std::map<int, std::size_t> pos;
    for (std::size_t i = 0; i < tau.size(); ++i) pos[tau[i].symbol] = i;
    std::vector<std::pair<std::size_t, int>> firsts;
    for (int c : node.children) {
      const auto& vs = mt.md.nodes[c].vertices;
      std::size_t lo = tau.size(), hi = 0;
      for (int v : vs) {
        lo = std::min(lo, pos.at(v));
        hi = std::max(hi, pos.at(v));
      }
      if (hi - lo + 1 != vs.size()) throw std::logic_error("strong module not contiguous in base model");
      firsts.emplace_back(lo, c);
    }
    std::sort(firsts.begin(), firsts.end());
    std::vector<int> out;
    for (auto [p, c] : firsts) out.push_back(c);
    return out;
  };
  for (std::size_t i = 0; i < mt.md.nodes.size(); ++i) {
    if (mt.md.nodes[i].children.empty()) continue;
    mt.order0[i] = order_in(mc.base.tau0, mt.md.nodes[i]);
    mt.order1[i] = order_in(mc.base.tau1, mt.md.nodes[i]);
  }
  return mt;
}

bool separated(const SideSets& sides, const VertexList& q1, const VertexList& q2) {
  const int n = static_cast<int>(sides.left.size());
  VertexSet in1 = make_set(n, q1), in2 = make_set(n, q2);
  for (int v = 0; v < n; ++v) {
    if (in1.test(v) || in2.test(v)) continue;
    const bool l1 = sides.left[v].test(q1.front()), l2 = sides.left[v].test(q2.front());
    if (l1 != l2) return true;
  }
  return false;
}

std::vector<int> PQSTree::reflected_order(int node) const {
  std::vector<int> out(nodes[node].order.rbegin(), nodes[node].order.rend());
  for (int& x : out)
    if (nodes[x].kind == PQSKind::Slot) x = slot_node[nodes[x].module][1 - nodes[x].side];
  return out;
}

bool PQSTree::reflection_symmetric(int node) const {
  return cyclic_equal(nodes[node].order, reflected_order(node));
}

VertexList PQSTree::side_vertices(int node, int neighbor, const std::vector<CAModule>& modules) const {
  VertexList out;
  std::vector<int> stack{neighbor};
  std::vector<bool> seen(nodes.size(), false);
  seen[node] = seen[neighbor] = true;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    if (nodes[x].kind == PQSKind::Slot) {
      if (x == neighbor) out = modules[nodes[x].module].vertices;
      continue;
    }
    if (nodes[x].kind == PQSKind::Q)
      out.insert(out.end(), components[nodes[x].component].begin(), components[nodes[x].component].end());
    for (int y : nodes[x].order)
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PQSTree build_pqs_tree(const Graph& gov, const MDTree& t, const ChordModel& phi,
                       const std::vector<CAModule>& modules, const std::vector<Metachord>& mcs) {
  const int n = gov.order();
  PQSTree pqs;
  switch (t.nodes.at(0).kind) {
    case ModuleKind::Serial: pqs.root_kind = RootKind::Serial; break;
    case ModuleKind::Prime: pqs.root_kind = RootKind::Prime; break;
    case ModuleKind::Parallel: pqs.root_kind = RootKind::Parallel; break;
    case ModuleKind::Leaf: throw std::invalid_argument("overlap graph needs at least two vertices");
  }
  if (pqs.root_kind == RootKind::Parallel) pqs.components = top_modules(t);
  else pqs.components = {t.nodes[0].vertices};

  std::vector<int> comp_of(n, -1);
  for (std::size_t c = 0; c < pqs.components.size(); ++c) {
    for (int v : pqs.components[c]) comp_of[v] = static_cast<int>(c);
    pqs.q_node.push_back(static_cast<int>(pqs.nodes.size()));
    PQSNode q;
    q.kind = PQSKind::Q;
    q.component = static_cast<int>(c);
    pqs.nodes.push_back(q);
  }
  std::vector<int> slot_of(static_cast<std::size_t>(2 * n), -1);
  for (std::size_t m = 0; m < modules.size(); ++m) {
    std::array<int, 2> ids{};
    for (int side = 0; side < 2; ++side) {
      ids[side] = static_cast<int>(pqs.nodes.size());
      PQSNode s;
      s.kind = PQSKind::Slot;
      s.module = static_cast<int>(m);
      s.side = side;
      s.order = {pqs.q_node[modules[m].component]};
      pqs.nodes.push_back(s);
      for (const auto& l : side == 0 ? mcs[m].slot0 : mcs[m].slot1) slot_of[2 * l.symbol + l.sup] = ids[side];
    }
    pqs.slot_node.push_back(ids);
  }

  const auto& w = phi.word.letters();
  const std::size_t len = w.size();
  auto slot_at = [&](std::size_t i) { return slot_of[2 * w[i].symbol + w[i].sup]; };
  auto comp_at = [&](std::size_t i) { return comp_of[w[i].symbol]; };

  struct Gap {
    int comp;
    std::size_t last;   // position of the component letter before the gap
    std::size_t next;   // position of the component letter after the gap
    int p = -1;
  };
  std::vector<Gap> gaps;
  std::map<std::size_t, std::size_t> gap_ending_at;
  std::vector<std::vector<int>> tokens(pqs.components.size());  // >= 0 slot node, < 0 gap

  for (std::size_t c = 0; c < pqs.components.size(); ++c) {
    std::size_t start = len;
    for (std::size_t i = 0; i < len && start == len; ++i) {
      const std::size_t prev = (i + len - 1) % len;
      if (comp_at(i) == static_cast<int>(c) && (comp_at(prev) != static_cast<int>(c) || slot_at(i) != slot_at(prev)))
        start = i;
    }
    if (start == len) throw std::logic_error("component has no slot boundary");
    for (std::size_t k = 0; k < len; ++k) {
      const std::size_t i = (start + k) % len, prev = (i + len - 1) % len;
      const bool in = comp_at(i) == static_cast<int>(c);
      const bool prev_in = comp_at(prev) == static_cast<int>(c);
      if (in && (k == 0 || !prev_in || slot_at(i) != slot_at(prev))) {
        tokens[c].push_back(slot_at(i));
      } else if (!in && prev_in) {
        std::size_t j = i;
        while (comp_at(j) != static_cast<int>(c)) j = (j + 1) % len;
        gap_ending_at[j] = gaps.size();
        tokens[c].push_back(-static_cast<int>(gaps.size()) - 1);
        gaps.push_back({static_cast<int>(c), prev, j});
      }
    }
  }

  std::set<std::vector<int>> seen_members;
  for (std::size_t g = 0; g < gaps.size(); ++g) {
    if (gaps[g].p >= 0) continue;
    const int p = static_cast<int>(pqs.nodes.size());
    PQSNode pn;
    pn.kind = PQSKind::P;
    std::vector<int> members;
    std::size_t cur = g;
    while (gaps[cur].p < 0) {
      gaps[cur].p = p;
      pn.order.push_back(pqs.q_node[gaps[cur].comp]);
      members.push_back(gaps[cur].comp);
      auto it = gap_ending_at.find((gaps[cur].last + 1) % len);
      if (it == gap_ending_at.end()) throw std::logic_error("gap cycle broken");
      cur = it->second;
    }
    if (cur != g) throw std::logic_error("gap map is not a permutation");
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
      throw std::logic_error("component meets a P-node twice");
    if (!seen_members.insert(members).second) throw std::logic_error("duplicate P-node");
    pqs.nodes.push_back(std::move(pn));
  }

  for (std::size_t c = 0; c < pqs.components.size(); ++c) {
    auto& order = pqs.nodes[pqs.q_node[c]].order;
    for (int tok : tokens[c]) order.push_back(tok >= 0 ? tok : gaps[-tok - 1].p);
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::logic_error("slot or P-node repeated around a Q-node");
  }

  std::size_t degree_sum = 0;
  for (const auto& node : pqs.nodes) degree_sum += node.order.size();
  if (degree_sum != 2 * (pqs.nodes.size() - 1)) throw std::logic_error("PQS structure is not a tree");
  return pqs;
}

CircularWord extended_model(const CircularWord& phi, const PQSTree& pqs,
                            const std::vector<CAModule>& modules, int qnode) {
  const auto& comp = pqs.components.at(pqs.nodes.at(qnode).component);
  const auto& w = phi.letters();
  const std::size_t len = w.size();
  auto in = [&](std::size_t i) { return std::binary_search(comp.begin(), comp.end(), w[i].symbol); };
  std::size_t start = 0;
  while (start < len && !(in(start) && !in((start + len - 1) % len))) ++start;
  if (start == len) return CircularWord(std::vector<Letter>(w.begin(), w.end()));
  std::vector<Letter> out;
  for (std::size_t k = 0; k < len;) {
    const std::size_t i = (start + k) % len;
    if (in(i)) {
      out.push_back(w[i]);
      ++k;
      continue;
    }
    VertexList gap;
    while (k < len && !in((start + k) % len)) gap.push_back(w[(start + k++) % len].symbol);
    std::sort(gap.begin(), gap.end());
    gap.erase(std::unique(gap.begin(), gap.end()), gap.end());
    int p = -1;
    for (int nb : pqs.nodes[qnode].order)
      if (pqs.nodes[nb].kind == PQSKind::P && pqs.side_vertices(qnode, nb, modules) == gap) p = nb;
    if (p < 0) throw std::logic_error("gap does not match a P-node subtree");
    out.emplace_back(p, Letter::kPlain);
  }
  return CircularWord(std::move(out));
}

std::vector<VertexList> k_relation_prime(const Graph& gov, const SideSets& sides, const MDTree& t,
                                         int node) {
  const auto& q = t.nodes.at(node);
  if (q.kind != ModuleKind::Prime) throw std::invalid_argument("K relation needs a prime node");
  std::vector<VertexList> classes;
  for (int c : q.children) {
    const auto& m = t.nodes[c];
    VertexList rest;
    std::set_difference(q.vertices.begin(), q.vertices.end(), m.vertices.begin(), m.vertices.end(),
                        std::back_inserter(rest));
    if (m.kind == ModuleKind::Prime || m.kind == ModuleKind::Leaf) {
      classes.push_back(m.vertices);
      continue;
    }
    std::map<std::vector<int>, VertexList> groups;
    for (int v : m.vertices) {
      std::vector<int> key;
      if (m.kind == ModuleKind::Parallel) {
        for (int u : rest)
          if (!gov.adjacent(u, m.vertices.front())) key.push_back(sides.left[u].test(v) ? 1 : 0);
      } else {
        VertexList l, r;
        for (int u : rest) {
          if (sides.left[v].test(u)) l.push_back(u);
          if (sides.right[v].test(u)) r.push_back(u);
        }
        if (r < l) std::swap(l, r);
        key = l;
        key.push_back(-1);
        key.insert(key.end(), r.begin(), r.end());
      }
      groups[key].push_back(v);
    }
    for (auto& [key, vs] : groups) classes.push_back(std::move(vs));
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

std::vector<Letter> inside_set(const CircularWord& phi_q, const std::vector<Letter>& k0,
                               const std::vector<Letter>& k1) {
  const std::size_t len = phi_q.size();
  std::vector<Letter> out;
  for (const auto* side : {&k0, &k1}) {
    const auto* other = side == &k0 ? &k1 : &k0;
    std::vector<std::size_t> pos;
    for (const auto& l : *side) pos.push_back(phi_q.find(l).value());
    std::vector<bool> other_at(len, false);
    for (const auto& l : *other) other_at[phi_q.find(l).value()] = true;
    std::sort(pos.begin(), pos.end());
    // The block is the complement of the gap between consecutive letters of
    // this side that holds every letter of the other side.
    std::size_t chosen = pos.size();
    for (std::size_t i = 0; i < pos.size(); ++i) {
      const std::size_t from = pos[i], to = pos[(i + 1) % pos.size()];
      std::size_t hits = 0;
      for (std::size_t p = (from + 1) % len; p != to; p = (p + 1) % len) hits += other_at[p];
      if (hits == other->size()) chosen = i;
    }
    if (chosen == pos.size()) throw std::invalid_argument("letters do not form two blocks");
    const std::size_t begin = pos[(chosen + 1) % pos.size()], end = pos[chosen];
    for (std::size_t p = begin; p != end; p = (p + 1) % len)
      if (phi_q[p].plain()) out.push_back(phi_q[p]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PQSMTree build_pqsm(const ArcModel& normalized) {
  PQSMTree t;
  t.graph = normalized.graph;
  if (t.graph.order() < 2) throw std::invalid_argument("graph needs at least two vertices");
  ChordModel phi = arcs_to_chords(normalized);
  t.overlap = phi.graph;
  t.sides = side_sets(t.graph);
  VertexList all(static_cast<std::size_t>(t.graph.order()));
  for (int v = 0; v < t.graph.order(); ++v) all[v] = v;
  if (!check_conformal(t.sides, t.graph, phi.word, all))
    throw std::invalid_argument("model is not normalized");
  t.source = phi.word;
  t.overlap_md = modular_decomposition(t.overlap);
  t.modules = compute_ca_modules(t.overlap, t.overlap_md, phi);
  for (const auto& m : t.modules) {
    t.metachords.push_back(metachord_of(phi, m));
    t.module_trees.push_back(module_tree_of(t.overlap, m, t.metachords.back()));
  }
  t.pqs = build_pqs_tree(t.overlap, t.overlap_md, phi, t.modules, t.metachords);
  return t;
}

}  // namespace carc
