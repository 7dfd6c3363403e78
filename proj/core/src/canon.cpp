#include "carc/canon.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "carc/enumerate.hpp"

namespace carc {

std::vector<std::uint64_t> CanonTable::add_level(const std::vector<Entry>& items, const CanonOptions& opt) {
  std::vector<Tuple> keyed;
  keyed.reserve(items.size());
  for (const auto& it : items) {
    Tuple k{static_cast<std::uint64_t>(it.kind)};
    k.insert(k.end(), it.tuple.begin(), it.tuple.end());
    keyed.push_back(std::move(k));
  }
  const LexOrder lo = opt.counting_sorts ? lex_sort_tuples(keyed) : lex_sort_tuples_generic(keyed);
  const std::uint64_t base = next();
  std::vector<std::uint64_t> nums(items.size());
  std::size_t added = 0;
  for (std::size_t i : lo.order) {
    nums[i] = base + lo.group[i];
    if (lo.group[i] == added) {
      entries_.push_back(items[i]);
      ++added;
    }
  }
  return nums;
}

std::vector<std::uint64_t> CanonTable::linearize(int universals) const {
  std::vector<std::uint64_t> out{static_cast<std::uint64_t>(universals)};
  for (std::size_t k = entries_.size(); k-- > 0;) {
    out.push_back(k);
    out.push_back(static_cast<std::uint64_t>(entries_[k].kind));
    out.push_back(entries_[k].tuple.size());
    out.insert(out.end(), entries_[k].tuple.begin(), entries_[k].tuple.end());
  }
  return out;
}

std::map<DualMetachord, int> levels_of_metachords(const PQSMTree& t) {
  std::map<DualMetachord, int> out;
  for (std::size_t m = 0; m < t.module_trees.size(); ++m) {
    const auto& md = t.module_trees[m].md;
    for (std::size_t id = 0; id < md.nodes.size(); ++id)
      for (int f = 0; f < 2; ++f) out[{static_cast<int>(m), static_cast<int>(id), f}] = md.nodes[id].depth;
  }
  return out;
}

namespace {

std::vector<int> distances(const PQSTree& pqs, const std::vector<int>& sources, std::vector<int>* parent) {
  std::vector<int> dist(pqs.nodes.size(), -1);
  std::deque<int> queue;
  for (int s : sources) {
    dist[s] = 0;
    queue.push_back(s);
  }
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int y : pqs.nodes[x].order) {
      if (dist[y] >= 0) continue;
      dist[y] = dist[x] + 1;
      if (parent) (*parent)[y] = x;
      queue.push_back(y);
    }
  }
  return dist;
}

}  // namespace

RootedPQS root_pqs(const PQSTree& pqs) {
  const int n = pqs.size();
  std::vector<int> ecc(n, 0);
  for (int x = 0; x < n; ++x) {
    const auto d = distances(pqs, {x}, nullptr);
    ecc[x] = *std::max_element(d.begin(), d.end());
  }
  const int best = *std::min_element(ecc.begin(), ecc.end());
  std::vector<int> centers;
  for (int x = 0; x < n; ++x)
    if (ecc[x] == best) centers.push_back(x);
  RootedPQS r;
  r.parent.assign(n, -1);
  if (centers.size() == 1) {
    r.root = centers[0];
    r.centers = {centers[0], -1};
    r.level = distances(pqs, centers, &r.parent);
  } else if (centers.size() == 2) {
    r.centers = {centers[0], centers[1]};
    r.level = distances(pqs, centers, &r.parent);
    for (int& l : r.level) ++l;
    r.parent[centers[0]] = centers[1];
    r.parent[centers[1]] = centers[0];
  } else {
    throw std::logic_error("a tree has one or two centres");
  }
  r.max_level = *std::max_element(r.level.begin(), r.level.end());
  return r;
}

Tuple canon_metachord(const PQSMTree& t, const DualMetachord& l, const MetachordNums& num,
                      const std::vector<int>& mult, std::uint64_t num_next) {
  const auto& mt = t.module_trees.at(l.module);
  const auto& node = mt.md.nodes.at(l.node);
  const auto& mc = t.metachords[l.module];
  if (node.kind == ModuleKind::Leaf) {
    const int u = node.vertices.front();
    const auto& slot = l.flavor == 0 ? mc.slot0 : mc.slot1;
    const bool zero_here = std::binary_search(slot.begin(), slot.end(), Letter(u, 0));
    return {zero_here ? 1u : 0u, static_cast<std::uint64_t>(mult.at(u)) + num_next};
  }
  auto child_num = [&](int c) { return num.at({l.module, c, l.flavor}); };
  if (node.kind == ModuleKind::Serial) {
    std::vector<std::uint64_t> nums;
    for (int c : node.children) nums.push_back(child_num(c));
    std::sort(nums.begin(), nums.end());
    Tuple out;
    for (std::size_t i = 0; i < nums.size(); ++i) {
      out.push_back(nums[i]);
      out.push_back(i + 1 + num_next);
    }
    return out;
  }
  Tuple best;
  for (const auto& [o0, o1] : module_node_orders(mt, l.node)) {
    const auto& first = l.flavor == 0 ? o0 : o1;
    const auto& second = l.flavor == 0 ? o1 : o0;
    Tuple cand;
    for (int c : first) {
      const auto pos = static_cast<std::uint64_t>(std::find(second.begin(), second.end(), c) - second.begin());
      cand.push_back(child_num(c));
      cand.push_back(pos + 1 + num_next);
    }
    if (best.empty() || cand < best) best = std::move(cand);
  }
  return best;
}

namespace {

Tuple serial_root_tuple(const PQSMTree& t, const std::vector<std::array<std::uint64_t, 2>>& slot_num,
                        std::uint64_t num_next) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (const auto& s : slot_num) pairs.emplace_back(std::min(s[0], s[1]), std::max(s[0], s[1]));
  std::sort(pairs.begin(), pairs.end());
  const std::uint64_t sentinel = num_next + t.modules.size() - 1;
  Tuple out;
  for (const auto& p : pairs) {
    out.push_back(p.first);
    out.push_back(sentinel);
  }
  for (const auto& p : pairs) {
    out.push_back(p.second);
    out.push_back(sentinel);
  }
  return out;
}

}  // namespace

Tuple canon_qnode(const PQSMTree& t, const RootedPQS& r, int q, const std::vector<std::uint64_t>& node_num,
                  const std::vector<std::array<std::uint64_t, 2>>& slot_num, std::uint64_t num_next) {
  const auto& pqs = t.pqs;
  if (pqs.root_kind == RootKind::Serial) return serial_root_tuple(t, slot_num, num_next);
  const int parent = (r.root == q) ? -1 : r.parent[q];
  constexpr std::uint64_t kMarker = std::numeric_limits<std::uint64_t>::max();

  Tuple best;
  for (const auto& pi : {pqs.nodes[q].order, pqs.reflected_order(q)}) {
    const std::size_t len = pi.size();
    std::vector<Tuple> items(len);
    for (std::size_t k = 0; k < len; ++k) {
      const auto& node = pqs.nodes[pi[k]];
      if (node.kind == PQSKind::Slot) {
        const int partner = pqs.slot_node[node.module][1 - node.side];
        const std::size_t at = static_cast<std::size_t>(std::find(pi.begin(), pi.end(), partner) - pi.begin());
        const std::size_t dist = (at + len - k - 1) % len;
        items[k] = {slot_num[node.module][node.side], dist + num_next};
      } else if (pi[k] == parent) {
        items[k] = {kMarker};
      } else {
        items[k] = {node_num[pi[k]]};
      }
    }
    Tuple cand;
    if (parent >= 0) {
      const std::size_t at = static_cast<std::size_t>(std::find(pi.begin(), pi.end(), parent) - pi.begin());
      for (std::size_t k = 1; k < len; ++k) {
        const auto& it = items[(at + k) % len];
        cand.insert(cand.end(), it.begin(), it.end());
      }
    } else {
      Tuple flat;
      for (const auto& it : items) flat.insert(flat.end(), it.begin(), it.end());
      cand = least_rotation(flat);
    }
    if (best.empty() || cand < best) best = std::move(cand);
  }
  return best;
}

Tuple canon_pnode(const PQSTree& pqs, const RootedPQS& r, int p, const std::vector<std::uint64_t>& node_num) {
  const int parent = (r.root == p) ? -1 : r.parent[p];
  Tuple out;
  for (int x : pqs.nodes[p].order)
    if (x != parent) out.push_back(node_num[x]);
  return out;
}

std::vector<std::uint64_t> canonize(const ArcModel& m, const CanonOptions& opt) {
  const Representation rep = compute_representation(m.graph);
  CanonTable table;
  if (rep.base.order() == 0) return table.linearize(rep.universals);
  const ArcModel normalized = normalize(rep.base, base_model(m, rep));
  const PQSMTree t = build_pqsm(normalized);

  // Metachords, deepest level first.
  const auto levels = levels_of_metachords(t);
  int deepest = 0;
  for (const auto& [l, lv] : levels) deepest = std::max(deepest, lv);
  MetachordNums num;
  for (int lv = deepest; lv >= 0; --lv) {
    std::vector<DualMetachord> objs;
    for (const auto& [l, x] : levels)
      if (x == lv) objs.push_back(l);
    const std::uint64_t num_next = table.next();
    std::vector<CanonTable::Entry> items;
    for (const auto& l : objs) {
      const bool leaf = t.module_trees[l.module].md.nodes[l.node].kind == ModuleKind::Leaf;
      items.push_back({leaf ? EntryKind::MetachordLeaf : EntryKind::MetachordInner,
                       canon_metachord(t, l, num, rep.mult, num_next)});
    }
    const auto nums = table.add_level(items, opt);
    for (std::size_t i = 0; i < objs.size(); ++i) num[objs[i]] = nums[i];
  }
  std::vector<std::array<std::uint64_t, 2>> slot_num;
  for (std::size_t m2 = 0; m2 < t.modules.size(); ++m2)
    slot_num.push_back({num.at({static_cast<int>(m2), 0, 0}), num.at({static_cast<int>(m2), 0, 1})});

  // Inner nodes of the PQS-tree, deepest level first.
  const RootedPQS r = root_pqs(t.pqs);
  std::vector<std::uint64_t> node_num(t.pqs.nodes.size(), 0);
  for (int lv = r.max_level; lv >= 0; --lv) {
    std::vector<int> objs;
    for (int x = 0; x < t.pqs.size(); ++x)
      if (r.level[x] == lv && t.pqs.is_inner(x)) objs.push_back(x);
    const std::uint64_t num_next = table.next();
    std::vector<CanonTable::Entry> items;
    for (int x : objs) {
      if (t.pqs.nodes[x].kind == PQSKind::Q) {
        items.push_back({EntryKind::QNode, canon_qnode(t, r, x, node_num, slot_num, num_next)});
      } else {
        items.push_back({EntryKind::PNode, canon_pnode(t.pqs, r, x, node_num)});
      }
    }
    std::vector<Tuple> p_tuples;
    for (const auto& it : items)
      if (it.kind == EntryKind::PNode) p_tuples.push_back(it.tuple);
    if (opt.counting_sorts) sort_tuple_entries(p_tuples);
    else sort_tuple_entries_generic(p_tuples);
    for (std::size_t i = 0, k = 0; i < items.size(); ++i)
      if (items[i].kind == EntryKind::PNode) items[i].tuple = p_tuples[k++];
    if (lv == 0 && r.synthetic()) {
      const int a = r.centers[0], b = r.centers[1];
      const int p = t.pqs.nodes[a].kind == PQSKind::P ? a : b;
      const int q = p == a ? b : a;
      items.push_back({EntryKind::Root, {node_num[p], node_num[q]}});
      objs.push_back(-1);
    }
    if (items.empty()) continue;
    const auto nums = table.add_level(items, opt);
    for (std::size_t i = 0; i < objs.size(); ++i)
      if (objs[i] >= 0) node_num[objs[i]] = nums[i];
  }
  return table.linearize(rep.universals);
}

bool isomorphic(const ArcModel& a, const ArcModel& b, const CanonOptions& opt) {
  if (a.order() != b.order() || a.graph.edge_count() != b.graph.edge_count()) return false;
  return canonize(a, opt) == canonize(b, opt);
}

std::string format_canonical(const std::vector<std::uint64_t>& form) {
  std::string out;
  for (std::size_t i = 0; i < form.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(form[i]);
  }
  return out;
}

}  // namespace carc
