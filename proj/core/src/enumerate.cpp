#include "carc/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace carc {

std::size_t enum_cap_from_env() {
  if (const char* env = std::getenv("CARC_ENUM_CAP")) {
    try {
      const long long v = std::stoll(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return kDefaultEnumCap;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> module_node_orders(const ModuleTree& mt, int id) {
  const auto& node = mt.md.nodes[id];
  const auto& o0 = mt.order0[id];
  const auto& o1 = mt.order1[id];
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  switch (node.kind) {
    case ModuleKind::Leaf: break;
    case ModuleKind::Parallel: out.emplace_back(o0, o1); break;
    case ModuleKind::Serial: {
      std::vector<int> perm = o0;
      std::sort(perm.begin(), perm.end());
      do out.emplace_back(perm, perm);
      while (std::next_permutation(perm.begin(), perm.end()));
      break;
    }
    case ModuleKind::Prime: {
      out.emplace_back(o0, o1);
      std::map<int, std::size_t> p0, p1;
      for (std::size_t i = 0; i < o0.size(); ++i) p0[o0[i]] = i;
      for (std::size_t i = 0; i < o1.size(); ++i) p1[o1[i]] = i;
      auto adjacent = [&](int a, int b) { return (p0[a] < p0[b]) == (p1[a] < p1[b]); };
      // Reversing the orientation of the adjacent pairs keeps the rest fixed.
      auto flipped = [&](std::map<int, std::size_t>& p) {
        std::vector<int> order = o0;
        auto before = [&](int a, int b) { return adjacent(a, b) ? p[b] < p[a] : p[a] < p[b]; };
        std::sort(order.begin(), order.end(), before);
        for (std::size_t i = 0; i < order.size(); ++i)
          for (std::size_t j = i + 1; j < order.size(); ++j)
            if (!before(order[i], order[j])) throw std::logic_error("prime node order is not transitive");
        return order;
      };
      out.emplace_back(flipped(p0), flipped(p1));
      break;
    }
  }
  return out;
}

namespace {

void emit(const ModuleTree& mt, int id, int side, const std::vector<std::size_t>& pick,
          const std::vector<std::vector<std::pair<std::vector<int>, std::vector<int>>>>& options,
          const std::map<int, Letter>& letter_of, LinearWord& out) {
  const auto& node = mt.md.nodes[id];
  if (node.kind == ModuleKind::Leaf) {
    out.push_back(letter_of.at(node.vertices.front()));
    return;
  }
  const auto& chosen = options[id][pick[id]];
  for (int c : side == 0 ? chosen.first : chosen.second) emit(mt, c, side, pick, options, letter_of, out);
}

std::size_t checked_mul(std::size_t a, std::size_t b, std::size_t cap) {
  if (b != 0 && a > cap / b) throw CapacityError("enumeration exceeds the cap of " + std::to_string(cap));
  const std::size_t r = a * b;
  if (r > cap) throw CapacityError("enumeration exceeds the cap of " + std::to_string(cap));
  return r;
}

Letter slot_letter(const PQSTree& pqs, int node) { return Letter(pqs.nodes[node].module, pqs.nodes[node].side); }

std::vector<Letter> expand(const PQSTree& pqs, int node, int parent, const std::vector<std::vector<int>>& order) {
  std::vector<int> seq = order[node];
  if (parent >= 0) {
    auto it = std::find(seq.begin(), seq.end(), parent);
    std::rotate(seq.begin(), it, seq.end());
    seq.erase(seq.begin());
  }
  std::vector<Letter> out;
  for (int x : seq) {
    if (pqs.nodes[x].kind == PQSKind::Slot) {
      out.push_back(slot_letter(pqs, x));
    } else {
      auto sub = expand(pqs, x, node, order);
      out.insert(out.end(), sub.begin(), sub.end());
    }
  }
  return out;
}

std::vector<CircularWord> serial_orders(std::size_t t, std::size_t cap) {
  std::size_t count = 1;
  for (std::size_t i = 1; i < t; ++i) count = checked_mul(count, 2 * i, cap);
  std::vector<CircularWord> out;
  std::vector<int> perm(t > 0 ? t - 1 : 0);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (std::size_t bits = 0; bits < (std::size_t{1} << perm.size()); ++bits) {
      std::vector<Letter> w(2 * t);
      w[0] = Letter(0, 0);
      w[t] = Letter(0, 1);
      for (std::size_t i = 0; i < perm.size(); ++i) {
        const int b = static_cast<int>(bits >> i & 1);
        w[i + 1] = Letter(perm[i], b);
        w[t + i + 1] = Letter(perm[i], 1 - b);
      }
      out.emplace_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

std::vector<OrientedPermutationModel> admissible_models(const Metachord& mc, const ModuleTree& mt) {
  std::map<int, Letter> zero, one;
  for (const auto& l : mc.slot0) zero[l.symbol] = l;
  for (const auto& l : mc.slot1) one[l.symbol] = l;
  std::vector<std::vector<std::pair<std::vector<int>, std::vector<int>>>> options;
  for (std::size_t id = 0; id < mt.md.nodes.size(); ++id) options.push_back(module_node_orders(mt, static_cast<int>(id)));
  std::vector<std::size_t> pick(options.size(), 0);
  std::vector<OrientedPermutationModel> out;
  while (true) {
    OrientedPermutationModel p;
    emit(mt, 0, 0, pick, options, zero, p.tau0);
    emit(mt, 0, 1, pick, options, one, p.tau1);
    out.push_back(std::move(p));
    std::size_t i = 0;
    while (i < options.size() && (options[i].size() <= 1 || ++pick[i] == options[i].size())) {
      if (options[i].size() > 1) pick[i] = 0;
      ++i;
    }
    if (i == options.size()) break;
  }
  return out;
}

std::vector<CircularWord> slot_orders(const PQSTree& pqs, std::size_t cap) {
  std::vector<std::vector<int>> stored(pqs.nodes.size());
  for (std::size_t i = 0; i < pqs.nodes.size(); ++i) stored[i] = pqs.nodes[i].order;
  const int root = pqs.q_node.at(0);

  if (pqs.root_kind == RootKind::Serial) return serial_orders(pqs.slot_node.size(), cap);

  // Per inner node: the neighbour orders it may take.
  std::vector<int> inner;
  std::vector<std::vector<std::vector<int>>> options;
  std::size_t count = 1;
  for (int id = 0; id < pqs.size(); ++id) {
    const auto& node = pqs.nodes[id];
    if (node.kind == PQSKind::Slot) continue;
    std::vector<std::vector<int>> opts{node.order};
    if (node.kind == PQSKind::Q) {
      if (!pqs.reflection_symmetric(id)) opts.push_back(pqs.reflected_order(id));
    } else {
      std::vector<int> rest(node.order.begin() + 1, node.order.end());
      std::sort(rest.begin(), rest.end());
      opts.clear();
      do {
        std::vector<int> o{node.order.front()};
        o.insert(o.end(), rest.begin(), rest.end());
        opts.push_back(std::move(o));
        if (opts.size() > cap) throw CapacityError("P-node orders exceed the cap of " + std::to_string(cap));
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
    count = checked_mul(count, opts.size(), cap);
    inner.push_back(id);
    options.push_back(std::move(opts));
  }

  std::set<CircularWord> seen;
  std::vector<CircularWord> out;
  std::vector<std::size_t> pick(inner.size(), 0);
  while (true) {
    auto order = stored;
    for (std::size_t i = 0; i < inner.size(); ++i) order[inner[i]] = options[i][pick[i]];
    CircularWord w(expand(pqs, root, -1, order));
    if (seen.insert(w).second) out.push_back(std::move(w));
    std::size_t i = 0;
    while (i < inner.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == inner.size()) break;
  }
  return out;
}

void for_each_conformal(const PQSMTree& t, const std::function<bool(const CircularWord&)>& visit,
                        std::size_t cap) {
  const auto orders = slot_orders(t.pqs, cap);
  std::vector<std::vector<OrientedPermutationModel>> models;
  for (std::size_t m = 0; m < t.modules.size(); ++m)
    models.push_back(admissible_models(t.metachords[m], t.module_trees[m]));
  std::set<CircularWord> seen;
  for (const auto& pi : orders) {
    std::vector<std::size_t> pick(models.size(), 0);
    while (true) {
      std::vector<Letter> w;
      for (const auto& s : pi.letters()) {
        const auto& p = models[s.symbol][pick[s.symbol]];
        const auto& block = s.sup == 0 ? p.tau0 : p.tau1;
        w.insert(w.end(), block.begin(), block.end());
      }
      CircularWord cw(std::move(w));
      if (seen.insert(cw).second && !visit(cw)) return;
      std::size_t i = 0;
      while (i < models.size() && ++pick[i] == models[i].size()) pick[i++] = 0;
      if (i == models.size()) break;
    }
  }
}

std::vector<CircularWord> enumerate_conformal(const PQSMTree& t, std::size_t cap) {
  std::vector<CircularWord> out;
  for_each_conformal(
      t,
      [&](const CircularWord& w) {
        if (out.size() >= cap) throw CapacityError("conformal models exceed the cap of " + std::to_string(cap));
        out.push_back(w);
        return true;
      },
      cap);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_admissible(const CircularWord& w, const PQSMTree& t) {
  {
    auto a = w.letters(), b = t.source.letters();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  const auto& pqs = t.pqs;
  std::map<Letter, Letter> slot_of;
  for (std::size_t m = 0; m < t.modules.size(); ++m) {
    const auto& mc = t.metachords[m];
    auto tau0 = contiguous_subword(w, mc.slot0);
    auto tau1 = contiguous_subword(w, mc.slot1);
    if (!tau0 || !tau1) return false;
    try {
      if (pm_to_orientations({*tau0, *tau1}, t.overlap).first != mc.lt) return false;
    } catch (const std::invalid_argument&) {
      return false;
    }
    for (const auto& l : mc.slot0) slot_of[l] = Letter(static_cast<int>(m), 0);
    for (const auto& l : mc.slot1) slot_of[l] = Letter(static_cast<int>(m), 1);
  }
  std::vector<Letter> contracted;
  for (const auto& l : w.letters()) {
    const Letter s = slot_of.at(l);
    if (contracted.empty() || contracted.back() != s) contracted.push_back(s);
  }
  if (contracted.size() > 1 && contracted.front() == contracted.back()) contracted.pop_back();
  const CircularWord pi(contracted);

  const int root = pqs.q_node.at(0);
  auto as_slots = [&](const std::vector<int>& order) {
    std::vector<Letter> out;
    for (int x : order) out.push_back(slot_letter(pqs, x));
    return CircularWord(std::move(out));
  };
  switch (pqs.root_kind) {
    case RootKind::Serial: {
      const std::size_t k = pi.size() / 2;
      for (std::size_t m = 0; m < t.modules.size(); ++m) {
        const std::size_t a = *pi.find(Letter(static_cast<int>(m), 0));
        const std::size_t b = *pi.find(Letter(static_cast<int>(m), 1));
        if ((a + k) % pi.size() != b) return false;
      }
      return true;
    }
    case RootKind::Prime:
      return pi == as_slots(pqs.nodes[root].order) || pi == as_slots(pqs.reflected_order(root));
    case RootKind::Parallel: break;
  }

  // Slots on the far side of each neighbour must be contiguous, and every
  // Q-node must show its stored order or the reflection.
  auto far_slots = [&](int node, int nb) {
    std::vector<Letter> out;
    std::vector<int> stack{nb};
    std::vector<bool> seen(pqs.nodes.size(), false);
    seen[node] = seen[nb] = true;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (pqs.nodes[x].kind == PQSKind::Slot) out.push_back(slot_letter(pqs, x));
      for (int y : pqs.nodes[x].order)
        if (!seen[y] && pqs.nodes[x].kind != PQSKind::Slot) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
    return out;
  };
  for (int id = 0; id < pqs.size(); ++id) {
    if (pqs.nodes[id].kind == PQSKind::Slot) continue;
    std::map<Letter, int> owner;
    for (int nb : pqs.nodes[id].order) {
      const auto letters = far_slots(id, nb);
      if (!contiguous_subword(pi, letters)) return false;
      for (const auto& l : letters) owner[l] = nb;
    }
    if (pqs.nodes[id].kind == PQSKind::P) continue;
    std::vector<int> seq;
    for (const auto& l : pi.letters()) {
      const int o = owner.at(l);
      if (seq.empty() || seq.back() != o) seq.push_back(o);
    }
    if (seq.size() > 1 && seq.front() == seq.back()) seq.pop_back();
    auto matches = [&](const std::vector<int>& order) {
      const std::size_t k = seq.size();
      if (order.size() != k) return false;
      for (std::size_t s = 0; s < k; ++s) {
        std::size_t i = 0;
        while (i < k && order[i] == seq[(i + s) % k]) ++i;
        if (i == k) return true;
      }
      return false;
    };
    if (!matches(pqs.nodes[id].order) && !matches(pqs.reflected_order(id))) return false;
  }
  return true;
}

}  // namespace carc
