#include "carc/io.hpp"

#include <charconv>
#include <set>
#include <sstream>

#include "carc/enumerate.hpp"

namespace carc::io {

using nlohmann::json;

Letter parse_token(std::string_view tok) {
  const auto caret = tok.find('^');
  if (tok.size() < 4 || tok[0] != 'v' || caret == std::string_view::npos || caret + 2 != tok.size() ||
      (tok.back() != '0' && tok.back() != '1'))
    throw ParseError("bad letter token '" + std::string(tok) + "'");
  int id = 0;
  const char* first = tok.data() + 1;
  const char* last = tok.data() + caret;
  auto [ptr, ec] = std::from_chars(first, last, id);
  if (ec != std::errc() || ptr != last || id < 0) throw ParseError("bad vertex id in '" + std::string(tok) + "'");
  return Letter(id, tok.back() - '0');
}

std::string token(const Letter& l) {
  return "v" + std::to_string(l.symbol) + "^" + std::to_string(l.sup);
}

ModelDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("missing integer field 'n'");
  if (!j.contains("word") || !j["word"].is_array()) throw ParseError("missing array field 'word'");
  ModelDocument doc;
  doc.n = j["n"].get<int>();
  if (doc.n < 0) throw ParseError("'n' must be non-negative");
  for (const auto& t : j["word"]) {
    if (!t.is_string()) throw ParseError("word entries must be strings");
    doc.word.push_back(parse_token(t.get<std::string>()));
  }
  if (j.contains("adjacency")) {
    if (!j["adjacency"].is_array()) throw ParseError("'adjacency' must be a list of edges");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["adjacency"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw ParseError("adjacency entries must be pairs of vertex ids");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    doc.adjacency = std::move(edges);
  }
  return doc;
}

ArcModel to_model(const ModelDocument& doc) {
  if (doc.word.size() != static_cast<std::size_t>(2 * doc.n))
    throw ParseError("word must hold 2n letters");
  int n = 0;
  try {
    n = vertex_count(doc.word);
    ArcModel m{CircularWord(doc.word)};
    if (n != doc.n) throw ParseError("word does not cover vertices 0..n-1");
    if (doc.adjacency) {
      Graph g(n);
      for (auto [u, v] : *doc.adjacency) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw ParseError("adjacency names an invalid edge");
        g.add_edge(u, v);
      }
      if (!(g == m.graph)) throw ParseError("adjacency does not match the arc intersections");
    }
    return m;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid word: ") + e.what());
  }
}

ArcModel parse_model(std::string_view text) { return to_model(parse_document(text)); }

json document_json(const ArcModel& m) {
  json word = json::array();
  for (const auto& l : m.word.letters()) word.push_back(token(l));
  return json{{"n", m.order()}, {"word", word}};
}

std::string document_line(const ArcModel& m) { return document_json(m).dump(); }

namespace {

json tokens(const std::vector<Letter>& ls) {
  json a = json::array();
  for (const auto& l : ls) a.push_back(token(l));
  return a;
}

std::string node_name(const PQSTree& pqs, int id) {
  const auto& nd = pqs.nodes[id];
  switch (nd.kind) {
    case PQSKind::Q: return "Q" + std::to_string(nd.component);
    case PQSKind::Slot: return "S" + std::to_string(nd.module) + "^" + std::to_string(nd.side);
    case PQSKind::P: return "P" + std::to_string(id);
  }
  return {};
}

std::string letters_text(const std::vector<Letter>& ls) {
  std::string s;
  for (const auto& l : ls) s += (s.empty() ? "" : " ") + token(l);
  return s;
}

std::string list_text(const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

std::string root_pi_text(const PQSMTree& t) {
  switch (t.pqs.root_kind) {
    case RootKind::Serial: return "slot pairs of distinct modules overlap";
    case RootKind::Prime: return "{pi, pi^R}";
    case RootKind::Parallel: return "product of node orders";
  }
  return {};
}

}  // namespace

json tree_json(const PQSMTree& t) {
  json out;
  out["root_kind"] = std::string(to_string(t.pqs.root_kind));
  out["source"] = tokens(t.source.letters());
  json overlap = json::array();
  for (auto [u, v] : t.overlap.edges()) overlap.push_back({u, v});
  out["overlap_edges"] = overlap;
  json comps = json::array();
  for (const auto& c : t.pqs.components) comps.push_back(c);
  out["components"] = comps;
  json nodes = json::array();
  for (int id = 0; id < t.pqs.size(); ++id) {
    const auto& nd = t.pqs.nodes[id];
    json j{{"id", id}, {"name", node_name(t.pqs, id)}, {"kind", std::string(to_string(nd.kind))}, {"order", nd.order}};
    if (nd.kind == PQSKind::Slot) {
      j["module"] = nd.module;
      j["side"] = nd.side;
    }
    if (nd.kind == PQSKind::Q) j["component"] = nd.component;
    nodes.push_back(j);
  }
  out["nodes"] = nodes;
  json modules = json::array();
  for (std::size_t m = 0; m < t.modules.size(); ++m) {
    const auto& mt = t.module_trees[m];
    json mnodes = json::array();
    for (std::size_t k = 0; k < mt.md.nodes.size(); ++k) {
      const auto& nd = mt.md.nodes[k];
      json j{{"kind", std::string(to_string(nd.kind))}, {"vertices", nd.vertices}, {"children", nd.children}};
      if (nd.kind != ModuleKind::Leaf) {
        j["order0"] = mt.order0[k];
        j["order1"] = mt.order1[k];
        j["orderings"] = module_node_orders(mt, static_cast<int>(k)).size();
      }
      mnodes.push_back(j);
    }
    modules.push_back({{"vertices", t.modules[m].vertices},
                       {"representant", t.modules[m].representant},
                       {"component", t.modules[m].component},
                       {"slot0", tokens(t.metachords[m].slot0)},
                       {"slot1", tokens(t.metachords[m].slot1)},
                       {"tree", mnodes}});
  }
  out["modules"] = modules;
  return out;
}

std::string tree_dot(const PQSMTree& t) {
  std::ostringstream os;
  const auto& pqs = t.pqs;
  os << "graph pqsm {\n";
  os << "  label=\"root: " << to_string(pqs.root_kind) << ", Pi(V): " << root_pi_text(t) << "\";\n";
  for (int id = 0; id < pqs.size(); ++id) {
    const auto& nd = pqs.nodes[id];
    os << "  n" << id << " [";
    switch (nd.kind) {
      case PQSKind::Q: {
        std::string order;
        for (int x : nd.order) order += (order.empty() ? "" : " ") + node_name(pqs, x);
        os << "shape=ellipse, label=\"" << node_name(pqs, id) << "\\nPi: (" << order << ") and reflection\"";
        break;
      }
      case PQSKind::P:
        os << "shape=box, label=\"" << node_name(pqs, id) << "\\nPi: all circular orders of " << nd.order.size()
           << "\"";
        break;
      case PQSKind::Slot: {
        const auto& mc = t.metachords[nd.module];
        os << "shape=plaintext, label=\"" << node_name(pqs, id) << "\\n"
           << letters_text(nd.side == 0 ? mc.slot0 : mc.slot1) << "\"";
        break;
      }
    }
    os << "];\n";
  }
  for (int id = 0; id < pqs.size(); ++id)
    for (int x : pqs.nodes[id].order)
      if (id < x) os << "  n" << id << " -- n" << x << ";\n";
  for (std::size_t m = 0; m < t.modules.size(); ++m) {
    const auto& mt = t.module_trees[m];
    for (std::size_t k = 0; k < mt.md.nodes.size(); ++k) {
      const auto& nd = mt.md.nodes[k];
      os << "  m" << m << "_" << k << " [shape=diamond, label=\"" << to_string(nd.kind) << " {"
         << list_text(nd.vertices) << "}";
      if (nd.kind != ModuleKind::Leaf)
        os << "\\nPi: " << module_node_orders(mt, static_cast<int>(k)).size() << " orders";
      os << "\"];\n";
      for (int c : nd.children) os << "  m" << m << "_" << k << " -- m" << m << "_" << c << ";\n";
    }
    os << "  n" << pqs.slot_node[m][0] << " -- m" << m << "_0 [style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace carc::io
