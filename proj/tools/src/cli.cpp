#include "carc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "carc/canon.hpp"
#include "carc/enumerate.hpp"
#include "carc/io.hpp"
#include "carc/oracle.hpp"

namespace carc::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(in), {}};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw io::ParseError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(f), {}};
}

ArcModel load(const std::string& path, std::istream& in) { return io::parse_model(slurp(path, in)); }

// Commands below the canonical form work on twin-free, universal-free graphs.
ArcModel load_reduced(const std::string& path, std::istream& in) {
  ArcModel m = load(path, in);
  if (!twin_free_and_universal_free(m.graph))
    throw NormalizationError("graph has twins or universal vertices; only canon and iso accept it");
  return m;
}

PQSMTree tree_of(const ArcModel& m) { return build_pqsm(normalize(m.graph, m)); }

ArcModel relabel(const ArcModel& m, const std::vector<int>& perm) {
  std::vector<Letter> w;
  for (const auto& l : m.word.letters()) w.emplace_back(perm[l.symbol], l.sup);
  return ArcModel(CircularWord(std::move(w)));
}

int selftest(int max_n, std::ostream& out) {
  const auto corpus = oracle::build_corpus(max_n);
  std::mt19937 rng(12345);
  int failures = 0;
  auto report = [&](const std::string& name, std::size_t checked, std::size_t bad) {
    out << (bad == 0 ? "PASS " : "FAIL ") << name << " (" << checked << " checked, " << bad << " failed)\n";
    failures += bad != 0;
  };

  std::size_t bad = 0, checked = 0;
  std::vector<std::vector<std::uint64_t>> forms;
  for (const auto& e : corpus) {
    forms.push_back(canonize(e.model));
    std::vector<int> perm(static_cast<std::size_t>(e.model.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    ++checked;
    if (canonize(relabel(e.model, perm)) != forms.back()) ++bad;
  }
  report("canon invariant under relabelling", checked, bad);

  std::set<std::vector<std::uint64_t>> distinct(forms.begin(), forms.end());
  report("canon separates non-isomorphic graphs", corpus.size(), corpus.size() - distinct.size());

  bad = checked = 0;
  std::size_t bad_models = 0, checked_models = 0;
  for (const auto& e : corpus) {
    if (!twin_free_and_universal_free(e.graph)) continue;
    ++checked;
    const ArcModel nm = normalize(e.graph, e.model);
    if (!check_normalized(e.graph, nm).empty() || !(nm.graph == e.graph)) ++bad;
    if (e.graph.order() <= 6) {
      ++checked_models;
      if (enumerate_conformal(build_pqsm(nm), enum_cap_from_env()) != oracle::brute_conformal_models(e.graph))
        ++bad_models;
    }
  }
  report("normalize yields normalized models", checked, bad);
  report("enumerated models match brute force", checked_models, bad_models);

  out << corpus.size() << " graphs on at most " << max_n << " vertices\n";
  return failures == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normalized circular-arc models, PQSM-trees and canonical forms", "carc"};
  app.require_subcommand(1);
  std::string file, file_b;
  bool dot = false, as_json = false;
  std::size_t limit = 0;
  int max_n = 0;

  auto* c_norm = app.add_subcommand("normalize", "Print a normalized model of the input");
  c_norm->add_option("file", file, "Model document, '-' for stdin");
  auto* c_ovl = app.add_subcommand("overlap", "Print the edges of the overlap graph");
  c_ovl->add_option("file", file, "Model document, '-' for stdin");
  auto* c_tree = app.add_subcommand("tree", "Print the PQSM-tree");
  c_tree->add_option("file", file, "Model document, '-' for stdin");
  auto* f_dot = c_tree->add_flag("--dot", dot, "Graphviz output (default)");
  c_tree->add_flag("--json", as_json, "JSON output")->excludes(f_dot);
  auto* c_enum = app.add_subcommand("enumerate", "Print every normalized model, one document per line");
  c_enum->add_option("file", file, "Model document, '-' for stdin");
  c_enum->add_option("--limit", limit, "Stop after K models")->check(CLI::PositiveNumber);
  auto* c_canon = app.add_subcommand("canon", "Print the canonical form");
  c_canon->add_option("file", file, "Model document, '-' for stdin");
  auto* c_iso = app.add_subcommand("iso", "Exit 0 iff the two graphs are isomorphic");
  c_iso->add_option("a", file, "First model document")->required();
  c_iso->add_option("b", file_b, "Second model document")->required();
  auto* c_self = app.add_subcommand("selftest", "Check the implementation against the oracles");
  c_self->add_option("n", max_n, "Largest graph order")->required()->check(CLI::Range(1, 6));

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "carc: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (c_norm->parsed()) {
      const ArcModel m = load_reduced(file, in);
      out << io::document_line(normalize(m.graph, m)) << "\n";
    } else if (c_ovl->parsed()) {
      const ArcModel m = load_reduced(file, in);
      for (auto [u, v] : overlap_graph(m.graph).edges()) out << u << " " << v << "\n";
    } else if (c_tree->parsed()) {
      const PQSMTree t = tree_of(load_reduced(file, in));
      if (as_json) out << io::tree_json(t).dump(2) << "\n";
      else out << io::tree_dot(t);
    } else if (c_enum->parsed()) {
      const PQSMTree t = tree_of(load_reduced(file, in));
      std::size_t emitted = 0;
      for_each_conformal(
          t,
          [&](const CircularWord& w) {
            out << io::document_line(ArcModel(w)) << "\n";
            return limit == 0 || ++emitted < limit;
          },
          enum_cap_from_env());
    } else if (c_canon->parsed()) {
      out << format_canonical(canonize(load(file, in))) << "\n";
    } else if (c_iso->parsed()) {
      const bool same = isomorphic(load(file, in), load(file_b, in));
      out << (same ? "isomorphic" : "not isomorphic") << "\n";
      return same ? kExitOk : kExitFailure;
    } else if (c_self->parsed()) {
      return selftest(max_n, out);
    }
  } catch (const io::ParseError& e) {
    err << "carc: " << e.what() << "\n";
    return kExitParse;
  } catch (const NormalizationError& e) {
    err << "carc: " << e.what() << "\n";
    return kExitNormalization;
  } catch (const CapacityError& e) {
    err << "carc: " << e.what() << " (raise CARC_ENUM_CAP)\n";
    return kExitCapacity;
  }
  return kExitOk;
}

}  // namespace carc::cli
