#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "carc/cli.hpp"
#include "carc/io.hpp"
#include "carc/oracle.hpp"
#include "support.hpp"

using namespace carc;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& input = {}) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "carc_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

const std::string kWorked = io::document_line(carc::testing::worked_example());

}  // namespace

TEST_CASE("documents") {
  const ArcModel m = io::parse_model(R"({"n": 2, "word": ["v0^0", "v1^0", "v0^1", "v1^1"]})");
  CHECK(m.graph.edge_count() == 1);
  CHECK(io::parse_model(io::document_line(m)).word == m.word);
  CHECK(io::parse_model(R"({"n": 2, "word": ["v1^0", "v0^1", "v1^1", "v0^0"], "adjacency": [[0, 1]]})").word == m.word);
  CHECK_THROWS_AS(io::parse_model(R"({"n": 2, "word": ["v0^0", "v1^0", "v0^1", "v1^1"], "adjacency": []})"),
                  io::ParseError);
  CHECK_THROWS_AS(io::parse_model(R"({"n": 2, "word": ["v0^0", "v1^0", "v0^1"]})"), io::ParseError);
  CHECK_THROWS_AS(io::parse_model(R"({"n": 2, "word": ["v0^0", "v0^0", "v1^1", "v1^0"]})"), io::ParseError);
  CHECK_THROWS_AS(io::parse_model(R"({"n": 1, "word": ["v0^0", "x"]})"), io::ParseError);
  CHECK_THROWS_AS(io::parse_model("not json"), io::ParseError);
  CHECK(io::token(Letter(12, 1)) == "v12^1");
  CHECK(io::parse_token("v12^1") == Letter(12, 1));
}

TEST_CASE("canon is deterministic") {
  const auto path = write_file("g.json", kWorked);
  const Result a = run({"canon", path}), b = run({"canon", path});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run({"canon", "-"}, kWorked).out == a.out);
}

TEST_CASE("enumerate lists the four models of the worked example") {
  const Result r = run({"enumerate", "-"}, kWorked);
  CHECK(r.code == 0);
  CHECK(lines(r.out) == 4);
  CHECK(lines(run({"enumerate", "--limit", "3", "-"}, kWorked).out) == 3);
  std::istringstream each(r.out);
  std::string line;
  while (std::getline(each, line)) CHECK(io::parse_model(line).graph == carc::testing::worked_example().graph);
}

TEST_CASE("iso") {
  const ArcModel m = carc::testing::worked_example();
  const auto a = write_file("a.json", io::document_line(m));
  const auto b = write_file("b.json", io::document_line(carc::testing::relabel(m, {8, 3, 5, 0, 1, 7, 2, 6, 4})));
  auto w = m.word.letters();
  std::swap(w[0], w[2]);
  const ArcModel other{CircularWord(w)};
  REQUIRE_FALSE(oracle::brute_iso(m.graph, other.graph));
  const auto c = write_file("c.json", io::document_line(other));
  CHECK(run({"iso", a, b}).code == 0);
  CHECK(run({"iso", a, c}).code == 1);
}

TEST_CASE("normalize output is normalized") {
  const std::string p4 = R"({"n": 4, "word": ["v0^0","v1^0","v0^1","v2^0","v1^1","v3^0","v2^1","v3^1"]})";
  const Result r = run({"normalize", "-"}, p4);
  REQUIRE(r.code == 0);
  const ArcModel out = io::parse_model(r.out);
  CHECK(check_normalized(out.graph, out).empty());
  CHECK(out.graph == io::parse_model(p4).graph);
}

TEST_CASE("overlap and tree") {
  const Result ov = run({"overlap", "-"}, kWorked);
  CHECK(ov.code == 0);
  CHECK(lines(ov.out) == overlap_graph(carc::testing::worked_example().graph).edge_count());
  const Result dot = run({"tree", "--dot", "-"}, kWorked);
  CHECK(dot.code == 0);
  CHECK(dot.out.find("shape=ellipse") != std::string::npos);
  CHECK(dot.out.find("shape=diamond") != std::string::npos);
  const Result js = run({"tree", "--json", "-"}, kWorked);
  REQUIRE(js.code == 0);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j["root_kind"] == "prime");
  CHECK(j["modules"].size() == 4);
}

TEST_CASE("exit codes") {
  CHECK(run({"canon", "-"}, "{").code == cli::kExitParse);
  CHECK(run({"canon", "/nonexistent/file.json"}).code == cli::kExitParse);
  CHECK(run({"bogus"}).code == cli::kExitParse);
  const std::string twins = R"({"n": 2, "word": ["v0^0","v1^0","v0^1","v1^1"]})";
  CHECK(run({"normalize", "-"}, twins).code == cli::kExitNormalization);
  CHECK(run({"canon", "-"}, twins).code == 0);
  ::setenv("CARC_ENUM_CAP", "1", 1);
  CHECK(run({"enumerate", "-"}, kWorked).code == cli::kExitCapacity);
  ::unsetenv("CARC_ENUM_CAP");
}

TEST_CASE("selftest") {
  const Result r = run({"selftest", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
