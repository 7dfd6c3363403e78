#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "carc/models.hpp"
#include "carc/pqsm.hpp"

namespace carc::io {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"n": 3, "word": ["v0^0", "v1^0", ...], "adjacency": [[0, 1], ...]}
struct ModelDocument {
  int n = 0;
  std::vector<Letter> word;
  std::optional<std::vector<std::pair<int, int>>> adjacency;
};

Letter parse_token(std::string_view token);
std::string token(const Letter& l);

ModelDocument parse_document(std::string_view text);
// Validates the word and the optional adjacency against the arcs.
ArcModel to_model(const ModelDocument& doc);
ArcModel parse_model(std::string_view text);

nlohmann::json document_json(const ArcModel& m);
// Single-line form used by normalize and enumerate.
std::string document_line(const ArcModel& m);

nlohmann::json tree_json(const PQSMTree& t);
// Boxes are P-nodes, ellipses Q-nodes, plain nodes slots and diamonds nodes of
// the module trees. Labels carry the ordering sets.
std::string tree_dot(const PQSMTree& t);

}  // namespace carc::io
