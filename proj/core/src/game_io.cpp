// Copyright 2026 The cpg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cpg/game_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "cpg/errors.hpp"
#include "json.hpp"
#include "json_support.hpp"

namespace cpg {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> read_labels(const Json& doc, const char* key) {
  const auto& node = doc.at(key);
  if (!node.is_array()) throw ParseError(std::string(key) + " must be an array");
  std::vector<std::string> out;
  for (const auto& item : node) {
    if (!is_plain_string(item)) {
      throw ParseError(std::string(key) + " must contain strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

Matrix<Rational> read_matrix(const Json& doc, const char* key) {
  const auto& node = doc.at(key);
  if (!node.is_array()) throw ParseError(std::string(key) + " must be an array");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : node) {
    if (!row.is_array()) {
      throw ParseError(std::string(key) + " must be an array of arrays");
    }
    std::vector<Rational> values;
    for (const auto& entry : row) values.push_back(read_rational(entry, key));
    rows.push_back(std::move(values));
  }
  for (const auto& row : rows) {
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ValidationError(std::string(key) + " has rows of different lengths");
    }
  }
  if (rows.empty() || rows.front().empty()) {
    throw ValidationError(std::string(key) + " must not be empty");
  }
  return Matrix<Rational>::from_rows(rows);
}

Json matrix_json(const Matrix<Rational>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (const auto& v : m.row(i)) row.push_back(rational_json(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string write_document(const std::string& name,
                           const std::vector<std::string>& rows,
                           const std::vector<std::string>& cols,
                           const Matrix<Rational>& a, const Matrix<Rational>& b) {
  Json doc;
  doc["name"] = name;
  doc["row_actions"] = rows;
  doc["col_actions"] = cols;
  doc["row_payoffs"] = matrix_json(a);
  doc["col_payoffs"] = matrix_json(b);
  return doc.dump(2) + "\n";
}

}  // namespace

BimatrixGame parse_game(std::string_view text) {
  const Json doc = parse_exact_json(text);
  if (!doc.is_object()) throw ParseError("game document must be a JSON object");
  static const std::set<std::string> kKeys = {
      "name", "row_actions", "col_actions", "row_payoffs", "col_payoffs"};
  for (const auto& [key, value] : doc.items()) {
    if (!kKeys.count(key)) throw ParseError("unknown key '" + key + "'");
  }
  for (const auto& key : kKeys) {
    if (!doc.contains(key)) throw ParseError("missing key '" + key + "'");
  }
  if (!is_plain_string(doc.at("name"))) throw ParseError("name must be a string");
  return BimatrixGame(doc.at("name").get<std::string>(),
                      read_labels(doc, "row_actions"),
                      read_labels(doc, "col_actions"),
                      read_matrix(doc, "row_payoffs"),
                      read_matrix(doc, "col_payoffs"));
}

BimatrixGame load_game_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_game(buffer.str());
}

std::string serialize_game(const BimatrixGame& g) {
  return write_document(g.name(), g.row_actions(), g.col_actions(),
                        g.row_payoffs(), g.col_payoffs());
}

std::string serialize_single_game(const SingleGame& s) {
  return write_document(s.name(), s.actions(), s.actions(), s.payoffs(),
                        s.payoffs().transpose());
}

}  // namespace cpg
