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

// JSON helpers shared by the core's readers and writers. Not installed.
#ifndef CPG_SRC_JSON_SUPPORT_HPP_
#define CPG_SRC_JSON_SUPPORT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "cpg/errors.hpp"
#include "cpg/rational.hpp"
#include "json.hpp"

namespace cpg {

// Float literals are kept as their source text behind this marker so that
// decimals convert to rationals without passing through a double.
inline constexpr char kRawNumberMarker = '\x1f';

class ExactJsonBuilder : public nlohmann::json_sax<nlohmann::ordered_json> {
 public:
  using Json = nlohmann::ordered_json;

  bool null() override { return put(Json(nullptr)); }
  bool boolean(bool v) override { return put(Json(v)); }
  bool number_integer(number_integer_t v) override { return put(Json(v)); }
  bool number_unsigned(number_unsigned_t v) override { return put(Json(v)); }
  bool number_float(number_float_t, const string_t& raw) override {
    return put(Json(std::string(1, kRawNumberMarker) + raw));
  }
  bool string(string_t& v) override { return put(Json(v)); }
  bool binary(binary_t&) override { return put(Json(nullptr)); }
  bool start_object(std::size_t) override {
    return open(Json::object());
  }
  bool key(string_t& k) override {
    if (stack_.back()->contains(k)) throw ParseError("duplicate key '" + k + "'");
    key_ = k;
    return true;
  }
  bool end_object() override {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) override { return open(Json::array()); }
  bool end_array() override {
    stack_.pop_back();
    return true;
  }
  bool parse_error(std::size_t, const std::string&,
                   const nlohmann::detail::exception& e) override {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }

  Json release() { return std::move(root_); }

 private:
  Json* place(Json value) {
    if (stack_.empty()) {
      root_ = std::move(value);
      return &root_;
    }
    Json& top = *stack_.back();
    if (top.is_array()) {
      top.push_back(std::move(value));
      return &top.back();
    }
    top[key_] = std::move(value);
    return &top[key_];
  }
  bool put(Json value) {
    place(std::move(value));
    return true;
  }
  bool open(Json value) {
    stack_.push_back(place(std::move(value)));
    return true;
  }

  Json root_;
  std::vector<Json*> stack_;
  std::string key_;
};

inline nlohmann::ordered_json parse_exact_json(std::string_view text) {
  ExactJsonBuilder builder;
  nlohmann::ordered_json::sax_parse(text.begin(), text.end(), &builder);
  return builder.release();
}

inline bool is_raw_number(const nlohmann::ordered_json& node) {
  return node.is_string() && !node.get_ref<const std::string&>().empty() &&
         node.get_ref<const std::string&>().front() == kRawNumberMarker;
}

inline bool is_plain_string(const nlohmann::ordered_json& node) {
  return node.is_string() && !is_raw_number(node);
}

// Accepts JSON integers, decimal literals and "p/q" strings.
inline Rational read_rational(const nlohmann::ordered_json& node,
                              std::string_view context) {
  if (node.is_number_integer()) {
    if (node.is_number_unsigned()) {
      return Rational::parse(std::to_string(node.get<std::uint64_t>()));
    }
    return Rational(node.get<std::int64_t>());
  }
  if (node.is_string()) {
    const auto& s = node.get_ref<const std::string&>();
    if (is_raw_number(node)) return Rational::parse(std::string_view(s).substr(1));
    return Rational::parse(s);
  }
  throw ParseError(std::string(context) + " entries must be numbers or \"p/q\" strings");
}

// Integers that fit in 64 bits become JSON numbers; everything else "p/q".
inline nlohmann::ordered_json rational_json(const Rational& r) {
  if (r.is_integer() && r.numerator().fits_slong_p()) {
    return nlohmann::ordered_json(static_cast<std::int64_t>(r.numerator().get_si()));
  }
  return nlohmann::ordered_json(r.to_string());
}

}  // namespace cpg

#endif  // CPG_SRC_JSON_SUPPORT_HPP_
