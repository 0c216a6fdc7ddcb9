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

#include "cpg/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

#include "cpg/errors.hpp"

namespace cpg {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return "parse_error";
    case ErrorKind::kValidation: return "validation_error";
    case ErrorKind::kSizeMismatch: return "size_mismatch";
    case ErrorKind::kNotSquare: return "not_square";
    case ErrorKind::kTooLarge: return "too_large";
    case ErrorKind::kSingularSystem: return "singular_system";
    case ErrorKind::kTheoremViolation: return "theorem_violation";
    case ErrorKind::kDomainEscape: return "domain_escape";
    case ErrorKind::kUnsupportedDimension: return "unsupported_dimension";
    case ErrorKind::kNotRestPoint: return "not_rest_point";
    case ErrorKind::kNotNash: return "not_nash";
  }
  return "error";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Parses an optionally signed run of decimal digits.
mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw ParseError("malformed number '" + std::string(whole) + "'");
  }
  mpz_class value(std::string(s), 10);
  return negative ? mpz_class(-value) : value;
}

mpz_class power_of_ten(unsigned long exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
  return result;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    const mpz_class exp_value = parse_integer(s.substr(e + 1), text);
    if (!exp_value.fits_slong_p() || abs(exp_value) > 10000) {
      throw ParseError("exponent out of range in '" + std::string(text) + "'");
    }
    exponent = exp_value.get_si();
    s = s.substr(0, e);
  }
  std::string digits;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = s.substr(0, dot);
    const std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw ParseError("malformed number '" + std::string(text) + "'");
    }
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw ParseError("malformed number '" + std::string(text) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) {
      throw ParseError("malformed number '" + std::string(text) + "'");
    }
    digits = std::string(s);
  }
  mpq_class value(mpz_class(digits, 10));
  if (exponent > 0) {
    value *= power_of_ten(static_cast<unsigned long>(exponent));
  } else if (exponent < 0) {
    value /= power_of_ten(static_cast<unsigned long>(-exponent));
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rational(value);
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw ValidationError("zero denominator");
  value_ = mpq_class(static_cast<long>(numerator), static_cast<long>(denominator));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw ValidationError("zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty number");
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(text.substr(0, slash), text);
    const mpz_class den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
      throw ValidationError("zero denominator in '" + std::string(text) + "'");
    }
    mpq_class value(num, den);
    value.canonicalize();
    return Rational(value);
  }
  return parse_decimal(text);
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.sign() == 0) throw std::domain_error("rational division by zero");
  value_ /= other.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace cpg
