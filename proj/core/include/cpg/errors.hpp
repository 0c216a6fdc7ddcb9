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

#ifndef CPG_ERRORS_HPP_
#define CPG_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace cpg {

enum class ErrorKind {
  kParse,
  kValidation,
  kSizeMismatch,
  kNotSquare,
  kTooLarge,
  kSingularSystem,
  kTheoremViolation,
  kDomainEscape,
  kUnsupportedDimension,
  kNotRestPoint,
  kNotNash,
};

// Stable snake_case identifier, used in machine-readable CLI diagnostics.
std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define CPG_DEFINE_ERROR(Name, Kind)                       \
  class Name : public Error {                              \
   public:                                                 \
    explicit Name(const std::string& message)              \
        : Error(ErrorKind::Kind, message) {}               \
  };

CPG_DEFINE_ERROR(ParseError, kParse)
CPG_DEFINE_ERROR(ValidationError, kValidation)
CPG_DEFINE_ERROR(SizeMismatch, kSizeMismatch)
CPG_DEFINE_ERROR(NotSquare, kNotSquare)
CPG_DEFINE_ERROR(TooLarge, kTooLarge)
CPG_DEFINE_ERROR(SingularSystem, kSingularSystem)
CPG_DEFINE_ERROR(TheoremViolation, kTheoremViolation)
CPG_DEFINE_ERROR(DomainEscape, kDomainEscape)
CPG_DEFINE_ERROR(UnsupportedDimension, kUnsupportedDimension)
CPG_DEFINE_ERROR(NotRestPoint, kNotRestPoint)
CPG_DEFINE_ERROR(NotNash, kNotNash)

#undef CPG_DEFINE_ERROR

}  // namespace cpg

#endif  // CPG_ERRORS_HPP_
