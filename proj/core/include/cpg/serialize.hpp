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

#ifndef CPG_SERIALIZE_HPP_
#define CPG_SERIALIZE_HPP_

#include <string>
#include <vector>

#include "cpg/decomposition.hpp"
#include "cpg/nash.hpp"
#include "cpg/stability.hpp"

namespace cpg {

// JSON documents, pretty-printed with a trailing newline. Exact values are
// "p/q" strings; float values are JSON numbers.

template <class T>
std::string to_json(const std::vector<BimatrixEquilibrium<T>>& equilibria);

template <class T>
std::string to_json(const std::vector<SingleEquilibrium<T>>& equilibria);

template <class T>
std::string to_json(const std::vector<RestPoint<T>>& points);

std::string to_json(const StabilityClassification& classification);
std::string to_json(const DegeneracyReport& report);
std::string to_json(const DecompositionReport& report);
std::string to_json(const VerificationReport& report);

}  // namespace cpg

#endif  // CPG_SERIALIZE_HPP_
