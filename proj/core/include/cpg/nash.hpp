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

#ifndef CPG_NASH_HPP_
#define CPG_NASH_HPP_

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "cpg/game.hpp"

namespace cpg {

// Support enumeration is exponential; both solvers refuse larger games.
inline constexpr std::size_t kMaxSolverActions = 6;

using Support = std::vector<std::size_t>;

template <class T>
struct BimatrixEquilibrium {
  MixedStrategy<T> x;
  MixedStrategy<T> y;
  Support support_x;
  Support support_y;
  // Pure profile where each player's action is the unique best response.
  bool strict = false;
  std::pair<T, T> payoffs;
};

template <class T>
struct SingleEquilibrium {
  MixedStrategy<T> x;
  Support support;
  // Pure e_i with M_ii > M_ki for every k != i.
  bool strict = false;
  T payoff;
  // Barycentre standing in for a continuum of equilibria on this support.
  bool continuum = false;
};

template <class T>
struct RestPoint {
  MixedStrategy<T> point;
  Support support;
  bool is_nash = false;
  T common_payoff;
  bool continuum = false;
};

enum class DegeneracyReason { kSingularSystem, kExcessBestResponses, kContinuum };

std::string_view degeneracy_reason_name(DegeneracyReason reason);

struct DegeneracyWitness {
  Support support_x;
  Support support_y;
  DegeneracyReason reason = DegeneracyReason::kSingularSystem;

  friend bool operator==(const DegeneracyWitness&,
                         const DegeneracyWitness&) = default;
};

struct DegeneracyReport {
  std::vector<DegeneracyWitness> witnesses;
  bool degenerate() const { return !witnesses.empty(); }
};

template <class T>
struct BimatrixSolution {
  std::vector<BimatrixEquilibrium<T>> equilibria;
  DegeneracyReport degeneracy;
};

template <class T>
struct RestPointScan {
  std::vector<RestPoint<T>> points;
  DegeneracyReport degeneracy;
};

// Support enumeration over equal-cardinality support pairs, plus an
// unequal-cardinality scan when the game is degenerate. Degeneracy is always
// decided in exact arithmetic. Throws TooLarge beyond 6 actions per player.
template <class T>
BimatrixSolution<T> solve_bimatrix(const BimatrixGame& g);

template <class T>
std::vector<BimatrixEquilibrium<T>> enumerate_nash_bimatrix(
    const BimatrixGame& g) {
  return solve_bimatrix<T>(g).equilibria;
}

DegeneracyReport detect_degeneracy(const BimatrixGame& g);

// Fills in supports, strictness and payoffs for a profile of g.
template <class T>
BimatrixEquilibrium<T> describe_profile(const BimatrixGame& g,
                                        MixedStrategy<T> x, MixedStrategy<T> y);

// Sorts by (|I_x|, |I_y|, I_x, I_y, x, y) and drops duplicates (exact
// equality, or L-infinity distance below 1e-8 in float mode).
template <class T>
void canonicalize(std::vector<BimatrixEquilibrium<T>>& equilibria);

// All rest points of the single-population replicator dynamics, one per
// support; a continuum on a support is represented by its barycentre.
template <class T>
RestPointScan<T> scan_rest_points(const SingleGame& s);

template <class T>
std::vector<RestPoint<T>> enumerate_rest_points(const SingleGame& s) {
  return scan_rest_points<T>(s).points;
}

// The Nash subset of the rest points (symmetric equilibria only).
template <class T>
std::vector<SingleEquilibrium<T>> enumerate_nash_single(const SingleGame& s);

}  // namespace cpg

#endif  // CPG_NASH_HPP_
