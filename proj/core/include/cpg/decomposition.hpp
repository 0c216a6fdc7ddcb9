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

#ifndef CPG_DECOMPOSITION_HPP_
#define CPG_DECOMPOSITION_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpg/game.hpp"
#include "cpg/nash.hpp"

namespace cpg {

// n! permutations are scanned, so padded games are capped at 5x5.
inline constexpr std::size_t kMaxDecompositionActions = 5;

using ExactEquilibrium = BimatrixEquilibrium<Rational>;
using ExactSingleEquilibrium = SingleEquilibrium<Rational>;

struct MatchedPair {
  std::size_t cp2_index = 0;  // into cp2_equilibria (plays x)
  std::size_t cp1_index = 0;  // into cp1_equilibria (plays y')
  ExactEquilibrium candidate;  // original, unpadded coordinates
};

struct PermutationResult {
  Permutation permutation;
  std::vector<ExactSingleEquilibrium> cp1_equilibria;  // NE of A.Sigma
  std::vector<ExactSingleEquilibrium> cp2_equilibria;  // NE of (B.Sigma)^T
  std::vector<MatchedPair> matched_pairs;
};

struct DecompositionReport {
  BimatrixGame game;
  PaddingRecord padding;
  std::vector<PermutationResult> per_permutation;
  std::vector<ExactEquilibrium> reconstructed;
  std::vector<ExactEquilibrium> direct_solution;
  // Absent when verification was not requested.
  std::optional<bool> agreement;
  // Decided on the unpadded game: padding always introduces ties.
  DegeneracyReport degeneracy;
};

struct DecomposeOptions {
  bool verify = true;
  // 0 picks the hardware concurrency; 1 runs sequentially.
  unsigned threads = 1;
};

// Pairs every x from cp2 with every y' from cp1 of identical support and
// maps y' back through sigma. `square` is the game before permutation.
std::vector<ExactEquilibrium> reconstruct_candidates(
    const BimatrixGame& square,
    const std::vector<ExactSingleEquilibrium>& cp1,
    const std::vector<ExactSingleEquilibrium>& cp2, const Permutation& sigma);

// Throws TooLarge past 5 actions after padding and TheoremViolation if a
// reconstructed profile is not an equilibrium of g.
DecompositionReport decompose(const BimatrixGame& g,
                              const DecomposeOptions& options = {});

struct VerificationReport {
  std::size_t trials = 0;  // non-degenerate games checked
  std::size_t discarded_degenerate = 0;
  std::size_t failures = 0;
  std::optional<BimatrixGame> counterexample;
  bool passed() const { return failures == 0; }
};

// Checks one game, counting it as discarded when degenerate.
void verify_game(const BimatrixGame& g, VerificationReport& report,
                 const DecomposeOptions& options = {});

struct RoundtripOptions {
  std::size_t trials = 200;
  // Square size of each game; absent draws 2..4 per game.
  std::optional<std::size_t> size;
  std::uint64_t seed = 42;
  DecomposeOptions decompose;
};

// Random games with integer payoffs in [-5, 5] until `trials`
// non-degenerate ones have been checked (at most 100 * trials draws).
VerificationReport verify_theorem_roundtrip(const RoundtripOptions& options);

}  // namespace cpg

#endif  // CPG_DECOMPOSITION_HPP_
