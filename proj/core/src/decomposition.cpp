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

#include "cpg/decomposition.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <random>
#include <thread>

#include "cpg/errors.hpp"

namespace cpg {

std::vector<ExactEquilibrium> reconstruct_candidates(
    const BimatrixGame& square,
    const std::vector<ExactSingleEquilibrium>& cp1,
    const std::vector<ExactSingleEquilibrium>& cp2, const Permutation& sigma) {
  std::vector<ExactEquilibrium> out;
  for (const auto& x : cp2) {
    for (const auto& y_perm : cp1) {
      if (x.support != y_perm.support) continue;
      out.push_back(
          describe_profile(square, x.x, unpermute_strategy(y_perm.x, sigma)));
    }
  }
  return out;
}

namespace {

PermutationResult analyse_permutation(const PaddedGame& padded,
                                      const BimatrixGame& original,
                                      const Permutation& sigma) {
  PermutationResult result{sigma, {}, {}, {}};
  const auto counterparts = counterpart_games(permute_columns(padded.game, sigma));
  result.cp1_equilibria = enumerate_nash_single<Rational>(counterparts.first);
  result.cp2_equilibria = enumerate_nash_single<Rational>(counterparts.second);

  for (std::size_t i = 0; i < result.cp2_equilibria.size(); ++i) {
    for (std::size_t j = 0; j < result.cp1_equilibria.size(); ++j) {
      const auto& x = result.cp2_equilibria[i];
      const auto& y_perm = result.cp1_equilibria[j];
      if (x.support != y_perm.support) continue;
      auto x_orig = strip_padding(x.x, padded.padding, Player::kRow);
      auto y_orig = strip_padding(unpermute_strategy(y_perm.x, sigma),
                                  padded.padding, Player::kCol);
      if (!is_nash_bimatrix(original, x_orig, y_orig, 0.0)) {
        throw TheoremViolation("matched counterpart equilibria do not form an "
                               "equilibrium of the game");
      }
      result.matched_pairs.push_back(
          {i, j, describe_profile(original, std::move(x_orig), std::move(y_orig))});
    }
  }
  return result;
}

std::vector<PermutationResult> analyse_all(const PaddedGame& padded,
                                           const BimatrixGame& original,
                                           unsigned threads) {
  const auto perms = Permutation::all(padded.game.rows());
  std::vector<std::optional<PermutationResult>> slots(perms.size());
  std::vector<std::exception_ptr> errors(perms.size());

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(perms.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < perms.size(); k = next++) {
      try {
        slots[k] = analyse_permutation(padded, original, perms[k]);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<PermutationResult> out;
  out.reserve(perms.size());
  for (std::size_t k = 0; k < perms.size(); ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    out.push_back(std::move(*slots[k]));
  }
  return out;
}

bool same_equilibria(const std::vector<ExactEquilibrium>& a,
                     const std::vector<ExactEquilibrium>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const auto& l, const auto& r) {
                      return l.x == r.x && l.y == r.y;
                    });
}

}  // namespace

DecompositionReport decompose(const BimatrixGame& g,
                              const DecomposeOptions& options) {
  auto padded = pad_to_square(g);
  if (padded.game.rows() > kMaxDecompositionActions) {
    throw TooLarge("decomposition scans n! permutations and is limited to " +
                   std::to_string(kMaxDecompositionActions) +
                   " actions after padding; got " +
                   std::to_string(padded.game.rows()));
  }
  DecompositionReport report{g, padded.padding, {}, {}, {}, std::nullopt, {}};
  report.per_permutation = analyse_all(padded, g, options.threads);
  for (const auto& result : report.per_permutation) {
    for (const auto& pair : result.matched_pairs) {
      report.reconstructed.push_back(pair.candidate);
    }
  }
  canonicalize(report.reconstructed);
  report.degeneracy = detect_degeneracy(g);

  if (options.verify) {
    report.direct_solution = enumerate_nash_bimatrix<Rational>(g);
    std::vector<ExactEquilibrium> equal_support;
    std::copy_if(report.direct_solution.begin(), report.direct_solution.end(),
                 std::back_inserter(equal_support), [](const auto& eq) {
                   return eq.support_x.size() == eq.support_y.size();
                 });
    report.agreement = same_equilibria(report.reconstructed, equal_support);
  }
  return report;
}

void verify_game(const BimatrixGame& g, VerificationReport& report,
                 const DecomposeOptions& options) {
  if (detect_degeneracy(g).degenerate()) {
    ++report.discarded_degenerate;
    return;
  }
  ++report.trials;
  DecomposeOptions verifying = options;
  verifying.verify = true;
  if (!decompose(g, verifying).agreement.value_or(false)) {
    ++report.failures;
    if (!report.counterexample) report.counterexample = g;
  }
}

VerificationReport verify_theorem_roundtrip(const RoundtripOptions& options) {
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> payoff(-5, 5);
  std::uniform_int_distribution<std::size_t> size_draw(2, 4);

  VerificationReport report;
  const std::size_t max_draws = 100 * std::max<std::size_t>(options.trials, 1);
  for (std::size_t draw = 0; draw < max_draws && report.trials < options.trials;
       ++draw) {
    const std::size_t n = options.size.value_or(size_draw(rng));
    Matrix<Rational> a(n, n);
    Matrix<Rational> b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = Rational(payoff(rng));
        b(i, j) = Rational(payoff(rng));
      }
    }
    std::vector<std::string> rows;
    std::vector<std::string> cols;
    for (std::size_t i = 0; i < n; ++i) {
      rows.push_back("r" + std::to_string(i + 1));
      cols.push_back("c" + std::to_string(i + 1));
    }
    verify_game(BimatrixGame("random-" + std::to_string(draw), std::move(rows),
                             std::move(cols), std::move(a), std::move(b)),
                report, options.decompose);
  }
  return report;
}

}  // namespace cpg
