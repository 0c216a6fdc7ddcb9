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

#ifndef CPG_STABILITY_HPP_
#define CPG_STABILITY_HPP_

#include <complex>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cpg/dynamics.hpp"
#include "cpg/game.hpp"

namespace cpg {

enum class LocalType { kSink, kSource, kSaddle, kCenter, kDegenerate };
enum class StabilityCategory { kEssStable, kNashNotEss, kNonNashRestPoint };

std::string_view local_type_name(LocalType type);
std::string_view category_name(StabilityCategory category);

// Eigenvalues with |Re| or |Im| below this are treated as zero.
inline constexpr double kEigenThreshold = 1e-7;
// Largest velocity component still accepted as a rest point.
inline constexpr double kRestPointTolerance = 1e-9;

struct StabilityClassification {
  StabilityCategory category = StabilityCategory::kNonNashRestPoint;
  LocalType local_type = LocalType::kDegenerate;
  // Restricted to the simplex tangent space; sorted by real part, then
  // imaginary part, both descending.
  std::vector<std::complex<double>> eigenvalues;
  // Only set for coupled systems classified from an exact profile.
  std::optional<bool> two_species_ess;
};

// Analytic Jacobian of the system's velocity at `point` (full state space).
// Throws NotRestPoint when the velocity exceeds 1e-9 there.
Matrix<double> rd_jacobian(const ReplicatorSystem& system,
                           std::span<const double> point);

// Eigenvalues of U^T J U, with U an orthonormal basis of the directions
// whose components sum to zero within each population.
std::vector<std::complex<double>> tangent_eigenvalues(
    const ReplicatorSystem& system, const Matrix<double>& jacobian);

LocalType classify_eigenvalues(const std::vector<std::complex<double>>& eigenvalues);

StabilityClassification classify_rest_point(const ReplicatorSystem& system,
                                            std::span<const double> point,
                                            bool is_nash);

// Single-population rest point; Nash status decided exactly.
StabilityClassification classify_rest_point(const SingleGame& s,
                                            const ExactStrategy& x);

// Coupled rest point; also fills two_species_ess (false when not Nash).
StabilityClassification classify_rest_point(const BimatrixGame& g,
                                            const ExactStrategy& x,
                                            const ExactStrategy& y);

// True iff (x, y) is a strict equilibrium, which for two populations is the
// two-species ESS. Throws NotNash when (x, y) is not an equilibrium.
bool two_species_ess_check(const BimatrixGame& g, const ExactStrategy& x,
                           const ExactStrategy& y);

}  // namespace cpg

#endif  // CPG_STABILITY_HPP_
