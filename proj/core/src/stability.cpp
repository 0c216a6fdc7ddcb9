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

#include "cpg/stability.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "cpg/errors.hpp"
#include "cpg/nash.hpp"

namespace cpg {

std::string_view local_type_name(LocalType type) {
  switch (type) {
    case LocalType::kSink:
      return "sink";
    case LocalType::kSource:
      return "source";
    case LocalType::kSaddle:
      return "saddle";
    case LocalType::kCenter:
      return "center";
    case LocalType::kDegenerate:
      return "degenerate";
  }
  return "unknown";
}

std::string_view category_name(StabilityCategory category) {
  switch (category) {
    case StabilityCategory::kEssStable:
      return "ess_stable";
    case StabilityCategory::kNashNotEss:
      return "nash_not_ess";
    case StabilityCategory::kNonNashRestPoint:
      return "non_nash_rest_point";
  }
  return "unknown";
}

namespace {

// J_ij = d_ij [(Mx)_i - x^T M x] + x_i [M_ij - (Mx)_j - (M^T x)_j]
void single_block(const Matrix<double>& m, std::span<const double> x,
                  Matrix<double>& j) {
  const auto mx = multiply(m, x);
  const auto mtx = multiply_left(x, m);
  const double avg = dot<double>(x, mx);
  for (std::size_t r = 0; r < x.size(); ++r) {
    for (std::size_t c = 0; c < x.size(); ++c) {
      j(r, c) = x[r] * (m(r, c) - mx[c] - mtx[c]);
    }
    j(r, r) += mx[r] - avg;
  }
}

// One population's rows of the coupled Jacobian. `own` evolves with fitness
// P * other, where P is own-actions x other-actions.
void coupled_rows(const Matrix<double>& p, std::span<const double> own,
                  std::span<const double> other, std::size_t own_offset,
                  std::size_t other_offset, Matrix<double>& j) {
  const auto fitness = multiply(p, other);    // (P other)_i
  const auto pull = multiply_left(own, p);    // (own^T P)_k
  const double avg = dot<double>(own, fitness);
  for (std::size_t r = 0; r < own.size(); ++r) {
    for (std::size_t c = 0; c < own.size(); ++c) {
      j(own_offset + r, own_offset + c) = -own[r] * fitness[c];
    }
    j(own_offset + r, own_offset + r) += fitness[r] - avg;
    for (std::size_t c = 0; c < other.size(); ++c) {
      j(own_offset + r, other_offset + c) = own[r] * (p(r, c) - pull[c]);
    }
  }
}

}  // namespace

Matrix<double> rd_jacobian(const ReplicatorSystem& system,
                           std::span<const double> point) {
  const auto v = system.velocity(point);
  for (double c : v) {
    if (!(std::abs(c) < kRestPointTolerance)) {
      throw NotRestPoint("velocity component " + std::to_string(c) +
                         " exceeds the rest-point tolerance");
    }
  }
  const std::size_t n = point.size();
  Matrix<double> j(n, n);
  if (system.kind() != SystemKind::kCoupled) {
    single_block(system.first_matrix(), point, j);
    return j;
  }
  const std::size_t nx = system.dimensions()[0];
  const auto x = point.first(nx);
  const auto y = point.subspan(nx);
  coupled_rows(system.first_matrix(), x, y, 0, nx, j);
  coupled_rows(system.second_matrix().transpose(), y, x, nx, 0, j);
  return j;
}

std::vector<std::complex<double>> tangent_eigenvalues(
    const ReplicatorSystem& system, const Matrix<double>& jacobian) {
  const auto& dims = system.dimensions();
  const std::size_t n = system.state_size();
  std::size_t tangent = 0;
  for (std::size_t d : dims) tangent += d - 1;
  if (tangent == 0) return {};

  // Helmert basis per population, block diagonal.
  Eigen::MatrixXd u = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                            static_cast<Eigen::Index>(tangent));
  Eigen::Index col = 0;
  std::size_t offset = 0;
  for (std::size_t d : dims) {
    for (std::size_t k = 1; k < d; ++k, ++col) {
      const double scale = 1.0 / std::sqrt(static_cast<double>(k * (k + 1)));
      for (std::size_t i = 0; i < k; ++i) {
        u(static_cast<Eigen::Index>(offset + i), col) = scale;
      }
      u(static_cast<Eigen::Index>(offset + k), col) =
          -static_cast<double>(k) * scale;
    }
    offset += d;
  }
  Eigen::MatrixXd jm(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      jm(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          jacobian(r, c);
    }
  }
  const Eigen::MatrixXd reduced = u.transpose() * jm * u;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(reduced, false);
  std::vector<std::complex<double>> out;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    out.push_back(solver.eigenvalues()[i]);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() > b.real();
    return a.imag() > b.imag();
  });
  return out;
}

LocalType classify_eigenvalues(const std::vector<std::complex<double>>& eigenvalues) {
  if (eigenvalues.empty()) return LocalType::kDegenerate;
  auto all = [&](auto pred) {
    return std::all_of(eigenvalues.begin(), eigenvalues.end(), pred);
  };
  auto any = [&](auto pred) {
    return std::any_of(eigenvalues.begin(), eigenvalues.end(), pred);
  };
  if (all([](auto e) { return e.real() < -kEigenThreshold; })) return LocalType::kSink;
  if (all([](auto e) { return e.real() > kEigenThreshold; })) return LocalType::kSource;
  if (all([](auto e) {
        return std::abs(e.real()) <= kEigenThreshold &&
               std::abs(e.imag()) > kEigenThreshold;
      })) {
    return LocalType::kCenter;
  }
  if (any([](auto e) { return e.real() < -kEigenThreshold; }) &&
      any([](auto e) { return e.real() > kEigenThreshold; })) {
    return LocalType::kSaddle;
  }
  return LocalType::kDegenerate;
}

StabilityClassification classify_rest_point(const ReplicatorSystem& system,
                                            std::span<const double> point,
                                            bool is_nash) {
  StabilityClassification out;
  out.eigenvalues = tangent_eigenvalues(system, rd_jacobian(system, point));
  out.local_type = classify_eigenvalues(out.eigenvalues);
  if (!is_nash) {
    out.category = StabilityCategory::kNonNashRestPoint;
  } else if (out.local_type == LocalType::kSink) {
    out.category = StabilityCategory::kEssStable;
  } else {
    out.category = StabilityCategory::kNashNotEss;
  }
  return out;
}

StabilityClassification classify_rest_point(const SingleGame& s,
                                            const ExactStrategy& x) {
  const auto point = to_float(x);
  return classify_rest_point(ReplicatorSystem::single(s), point.probs(),
                             is_nash_single(s, x, 0.0));
}

StabilityClassification classify_rest_point(const BimatrixGame& g,
                                            const ExactStrategy& x,
                                            const ExactStrategy& y) {
  std::vector<double> point;
  for (const auto& p : x.probs()) point.push_back(p.to_double());
  for (const auto& p : y.probs()) point.push_back(p.to_double());
  const bool nash = is_nash_bimatrix(g, x, y, 0.0);
  auto out = classify_rest_point(ReplicatorSystem::coupled(g), point, nash);
  out.two_species_ess = nash && two_species_ess_check(g, x, y);
  return out;
}

bool two_species_ess_check(const BimatrixGame& g, const ExactStrategy& x,
                           const ExactStrategy& y) {
  if (!is_nash_bimatrix(g, x, y, 0.0)) {
    throw NotNash("profile is not a Nash equilibrium");
  }
  return describe_profile(g, x, y).strict;
}

}  // namespace cpg
