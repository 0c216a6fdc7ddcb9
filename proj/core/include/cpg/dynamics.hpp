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

#ifndef CPG_DYNAMICS_HPP_
#define CPG_DYNAMICS_HPP_

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "cpg/game.hpp"

namespace cpg {

enum class SystemKind { kSingle, kCoupled, kCp1, kCp2 };

std::string_view system_kind_name(SystemKind kind);

// v_i = x_i [(Mx)_i - x^T M x]
template <class T>
std::vector<T> rd_single_field(const SingleGame& s, const MixedStrategy<T>& x);

// vx_i = x_i [(Ay)_i - x^T A y],  vy_j = y_j [(x^T B)_j - x^T B y]
template <class T>
std::pair<std::vector<T>, std::vector<T>> rd_coupled_field(
    const BimatrixGame& g, const MixedStrategy<T>& x, const MixedStrategy<T>& y);

// (vy under A, vx under B^T): the two uncoupled counterpart flows.
template <class T>
std::pair<std::vector<T>, std::vector<T>> rd_counterpart_fields(
    const BimatrixGame& g, const MixedStrategy<T>& x, const MixedStrategy<T>& y);

// Replicator dynamics on one or two simplices in double precision. States
// are the populations concatenated: x, or (x, y) for coupled systems.
class ReplicatorSystem {
 public:
  static ReplicatorSystem single(const SingleGame& s);
  static ReplicatorSystem coupled(const BimatrixGame& g);
  // CP1 evolves y under A; CP2 evolves x under B^T. Throws NotSquare.
  static ReplicatorSystem counterpart(const BimatrixGame& g, SystemKind kind);

  SystemKind kind() const { return kind_; }
  const std::vector<std::size_t>& dimensions() const { return dims_; }
  std::size_t state_size() const;
  // Labels of the first population's actions, then the second's.
  const std::vector<std::string>& labels() const { return labels_; }
  // Payoff matrices: M for single systems, (A, B) for coupled ones.
  const Matrix<double>& first_matrix() const { return m1_; }
  const Matrix<double>& second_matrix() const { return m2_; }

  // Defined off the simplex too, as RK4 stages need.
  std::vector<double> velocity(std::span<const double> state) const;

 private:
  ReplicatorSystem(SystemKind kind, std::vector<std::size_t> dims,
                   std::vector<std::string> labels, Matrix<double> m1,
                   Matrix<double> m2 = {});

  SystemKind kind_;
  std::vector<std::size_t> dims_;
  std::vector<std::string> labels_;
  Matrix<double> m1_;
  Matrix<double> m2_;
};

struct Trajectory {
  SystemKind system = SystemKind::kSingle;
  std::vector<std::size_t> dimensions;
  std::vector<double> times;
  std::vector<std::vector<double>> states;
};

// Fixed-step classical RK4 with round(t_max / dt) steps. After each step,
// components in [-1e-9, 0) clamp to 0 and each population renormalizes.
// Throws DomainEscape below -1e-9, ValidationError for bad dt / t_max and
// SizeMismatch when `init` does not fit the system.
Trajectory integrate(const ReplicatorSystem& system,
                     const std::vector<FloatStrategy>& init, double dt,
                     double t_max);

struct FieldSample {
  std::vector<double> point;
  std::vector<double> velocity;
};

struct FieldGrid {
  std::vector<std::size_t> dimensions;
  std::vector<FieldSample> samples;
};

// Coupled 2x2 systems: resolution^2 points ((p,1-p),(q,1-q)) with
// p, q = i / (resolution - 1). Three-action single-population systems: the
// barycentric lattice with step 1 / resolution. Anything else throws
// UnsupportedDimension; resolution < 2 throws ValidationError.
FieldGrid sample_field_grid(const ReplicatorSystem& system,
                            std::size_t resolution);

}  // namespace cpg

#endif  // CPG_DYNAMICS_HPP_
