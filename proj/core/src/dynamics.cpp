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

#include "cpg/dynamics.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "cpg/errors.hpp"

namespace cpg {

namespace {

constexpr double kEscapeThreshold = 1e-9;

template <class T>
std::vector<T> replicator(std::span<const T> x, const std::vector<T>& fitness) {
  const T average = dot<T>(x, fitness);
  std::vector<T> v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = x[i] * (fitness[i] - average);
  return v;
}

void check_size(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw SizeMismatch(std::string(what) + " has " + std::to_string(got) +
                       " components; expected " + std::to_string(want));
  }
}

}  // namespace

std::string_view system_kind_name(SystemKind kind) {
  switch (kind) {
    case SystemKind::kSingle:
      return "single";
    case SystemKind::kCoupled:
      return "coupled";
    case SystemKind::kCp1:
      return "cp1";
    case SystemKind::kCp2:
      return "cp2";
  }
  return "unknown";
}

template <class T>
std::vector<T> rd_single_field(const SingleGame& s, const MixedStrategy<T>& x) {
  check_size(x.size(), s.size(), "strategy");
  return replicator(x.probs(), multiply(s.payoffs_as<T>(), x.probs()));
}

template std::vector<Rational> rd_single_field(const SingleGame&,
                                               const ExactStrategy&);
template std::vector<double> rd_single_field(const SingleGame&,
                                             const FloatStrategy&);

template <class T>
std::pair<std::vector<T>, std::vector<T>> rd_coupled_field(
    const BimatrixGame& g, const MixedStrategy<T>& x, const MixedStrategy<T>& y) {
  check_size(x.size(), g.rows(), "x");
  check_size(y.size(), g.cols(), "y");
  return {replicator(x.probs(), multiply(g.row_payoffs_as<T>(), y.probs())),
          replicator(y.probs(), multiply_left(x.probs(), g.col_payoffs_as<T>()))};
}

template std::pair<std::vector<Rational>, std::vector<Rational>>
rd_coupled_field(const BimatrixGame&, const ExactStrategy&, const ExactStrategy&);
template std::pair<std::vector<double>, std::vector<double>> rd_coupled_field(
    const BimatrixGame&, const FloatStrategy&, const FloatStrategy&);

template <class T>
std::pair<std::vector<T>, std::vector<T>> rd_counterpart_fields(
    const BimatrixGame& g, const MixedStrategy<T>& x, const MixedStrategy<T>& y) {
  const auto cps = counterpart_games(g);
  return {rd_single_field(cps.first, y), rd_single_field(cps.second, x)};
}

template std::pair<std::vector<Rational>, std::vector<Rational>>
rd_counterpart_fields(const BimatrixGame&, const ExactStrategy&,
                      const ExactStrategy&);
template std::pair<std::vector<double>, std::vector<double>>
rd_counterpart_fields(const BimatrixGame&, const FloatStrategy&,
                      const FloatStrategy&);

ReplicatorSystem::ReplicatorSystem(SystemKind kind, std::vector<std::size_t> dims,
                                   std::vector<std::string> labels,
                                   Matrix<double> m1, Matrix<double> m2)
    : kind_(kind),
      dims_(std::move(dims)),
      labels_(std::move(labels)),
      m1_(std::move(m1)),
      m2_(std::move(m2)) {}

ReplicatorSystem ReplicatorSystem::single(const SingleGame& s) {
  return ReplicatorSystem(SystemKind::kSingle, {s.size()}, s.actions(),
                          s.payoffs_float());
}

ReplicatorSystem ReplicatorSystem::coupled(const BimatrixGame& g) {
  auto labels = g.row_actions();
  labels.insert(labels.end(), g.col_actions().begin(), g.col_actions().end());
  return ReplicatorSystem(SystemKind::kCoupled, {g.rows(), g.cols()},
                          std::move(labels), g.row_payoffs_float(),
                          g.col_payoffs_float());
}

ReplicatorSystem ReplicatorSystem::counterpart(const BimatrixGame& g,
                                               SystemKind kind) {
  const auto cps = counterpart_games(g);
  if (kind == SystemKind::kCp1) {
    return ReplicatorSystem(kind, {cps.first.size()}, cps.first.actions(),
                            cps.first.payoffs_float());
  }
  if (kind == SystemKind::kCp2) {
    return ReplicatorSystem(kind, {cps.second.size()}, cps.second.actions(),
                            cps.second.payoffs_float());
  }
  throw ValidationError("counterpart system must be cp1 or cp2");
}

std::size_t ReplicatorSystem::state_size() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

std::vector<double> ReplicatorSystem::velocity(std::span<const double> state) const {
  check_size(state.size(), state_size(), "state");
  if (kind_ != SystemKind::kCoupled) {
    return replicator(state, multiply(m1_, state));
  }
  const auto x = state.first(dims_[0]);
  const auto y = state.subspan(dims_[0]);
  auto v = replicator(x, multiply(m1_, y));
  const auto vy = replicator(y, multiply_left(x, m2_));
  v.insert(v.end(), vy.begin(), vy.end());
  return v;
}

namespace {

void project(std::vector<double>& state, const std::vector<std::size_t>& dims,
             double t) {
  std::size_t offset = 0;
  for (std::size_t d : dims) {
    double sum = 0.0;
    for (std::size_t i = offset; i < offset + d; ++i) {
      double& v = state[i];
      if (!std::isfinite(v) || v < -kEscapeThreshold) {
        throw DomainEscape("state left the simplex at t=" + std::to_string(t) +
                           "; reduce dt");
      }
      if (v < 0.0) v = 0.0;
      sum += v;
    }
    for (std::size_t i = offset; i < offset + d; ++i) state[i] /= sum;
    offset += d;
  }
}

}  // namespace

Trajectory integrate(const ReplicatorSystem& system,
                     const std::vector<FloatStrategy>& init, double dt,
                     double t_max) {
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ValidationError("dt must be positive");
  }
  if (!(t_max >= dt) || !std::isfinite(t_max)) {
    throw ValidationError("t_max must be at least dt");
  }
  const auto& dims = system.dimensions();
  check_size(init.size(), dims.size(), "initial state population list");
  std::vector<double> state;
  for (std::size_t p = 0; p < dims.size(); ++p) {
    check_size(init[p].size(), dims[p], "initial population");
    state.insert(state.end(), init[p].probs().begin(), init[p].probs().end());
  }

  const auto steps = static_cast<std::size_t>(std::llround(t_max / dt));
  Trajectory traj{system.kind(), dims, {}, {}};
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.times.push_back(0.0);
  traj.states.push_back(state);

  const std::size_t n = state.size();
  std::vector<double> stage(n);
  auto offset = [&](const std::vector<double>& k, double h) {
    for (std::size_t i = 0; i < n; ++i) stage[i] = state[i] + h * k[i];
    return system.velocity(stage);
  };
  for (std::size_t step = 1; step <= steps; ++step) {
    const auto k1 = system.velocity(state);
    const auto k2 = offset(k1, dt / 2);
    const auto k3 = offset(k2, dt / 2);
    const auto k4 = offset(k3, dt);
    for (std::size_t i = 0; i < n; ++i) {
      state[i] += dt / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    }
    const double t = static_cast<double>(step) * dt;
    project(state, dims, t);
    traj.times.push_back(t);
    traj.states.push_back(state);
  }
  return traj;
}

FieldGrid sample_field_grid(const ReplicatorSystem& system,
                            std::size_t resolution) {
  if (resolution < 2) throw ValidationError("grid resolution must be at least 2");
  const auto& dims = system.dimensions();
  FieldGrid grid{dims, {}};
  auto add = [&](std::vector<double> point) {
    auto v = system.velocity(point);
    grid.samples.push_back({std::move(point), std::move(v)});
  };

  if (system.kind() == SystemKind::kCoupled && dims[0] == 2 && dims[1] == 2) {
    const double last = static_cast<double>(resolution - 1);
    for (std::size_t i = 0; i < resolution; ++i) {
      const double p = static_cast<double>(i) / last;
      for (std::size_t j = 0; j < resolution; ++j) {
        const double q = static_cast<double>(j) / last;
        add({p, 1.0 - p, q, 1.0 - q});
      }
    }
    return grid;
  }
  if (system.kind() != SystemKind::kCoupled && dims[0] == 3) {
    const double r = static_cast<double>(resolution);
    for (std::size_t i = 0; i <= resolution; ++i) {
      for (std::size_t j = 0; i + j <= resolution; ++j) {
        const std::size_t k = resolution - i - j;
        add({static_cast<double>(i) / r, static_cast<double>(j) / r,
             static_cast<double>(k) / r});
      }
    }
    return grid;
  }
  throw UnsupportedDimension(
      "field grids need a coupled 2x2 system or a 3-action single population");
}

}  // namespace cpg
