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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "cpg/errors.hpp"
#include "cpg/nash.hpp"
#include "test_support.hpp"

namespace cpg {
namespace {

using testing::ex;
using testing::fl;
using testing::load;

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

TEST(FieldTest, SingleFieldExamples) {
  const auto rps = counterpart_games(load("rps.json")).first;
  for (const auto& v : rd_single_field(rps, ExactStrategy::uniform(3))) EXPECT_EQ(v, Rational(0));

  const auto cp1 = counterpart_games(load("bos.json")).first;
  EXPECT_EQ(rd_single_field(cp1, ex({"1/2", "1/2"})),
            (std::vector<Rational>{Rational(1, 8), Rational(-1, 8)}));
  for (std::size_t i = 0; i < 3; ++i)
    for (const auto& v : rd_single_field(rps, ExactStrategy::pure(3, i))) EXPECT_EQ(v, Rational(0));
}

TEST(FieldTest, CoupledFieldExamples) {
  const auto pd = load("pd.json");
  const auto [px, py] = rd_coupled_field(pd, ex({"0", "1"}), ex({"0", "1"}));
  EXPECT_EQ(px, (std::vector<Rational>{0, 0}));
  EXPECT_EQ(py, (std::vector<Rational>{0, 0}));

  const auto bos = load("bos.json");
  const auto [mx, my] = rd_coupled_field(bos, ex({"3/5", "2/5"}), ex({"2/5", "3/5"}));
  EXPECT_EQ(mx, (std::vector<Rational>{0, 0}));
  EXPECT_EQ(my, (std::vector<Rational>{0, 0}));

  const auto [hx, hy] = rd_coupled_field(bos, ex({"1/2", "1/2"}), ex({"1/2", "1/2"}));
  EXPECT_EQ(hx, (std::vector<Rational>{Rational(1, 8), Rational(-1, 8)}));
  EXPECT_EQ(hy, (std::vector<Rational>{Rational(-1, 8), Rational(1, 8)}));
  EXPECT_THROW(rd_coupled_field(bos, ExactStrategy::uniform(3), ExactStrategy::uniform(2)),
               SizeMismatch);
}

TEST(FieldTest, CounterpartFieldExamples) {
  const auto bos = load("bos.json");
  const auto [vy, vx] = rd_counterpart_fields(bos, ex({"3/5", "2/5"}), ex({"2/5", "3/5"}));
  EXPECT_EQ(vy, (std::vector<Rational>{0, 0}));
  EXPECT_EQ(vx, (std::vector<Rational>{0, 0}));

  const auto leduc = load("leduc_empirical.json");
  const auto [ly, lx] = rd_counterpart_fields(leduc, ExactStrategy::uniform(3), ex({"9/28", "0", "19/28"}));
  EXPECT_EQ(ly, (std::vector<Rational>{0, 0, 0}));
  EXPECT_THROW(rd_counterpart_fields(load("bos_extended.json"), ExactStrategy::uniform(2),
                                     ExactStrategy::uniform(3)),
               NotSquare);
}

// The float system agrees with the exact field at rational points.
TEST(FieldTest, SystemVelocityMatchesExactField) {
  const auto bos = load("bos.json");
  const auto sys = ReplicatorSystem::coupled(bos);
  const auto x = ex({"1/3", "2/3"});
  const auto y = ex({"3/4", "1/4"});
  const auto [vx, vy] = rd_coupled_field(bos, x, y);
  const auto v = sys.velocity(std::vector<double>{1.0 / 3, 2.0 / 3, 0.75, 0.25});
  EXPECT_NEAR(v[0], vx[0].to_double(), 1e-15);
  EXPECT_NEAR(v[3], vy[1].to_double(), 1e-15);
}

TEST(FieldTest, TangencyOnRandomStates) {
  std::mt19937_64 rng(1);
  const auto leduc = load("leduc_empirical.json");
  const auto ext = pad_to_square(load("bos_extended.json")).game;
  const std::vector<ReplicatorSystem> systems = {
      ReplicatorSystem::coupled(leduc), ReplicatorSystem::coupled(load("bos_extended.json")),
      ReplicatorSystem::counterpart(ext, SystemKind::kCp1),
      ReplicatorSystem::counterpart(ext, SystemKind::kCp2),
      ReplicatorSystem::single(counterpart_games(load("rps.json")).first)};
  for (const auto& sys : systems) {
    for (int trial = 0; trial < 10000; ++trial) {
      std::vector<double> state;
      for (std::size_t d : sys.dimensions()) {
        const auto p = testing::random_simplex_point(rng, d);
        state.insert(state.end(), p.begin(), p.end());
      }
      const auto v = sys.velocity(state);
      std::size_t offset = 0;
      for (std::size_t d : sys.dimensions()) {
        double s = 0;
        for (std::size_t i = offset; i < offset + d; ++i) s += v[i];
        ASSERT_LE(std::abs(s), 1e-12);
        offset += d;
      }
    }
  }
}

TEST(FieldTest, EquilibriaAreExactRestPoints) {
  for (const char* f : {"pd.json", "bos.json", "rps.json", "bos_extended.json",
                        "leduc_empirical.json", "fullsupport.json"}) {
    const auto g = load(f);
    for (const auto& e : enumerate_nash_bimatrix<Rational>(g)) {
      const auto [vx, vy] = rd_coupled_field(g, e.x, e.y);
      for (const auto& v : vx) EXPECT_EQ(v, Rational(0)) << f;
      for (const auto& v : vy) EXPECT_EQ(v, Rational(0)) << f;
    }
    if (!g.is_square()) continue;
    const auto cps = counterpart_games(g);
    for (const auto& s : {cps.first, cps.second})
      for (const auto& r : enumerate_rest_points<Rational>(s))
        for (const auto& v : rd_single_field(s, r.point)) EXPECT_EQ(v, Rational(0)) << f;
  }
}

TEST(IntegrateTest, PrisonersDilemmaConverges) {
  const auto sys = ReplicatorSystem::coupled(load("pd.json"));
  const auto traj = integrate(sys, {fl({0.9, 0.1}), fl({0.9, 0.1})}, 0.01, 50);
  EXPECT_EQ(traj.times.size(), 5001u);
  EXPECT_DOUBLE_EQ(traj.times.back(), 50.0);
  EXPECT_LE(testing::linf(traj.states.back(), {0, 1, 0, 1}), 1e-3);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const double p = (i + 0.5) / 5;
      const double q = (j + 0.5) / 5;
      const auto t = integrate(sys, {fl({p, 1 - p}), fl({q, 1 - q})}, 0.01, 50);
      EXPECT_LE(testing::linf(t.states.back(), {0, 1, 0, 1}), 1e-3);
    }
}

TEST(IntegrateTest, StatesStayOnSimplex) {
  const auto sys = ReplicatorSystem::coupled(load("leduc_empirical.json"));
  const auto traj = integrate(sys, {fl({0.2, 0.5, 0.3}), fl({0.6, 0.3, 0.1})}, 0.01, 20);
  for (const auto& s : traj.states) {
    EXPECT_NEAR(s[0] + s[1] + s[2], 1.0, 1e-9);
    EXPECT_NEAR(s[3] + s[4] + s[5], 1.0, 1e-9);
    for (double v : s) EXPECT_GE(v, 0.0);
  }
  for (std::size_t k = 1; k < traj.times.size(); ++k) EXPECT_GT(traj.times[k], traj.times[k - 1]);
}

TEST(IntegrateTest, RockPaperScissorsConservesEntropyTerm) {
  const auto sys = ReplicatorSystem::single(counterpart_games(load("rps.json")).first);
  const auto traj = integrate(sys, {fl({0.5, 0.3, 0.2})}, 0.01, 100);
  auto h = [](const std::vector<double>& x) {
    return (std::log(x[0]) + std::log(x[1]) + std::log(x[2])) / 3;
  };
  const double h0 = h(traj.states.front());
  double drift = 0;
  for (const auto& s : traj.states) drift = std::max(drift, std::abs(h(s) - h0));
  EXPECT_LT(drift, 1e-6);
}

TEST(IntegrateTest, LeducFaceConservation) {
  const auto sys = ReplicatorSystem::coupled(load("leduc_empirical.json"));
  const std::vector<double> xs = {29.0 / 35, 0, 6.0 / 35};
  const std::vector<double> ys = {9.0 / 28, 0, 19.0 / 28};
  auto h = [&](const std::vector<double>& s) {
    double v = 0;
    for (std::size_t i : {0u, 2u}) v += xs[i] * std::log(s[i]) + ys[i] * std::log(s[3 + i]);
    return v;
  };
  const auto traj = integrate(sys, {fl({0.6, 0, 0.4}), fl({0.5, 0, 0.5})}, 0.01, 100);
  const double h0 = h(traj.states.front());
  double drift = 0;
  for (const auto& s : traj.states) {
    drift = std::max(drift, std::abs(h(s) - h0));
    ASSERT_EQ(s[1], 0.0);
    ASSERT_EQ(s[4], 0.0);
  }
  EXPECT_LT(drift, 1e-5);
}

TEST(IntegrateTest, RestPointGivesConstantTrajectory) {
  const auto sys = ReplicatorSystem::coupled(load("bos.json"));
  const auto traj = integrate(sys, {fl({0.6, 0.4}), fl({0.4, 0.6})}, 0.01, 10);
  for (const auto& s : traj.states)
    EXPECT_LT(testing::linf(s, traj.states.front()), 1e-12);
  const auto single = ReplicatorSystem::single(counterpart_games(load("fullsupport.json")).first);
  const auto t2 = integrate(single, {fl({0, 1, 0})}, 0.01, 10);
  EXPECT_EQ(t2.states.back(), (std::vector<double>{0, 1, 0}));
}

TEST(IntegrateTest, FacesAreInvariant) {
  std::mt19937_64 rng(6);
  const auto sys = ReplicatorSystem::single(counterpart_games(load("fullsupport.json")).second);
  for (int trial = 0; trial < 20; ++trial) {
    auto p = testing::random_simplex_point(rng, 2);
    const std::size_t zero = trial % 3;
    std::vector<double> x;
    for (std::size_t i = 0, k = 0; i < 3; ++i) x.push_back(i == zero ? 0.0 : p[k++]);
    const auto traj = integrate(sys, {FloatStrategy(x)}, 0.01, 5);
    for (const auto& s : traj.states) ASSERT_EQ(s[zero], 0.0);
  }
}

// Error at t = 10 against a fine reference should fall ~16x per halving.
TEST(IntegrateTest, FourthOrderConvergence) {
  const auto sys = ReplicatorSystem::coupled(load("bos.json"));
  const std::vector<FloatStrategy> init = {fl({0.55, 0.45}), fl({0.45, 0.55})};
  const double coarse = 0.2;
  const auto reference = integrate(sys, init, coarse / 20, 10).states.back();
  const double e1 = testing::linf(integrate(sys, init, coarse, 10).states.back(), reference);
  const double e2 = testing::linf(integrate(sys, init, coarse / 2, 10).states.back(), reference);
  EXPECT_GE(e1 / e2, 12.0) << e1 << " " << e2;
}

TEST(IntegrateTest, LargeStepEscapesDomain) {
  const auto sys = ReplicatorSystem::coupled(load("pd.json"));
  EXPECT_THROW(integrate(sys, {fl({0.5, 0.5}), fl({0.5, 0.5})}, 5.0, 50), DomainEscape);
}

TEST(IntegrateTest, RejectsBadArguments) {
  const auto sys = ReplicatorSystem::coupled(load("pd.json"));
  EXPECT_THROW(integrate(sys, {fl({0.5, 0.5}), fl({0.5, 0.5})}, 0.0, 1), ValidationError);
  EXPECT_THROW(integrate(sys, {fl({0.5, 0.5}), fl({0.5, 0.5})}, 0.1, 0.01), ValidationError);
  EXPECT_THROW(integrate(sys, {fl({0.5, 0.5})}, 0.1, 1), SizeMismatch);
  EXPECT_THROW(integrate(sys, {fl({0.5, 0.5}), fl({0.2, 0.3, 0.5})}, 0.1, 1), SizeMismatch);
}

TEST(IntegrateTest, CounterpartSystemsFollowTheirMatrices) {
  const auto bos = load("bos.json");
  const auto cp1 = ReplicatorSystem::counterpart(bos, SystemKind::kCp1);
  const auto cp2 = ReplicatorSystem::counterpart(bos, SystemKind::kCp2);
  EXPECT_EQ(cp1.labels(), bos.col_actions());
  EXPECT_EQ(cp2.labels(), bos.row_actions());
  // CP1's mixed equilibrium (2/5, 3/5) is a rest point; (3/5, 2/5) is not.
  const auto v1 = cp1.velocity(std::vector<double>{0.4, 0.6});
  EXPECT_NEAR(v1[0], 0.0, 1e-15);
  EXPECT_GT(std::abs(cp1.velocity(std::vector<double>{0.6, 0.4})[0]), 1e-3);
  EXPECT_NEAR(cp2.velocity(std::vector<double>{0.6, 0.4})[0], 0.0, 1e-15);
  EXPECT_THROW(ReplicatorSystem::counterpart(load("bos_extended.json"), SystemKind::kCp1),
               NotSquare);
}

TEST(GridTest, UnitSquareGrid) {
  const auto grid = sample_field_grid(ReplicatorSystem::coupled(load("pd.json")), 15);
  EXPECT_EQ(grid.samples.size(), 225u);
  for (const auto& s : grid.samples) {
    EXPECT_LE(std::abs(s.velocity[0] + s.velocity[1]), 1e-12);
    EXPECT_LE(std::abs(s.velocity[2] + s.velocity[3]), 1e-12);
  }
  const auto bos = sample_field_grid(ReplicatorSystem::coupled(load("bos.json")), 15);
  for (const auto& s : bos.samples)
    if (s.point[0] == 0.0 && s.point[2] == 0.0) {
      for (double v : s.velocity) EXPECT_EQ(v, 0.0);
    }
}

TEST(GridTest, SimplexGrid) {
  const auto grid = sample_field_grid(
      ReplicatorSystem::single(counterpart_games(load("rps.json")).first), 20);
  EXPECT_EQ(grid.samples.size(), 231u);
  const auto grid3 = sample_field_grid(
      ReplicatorSystem::single(counterpart_games(load("rps.json")).first), 3);
  bool centroid = false;
  for (const auto& s : grid3.samples) {
    if (std::abs(s.point[0] - 1.0 / 3) < 1e-15 && std::abs(s.point[1] - 1.0 / 3) < 1e-15) {
      centroid = true;
      for (double v : s.velocity) EXPECT_NEAR(v, 0.0, 1e-15);
    }
    EXPECT_NEAR(sum(s.point), 1.0, 1e-15);
  }
  EXPECT_TRUE(centroid);
}

TEST(GridTest, UnsupportedShapes) {
  EXPECT_THROW(sample_field_grid(ReplicatorSystem::coupled(load("rps.json")), 10),
               UnsupportedDimension);
  EXPECT_THROW(sample_field_grid(ReplicatorSystem::single(counterpart_games(load("bos.json")).first), 10),
               UnsupportedDimension);
  EXPECT_THROW(sample_field_grid(ReplicatorSystem::coupled(load("pd.json")), 1), ValidationError);
}

}  // namespace
}  // namespace cpg
