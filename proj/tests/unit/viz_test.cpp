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


#include "cpg/viz.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <regex>
#include <sstream>

#include "cpg/errors.hpp"
#include "cpg/nash.hpp"
#include "test_support.hpp"

namespace cpg {
namespace {

using testing::fl;
using testing::load;

struct Circle {
  std::string css;
  double cx;
  double cy;
};

struct Line {
  double x1, y1, x2, y2;
};

std::vector<Circle> circles(const std::string& svg) {
  static const std::regex re(R"re(<circle class="([a-z-]+)" cx="([-0-9.]+)" cy="([-0-9.]+)")re");
  std::vector<Circle> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it)
    out.push_back({(*it)[1], std::stod((*it)[2]), std::stod((*it)[3])});
  return out;
}

std::vector<Line> arrows(const std::string& svg) {
  static const std::regex re(
      R"re(<line class="arrow" x1="([-0-9.]+)" y1="([-0-9.]+)" x2="([-0-9.]+)" y2="([-0-9.]+)")re");
  std::vector<Line> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it)
    out.push_back({std::stod((*it)[1]), std::stod((*it)[2]), std::stod((*it)[3]), std::stod((*it)[4])});
  return out;
}

std::size_t count(const std::string& svg, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++n;
  return n;
}

PlotSpec square_spec(const BimatrixGame& g, std::array<std::size_t, 2> axes) {
  PlotSpec spec;
  spec.kind = PlotKind::kSquare;
  spec.axis_actions = axes;
  spec.markers = equilibrium_markers(g);
  return spec;
}

PlotSpec simplex_spec(const SingleGame& s) {
  PlotSpec spec;
  spec.kind = PlotKind::kSimplex;
  spec.markers = rest_point_markers(s);
  return spec;
}

TEST(SquarePlotTest, PrisonersDilemmaFlowsToDefection) {
  const auto pd = load("pd.json");
  const auto svg = plot_unit_square(pd, square_spec(pd, {1, 1}));
  const auto cs = circles(svg);
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].css, "marker-nash-stable");
  EXPECT_DOUBLE_EQ(cs[0].cx, 540.0);
  EXPECT_DOUBLE_EQ(cs[0].cy, 60.0);
  const auto as = arrows(svg);
  EXPECT_GT(as.size(), 200u);
  for (const auto& a : as) {
    EXPECT_GE(a.x2 - a.x1, -0.011);
    EXPECT_LE(a.y2 - a.y1, 0.011);
  }
}

TEST(SquarePlotTest, ArrowsScaledToGridSpacing) {
  const auto pd = load("pd.json");
  const auto svg = plot_unit_square(pd, square_spec(pd, {1, 1}));
  double longest = 0;
  for (const auto& a : arrows(svg)) longest = std::max(longest, std::hypot(a.x2 - a.x1, a.y2 - a.y1));
  EXPECT_NEAR(longest, 0.8 * 480.0 / 14.0, 0.02);
}

// Each arrow points along the field sampled at its tail.
TEST(SquarePlotTest, ArrowsAreTangentToTheField) {
  const auto bos = load("bos.json");
  PlotSpec spec = square_spec(bos, {0, 0});
  const auto svg = plot_unit_square(bos, spec);
  const auto sys = ReplicatorSystem::coupled(bos);
  for (const auto& a : arrows(svg)) {
    const double p = (a.x1 - 60.0) / 480.0;
    const double q = (540.0 - a.y1) / 480.0;
    const auto v = sys.velocity(std::vector<double>{p, 1 - p, q, 1 - q});
    const double dx = v[0] * 480.0;
    const double dy = -v[2] * 480.0;
    const double cross = (a.x2 - a.x1) * dy - (a.y2 - a.y1) * dx;
    const double norm = std::hypot(dx, dy) * std::hypot(a.x2 - a.x1, a.y2 - a.y1);
    if (norm > 1e-6) {
      EXPECT_LT(std::abs(cross) / norm, 0.05);
    }
  }
}

TEST(SquarePlotTest, BattleOfTheSexesMarkers) {
  const auto bos = load("bos.json");
  const auto cs = circles(plot_unit_square(bos, square_spec(bos, {0, 0})));
  ASSERT_EQ(cs.size(), 3u);
  EXPECT_EQ(cs[0].css, "marker-nash-stable");
  EXPECT_DOUBLE_EQ(cs[0].cx, 540.0);
  EXPECT_DOUBLE_EQ(cs[0].cy, 60.0);
  EXPECT_EQ(cs[1].css, "marker-nash-stable");
  EXPECT_DOUBLE_EQ(cs[1].cx, 60.0);
  EXPECT_DOUBLE_EQ(cs[1].cy, 540.0);
  EXPECT_EQ(cs[2].css, "marker-nash-unstable");
  EXPECT_DOUBLE_EQ(cs[2].cx, 60.0 + 0.6 * 480.0);
  EXPECT_DOUBLE_EQ(cs[2].cy, 540.0 - 0.4 * 480.0);
}

TEST(SquarePlotTest, TrajectoriesAndLattice) {
  const auto pd = load("pd.json");
  PlotSpec spec = square_spec(pd, {1, 1});
  spec.draw_field = false;
  spec.lattice_trajectories = true;
  spec.trajectory_starts = {{fl({0.9, 0.1}), fl({0.9, 0.1})}};
  const auto svg = plot_unit_square(pd, spec);
  EXPECT_EQ(count(svg, "class=\"trajectory\""), 26u);
  EXPECT_EQ(count(svg, "class=\"arrow\""), 0u);
}

TEST(SquarePlotTest, RejectsOtherShapes) {
  EXPECT_THROW(plot_unit_square(load("rps.json"), PlotSpec{}), UnsupportedDimension);
  EXPECT_THROW(plot_unit_square(load("bos_extended.json"), PlotSpec{}), UnsupportedDimension);
  EXPECT_THROW(plot_simplex(counterpart_games(load("bos.json")).first, PlotSpec{}),
               UnsupportedDimension);
}

TEST(SimplexTest, ProjectionMapsCornersAndCentroid) {
  const auto e1 = simplex_to_svg(std::vector<double>{1, 0, 0}, 600, 600);
  const auto e2 = simplex_to_svg(std::vector<double>{0, 1, 0}, 600, 600);
  const auto e3 = simplex_to_svg(std::vector<double>{0, 0, 1}, 600, 600);
  EXPECT_LT(e1[0], e2[0]);
  EXPECT_DOUBLE_EQ(e1[1], e2[1]);
  EXPECT_LT(e3[1], e1[1]);
  EXPECT_DOUBLE_EQ(e3[0], 300.0);
  EXPECT_NEAR(std::hypot(e2[0] - e1[0], e2[1] - e1[1]), std::hypot(e3[0] - e1[0], e3[1] - e1[1]), 1e-9);
  const auto c = simplex_to_svg(std::vector<double>{1.0 / 3, 1.0 / 3, 1.0 / 3}, 600, 600);
  EXPECT_NEAR(c[0], (e1[0] + e2[0] + e3[0]) / 3, 1e-12);
  EXPECT_NEAR(c[1], (e1[1] + e2[1] + e3[1]) / 3, 1e-12);
}

TEST(SimplexTest, RockPaperScissorsCentroidMarker) {
  const auto s = counterpart_games(load("rps.json")).first;
  PlotSpec spec = simplex_spec(s);
  spec.trajectory_starts = {{fl({0.5, 0.3, 0.2})}};
  const auto svg = plot_simplex(s, spec);
  const auto c = simplex_to_svg(std::vector<double>{1.0 / 3, 1.0 / 3, 1.0 / 3}, 600, 600);
  int centroid = 0;
  for (const auto& m : circles(svg)) {
    if (std::abs(m.cx - c[0]) < 0.01 && std::abs(m.cy - c[1]) < 0.01) {
      ++centroid;
      EXPECT_EQ(m.css, "marker-nash-unstable");
    } else {
      EXPECT_EQ(m.css, "marker-rest");
    }
  }
  EXPECT_EQ(centroid, 1);
  EXPECT_EQ(count(svg, "class=\"trajectory\""), 1u);
  // The orbit keeps its distance from the centre.
  const auto traj = integrate(ReplicatorSystem::single(s), {fl({0.5, 0.3, 0.2})}, 0.01, 50);
  double closest = 1;
  for (const auto& st : traj.states)
    closest = std::min(closest, testing::linf(st, {1.0 / 3, 1.0 / 3, 1.0 / 3}));
  EXPECT_GT(closest, 0.05);
}

TEST(SimplexTest, ExtendedBosSecondCounterpartMarkers) {
  const auto s = counterpart_games(pad_to_square(load("bos_extended.json")).game).second;
  const auto markers = rest_point_markers(s);
  std::vector<std::vector<double>> nash, rest;
  for (const auto& m : markers)
    (m.marker_class == MarkerClass::kRestNonNash ? rest : nash).push_back(m.point);
  ASSERT_EQ(nash.size(), 2u);
  ASSERT_EQ(rest.size(), 2u);
  EXPECT_EQ(nash[0], (std::vector<double>{1, 0, 0}));
  EXPECT_EQ(nash[1], (std::vector<double>{0, 0, 1}));
  EXPECT_EQ(rest[0], (std::vector<double>{0, 1, 0}));
  EXPECT_NEAR(rest[1][0], 11.0 / 41, 1e-15);
  EXPECT_EQ(rest[1][2], 0.0);
}

TEST(SimplexTest, LeducFirstCounterpartHasOneNashMarkerOnEdge) {
  const auto s = counterpart_games(load("leduc_empirical.json")).first;
  const auto svg = plot_simplex(s, simplex_spec(s));
  const auto pos = simplex_to_svg(std::vector<double>{9.0 / 28, 0, 19.0 / 28}, 600, 600);
  int nash = 0;
  for (const auto& m : circles(svg)) {
    if (m.css == "marker-rest") continue;
    ++nash;
    EXPECT_EQ(m.css, "marker-nash-stable");
    EXPECT_NEAR(m.cx, pos[0], 0.005);
    EXPECT_NEAR(m.cy, pos[1], 0.005);
  }
  EXPECT_EQ(nash, 1);
  const auto markers = rest_point_markers(s);
  for (const auto& m : markers)
    if (m.marker_class != MarkerClass::kRestNonNash) {
      EXPECT_NEAR(m.point[0], 0.321, 5e-4);
      EXPECT_EQ(m.point[1], 0.0);
      EXPECT_NEAR(m.point[2], 0.679, 5e-4);
    }
}

TEST(SimplexTest, MarkersMirrorSolverOutput) {
  for (const char* f : {"rps.json", "fullsupport.json", "leduc_empirical.json"}) {
    const auto s = counterpart_games(load(f)).second;
    const auto markers = rest_point_markers(s);
    const auto points = enumerate_rest_points<Rational>(s);
    ASSERT_EQ(markers.size(), points.size()) << f;
    for (std::size_t k = 0; k < points.size(); ++k) {
      EXPECT_EQ(markers[k].point, testing::to_vec(points[k].point)) << f;
      EXPECT_EQ(markers[k].marker_class == MarkerClass::kRestNonNash, !points[k].is_nash) << f;
    }
  }
}

TEST(SimplexTest, LatticeTrajectoryCount) {
  const auto s = counterpart_games(load("rps.json")).first;
  PlotSpec spec = simplex_spec(s);
  spec.lattice_trajectories = true;
  spec.t_max = 1;
  EXPECT_EQ(count(plot_simplex(s, spec), "class=\"trajectory\""), 6u);
}

TEST(DeterminismTest, DocumentsAreByteIdentical) {
  const auto bos = load("bos.json");
  PlotSpec spec = square_spec(bos, {0, 0});
  spec.lattice_trajectories = true;
  EXPECT_EQ(plot_unit_square(bos, spec), plot_unit_square(bos, spec));
  const auto s = counterpart_games(load("fullsupport.json")).first;
  EXPECT_EQ(plot_simplex(s, simplex_spec(s)), plot_simplex(s, simplex_spec(s)));
}

TEST(SvgTest, DocumentStructure) {
  const auto s = counterpart_games(load("rps.json")).first;
  const auto svg = plot_simplex(s, simplex_spec(s));
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("viewBox=\"0 0 600 600\""), std::string::npos);
  EXPECT_EQ(svg.substr(svg.size() - 7), "</svg>\n");
  EXPECT_EQ(svg.find('\r'), std::string::npos);
  EXPECT_NE(svg.find("<title>x=(1/3, 1/3, 1/3) nash_not_ess</title>"), std::string::npos);
}

TEST(CsvTest, TrajectoryRowsAndHeader) {
  const auto traj = integrate(ReplicatorSystem::coupled(load("pd.json")),
                              {fl({0.9, 0.1}), fl({0.9, 0.1})}, 0.01, 0.03);
  const auto csv = export_csv(traj);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,x1,x2,y1,y2");
  EXPECT_EQ(count(csv, "\n"), 5u);
  EXPECT_EQ(csv.find('\r'), std::string::npos);

  const auto cp1 = integrate(ReplicatorSystem::counterpart(load("bos.json"), SystemKind::kCp1),
                             {fl({0.5, 0.5})}, 0.01, 0.01);
  EXPECT_EQ(export_csv(cp1).substr(0, 6), "t,y1,y");
}

TEST(CsvTest, EmptyFieldGridIsHeaderOnly) {
  FieldGrid grid{{3}, {}};
  EXPECT_EQ(export_csv(grid), "p1,p2,p3,v1,v2,v3\n");
  const auto full = export_csv(sample_field_grid(ReplicatorSystem::coupled(load("pd.json")), 3));
  EXPECT_EQ(count(full, "\n"), 10u);
}

TEST(CsvTest, RoundTripIsBitExact) {
  const auto traj = integrate(ReplicatorSystem::single(counterpart_games(load("rps.json")).first),
                              {fl({0.5, 0.3, 0.2})}, 0.01, 5);
  std::istringstream in(export_csv(traj));
  std::string line;
  std::getline(in, line);
  std::size_t row = 0;
  while (std::getline(in, line)) {
    std::vector<double> values;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) values.push_back(std::strtod(cell.c_str(), nullptr));
    ASSERT_EQ(values.size(), 4u);
    EXPECT_EQ(values[0], traj.times[row]);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(values[i + 1], traj.states[row][i]);
    ++row;
  }
  EXPECT_EQ(row, traj.states.size());
}

}  // namespace
}  // namespace cpg
