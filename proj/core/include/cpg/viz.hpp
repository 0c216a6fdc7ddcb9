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

#ifndef CPG_VIZ_HPP_
#define CPG_VIZ_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cpg/dynamics.hpp"
#include "cpg/game.hpp"

namespace cpg {

enum class PlotKind { kSquare, kSimplex };
enum class MarkerClass { kNashStable, kNashUnstable, kRestNonNash };

std::string_view marker_class_name(MarkerClass c);

struct Marker {
  // Full state: (x, y) concatenated for square plots, x for simplex plots.
  std::vector<double> point;
  MarkerClass marker_class = MarkerClass::kNashStable;
  // Tooltip text, typically the exact coordinates.
  std::string title;
};

struct PlotSpec {
  PlotKind kind = PlotKind::kSquare;
  // 0 selects 15 for squares and 20 for simplices.
  std::size_t grid_resolution = 0;
  bool draw_field = true;
  // Starts on a 5x5 interior lattice (squares) or the interior barycentric
  // lattice with step 1/5 (simplices), in addition to trajectory_starts.
  bool lattice_trajectories = false;
  std::vector<std::vector<FloatStrategy>> trajectory_starts;
  double dt = 0.01;
  double t_max = 50.0;
  std::vector<Marker> markers;
  std::size_t width_px = 600;
  std::size_t height_px = 600;
  // Square plots: the row action on the horizontal axis and the column
  // action on the vertical axis, as probabilities.
  std::array<std::size_t, 2> axis_actions = {0, 0};
};

// Throws UnsupportedDimension unless g is 2x2.
std::string plot_unit_square(const BimatrixGame& g, const PlotSpec& spec);

// Throws UnsupportedDimension unless s has three actions.
std::string plot_simplex(const SingleGame& s, const PlotSpec& spec);

// Exact equilibria of g, stable (ESS) or unstable by coupled classification.
std::vector<Marker> equilibrium_markers(const BimatrixGame& g);

// Every rest point of s with its Nash status and Jacobian classification.
std::vector<Marker> rest_point_markers(const SingleGame& s);

// Pixel position of a barycentric point on the plot's triangle: e1 bottom
// left, e2 bottom right, e3 top.
std::array<double, 2> simplex_to_svg(std::span<const double> x,
                                     std::size_t width_px,
                                     std::size_t height_px);

// `t,x1..xn[,y1..ym]` with %.17g values and LF line endings. CP1 states are
// written as y columns since that population is player 2's.
std::string export_csv(const Trajectory& trajectory);

// `p1..pk,v1..vk`; header only when the grid holds no samples.
std::string export_csv(const FieldGrid& grid);

}  // namespace cpg

#endif  // CPG_VIZ_HPP_
