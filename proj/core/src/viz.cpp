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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "cpg/errors.hpp"
#include "cpg/nash.hpp"
#include "cpg/stability.hpp"

namespace cpg {

namespace {

constexpr double kMargin = 60.0;
constexpr double kArrowFill = 0.8;
constexpr std::size_t kTrajectoryStride = 10;
constexpr std::size_t kLatticeSteps = 5;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  return s == "-0.00" ? "0.00" : s;
}

std::string csv_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string marker_css_class(MarkerClass c) {
  switch (c) {
    case MarkerClass::kNashStable: return "marker-nash-stable";
    case MarkerClass::kNashUnstable: return "marker-nash-unstable";
    case MarkerClass::kRestNonNash: return "marker-rest";
  }
  return "marker-rest";
}

std::string strategy_text(const ExactStrategy& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += s[i].to_string();
  }
  return out + ")";
}

using Point = std::array<double, 2>;

// Maps a full state to pixels and a velocity to a pixel displacement.
struct Projection {
  std::function<Point(std::span<const double>)> position;
  std::function<Point(std::span<const double>)> displacement;
};

std::string open_svg(const PlotSpec& spec, std::string_view title) {
  const auto w = std::to_string(spec.width_px);
  const auto h = std::to_string(spec.height_px);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + w +
         "\" height=\"" + h + "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
  out += "<title>" + escape(title) + "</title>\n";
  out +=
      "<style>\n"
      ".frame{fill:none;stroke:#000;stroke-width:1}\n"
      ".label{font-family:sans-serif;font-size:14px;fill:#000}\n"
      ".arrow{stroke:#666;stroke-width:1;marker-end:url(#head)}\n"
      ".trajectory{fill:none;stroke:#1f5fa8;stroke-width:1.2}\n"
      ".marker-nash-stable{fill:#f2c200;stroke:#000;stroke-width:1}\n"
      ".marker-nash-unstable{fill:none;stroke:#f28500;stroke-width:2.5}\n"
      ".marker-rest{fill:none;stroke:#2e9e3e;stroke-width:2.5}\n"
      "</style>\n"
      "<defs><marker id=\"head\" markerWidth=\"6\" markerHeight=\"6\" refX=\"5\" "
      "refY=\"3\" orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 Z\" fill=\"#666\"/>"
      "</marker></defs>\n"
      "<rect x=\"0\" y=\"0\" width=\"" + w + "\" height=\"" + h +
      "\" fill=\"#fff\"/>\n";
  return out;
}

std::string text(double x, double y, std::string_view anchor,
                 std::string_view content) {
  return "<text class=\"label\" x=\"" + num(x) + "\" y=\"" + num(y) +
         "\" text-anchor=\"" + std::string(anchor) + "\">" + escape(content) +
         "</text>\n";
}

std::string draw_field(const FieldGrid& grid, const Projection& proj,
                       double spacing_px) {
  double longest = 0.0;
  std::vector<std::pair<Point, Point>> arrows;
  for (const auto& sample : grid.samples) {
    const Point d = proj.displacement(sample.velocity);
    longest = std::max(longest, std::hypot(d[0], d[1]));
    arrows.emplace_back(proj.position(sample.point), d);
  }
  if (longest <= 0.0) return "";
  const double scale = kArrowFill * spacing_px / longest;
  std::string out = "<g id=\"field\">\n";
  for (const auto& [from, d] : arrows) {
    if (std::hypot(d[0], d[1]) * scale < 1e-9) continue;
    out += "<line class=\"arrow\" x1=\"" + num(from[0]) + "\" y1=\"" +
           num(from[1]) + "\" x2=\"" + num(from[0] + d[0] * scale) + "\" y2=\"" +
           num(from[1] + d[1] * scale) + "\"/>\n";
  }
  return out + "</g>\n";
}

std::string draw_trajectories(const ReplicatorSystem& system,
                              const std::vector<std::vector<FloatStrategy>>& starts,
                              const PlotSpec& spec, const Projection& proj) {
  if (starts.empty()) return "";
  std::string out = "<g id=\"trajectories\">\n";
  for (const auto& start : starts) {
    const auto traj = integrate(system, start, spec.dt, spec.t_max);
    out += "<polyline class=\"trajectory\" points=\"";
    for (std::size_t k = 0; k < traj.states.size(); ++k) {
      if (k % kTrajectoryStride != 0 && k + 1 != traj.states.size()) continue;
      const Point p = proj.position(traj.states[k]);
      if (k) out += " ";
      out += num(p[0]) + "," + num(p[1]);
    }
    out += "\"/>\n";
  }
  return out + "</g>\n";
}

std::string draw_markers(const std::vector<Marker>& markers,
                         const Projection& proj) {
  if (markers.empty()) return "";
  std::string out = "<g id=\"markers\">\n";
  for (const auto& m : markers) {
    const Point p = proj.position(m.point);
    out += "<circle class=\"" + marker_css_class(m.marker_class) + "\" cx=\"" +
           num(p[0]) + "\" cy=\"" + num(p[1]) + "\" r=\"7\"><title>" +
           escape(m.title) + "</title></circle>\n";
  }
  return out + "</g>\n";
}

FloatStrategy binary(std::size_t first, double p) {
  std::vector<double> probs(2, 0.0);
  probs[first] = p;
  probs[1 - first] = 1.0 - p;
  return FloatStrategy(std::move(probs));
}

}  // namespace

std::string_view marker_class_name(MarkerClass c) {
  switch (c) {
    case MarkerClass::kNashStable: return "nash_stable";
    case MarkerClass::kNashUnstable: return "nash_unstable";
    case MarkerClass::kRestNonNash: return "rest_non_nash";
  }
  return "unknown";
}

std::string plot_unit_square(const BimatrixGame& g, const PlotSpec& spec) {
  if (g.rows() != 2 || g.cols() != 2) {
    throw UnsupportedDimension("unit-square plots need a 2x2 game");
  }
  const auto [ax, ay] = spec.axis_actions;
  if (ax > 1 || ay > 1) throw ValidationError("axis action out of range");
  const double w = static_cast<double>(spec.width_px);
  const double h = static_cast<double>(spec.height_px);
  const double pw = w - 2 * kMargin;
  const double ph = h - 2 * kMargin;

  Projection proj;
  proj.position = [=](std::span<const double> s) -> Point {
    return {kMargin + s[ax] * pw, h - kMargin - s[2 + ay] * ph};
  };
  proj.displacement = [=](std::span<const double> v) -> Point {
    return {v[ax] * pw, -v[2 + ay] * ph};
  };

  const auto system = ReplicatorSystem::coupled(g);
  const std::size_t res = spec.grid_resolution ? spec.grid_resolution : 15;
  std::string out = open_svg(spec, g.name());
  out += "<rect class=\"frame\" x=\"" + num(kMargin) + "\" y=\"" + num(kMargin) +
         "\" width=\"" + num(pw) + "\" height=\"" + num(ph) + "\"/>\n";
  out += text(kMargin, h - kMargin + 20, "middle", "0");
  out += text(w - kMargin, h - kMargin + 20, "middle", "1");
  out += text(kMargin - 12, h - kMargin + 5, "end", "0");
  out += text(kMargin - 12, kMargin + 5, "end", "1");
  out += text(w / 2, h - kMargin + 40, "middle",
              "P(player 1 plays " + g.row_actions()[ax] + ")");
  out += text(kMargin / 2, kMargin - 20, "start",
              "P(player 2 plays " + g.col_actions()[ay] + ")");
  if (spec.draw_field) {
    out += draw_field(sample_field_grid(system, res), proj,
                      pw / static_cast<double>(res - 1));
  }
  auto starts = spec.trajectory_starts;
  if (spec.lattice_trajectories) {
    for (std::size_t i = 0; i < kLatticeSteps; ++i) {
      for (std::size_t j = 0; j < kLatticeSteps; ++j) {
        const double p = (static_cast<double>(i) + 0.5) / kLatticeSteps;
        const double q = (static_cast<double>(j) + 0.5) / kLatticeSteps;
        starts.push_back({binary(ax, p), binary(ay, q)});
      }
    }
  }
  out += draw_trajectories(system, starts, spec, proj);
  out += draw_markers(spec.markers, proj);
  return out + "</svg>\n";
}

std::array<double, 2> simplex_to_svg(std::span<const double> x,
                                     std::size_t width_px,
                                     std::size_t height_px) {
  const double w = static_cast<double>(width_px);
  const double h = static_cast<double>(height_px);
  const double side = std::min(w - 2 * kMargin, (h - 2 * kMargin) * 2 / std::sqrt(3.0));
  const double tri_h = side * std::sqrt(3.0) / 2;
  const double base_y = h / 2 + tri_h / 2;
  const double left_x = w / 2 - side / 2;
  return {left_x * x[0] + (left_x + side) * x[1] + (w / 2) * x[2],
          base_y * x[0] + base_y * x[1] + (base_y - tri_h) * x[2]};
}

std::string plot_simplex(const SingleGame& s, const PlotSpec& spec) {
  if (s.size() != 3) throw UnsupportedDimension("simplex plots need three actions");
  const std::size_t wpx = spec.width_px;
  const std::size_t hpx = spec.height_px;
  const Point origin = simplex_to_svg(std::array<double, 3>{0, 0, 0}, wpx, hpx);

  Projection proj;
  proj.position = [=](std::span<const double> x) { return simplex_to_svg(x, wpx, hpx); };
  // Linear part only: velocities sum to zero, so the translation cancels.
  proj.displacement = [=](std::span<const double> v) -> Point {
    const Point p = simplex_to_svg(v, wpx, hpx);
    return {p[0] - origin[0], p[1] - origin[1]};
  };

  const Point e1 = proj.position(std::array<double, 3>{1, 0, 0});
  const Point e2 = proj.position(std::array<double, 3>{0, 1, 0});
  const Point e3 = proj.position(std::array<double, 3>{0, 0, 1});
  const auto system = ReplicatorSystem::single(s);
  const std::size_t res = spec.grid_resolution ? spec.grid_resolution : 20;

  std::string out = open_svg(spec, s.name());
  out += "<polygon class=\"frame\" points=\"" + num(e1[0]) + "," + num(e1[1]) +
         " " + num(e2[0]) + "," + num(e2[1]) + " " + num(e3[0]) + "," +
         num(e3[1]) + "\"/>\n";
  out += text(e1[0] - 8, e1[1] + 20, "middle", s.actions()[0]);
  out += text(e2[0] + 8, e2[1] + 20, "middle", s.actions()[1]);
  out += text(e3[0], e3[1] - 12, "middle", s.actions()[2]);
  if (spec.draw_field) {
    out += draw_field(sample_field_grid(system, res), proj,
                      (e2[0] - e1[0]) / static_cast<double>(res));
  }
  auto starts = spec.trajectory_starts;
  if (spec.lattice_trajectories) {
    for (std::size_t i = 1; i < kLatticeSteps; ++i) {
      for (std::size_t j = 1; i + j < kLatticeSteps; ++j) {
        const double n = kLatticeSteps;
        const std::size_t k = kLatticeSteps - i - j;
        starts.push_back({FloatStrategy({static_cast<double>(i) / n,
                                         static_cast<double>(j) / n,
                                         static_cast<double>(k) / n})});
      }
    }
  }
  out += draw_trajectories(system, starts, spec, proj);
  out += draw_markers(spec.markers, proj);
  return out + "</svg>\n";
}

std::vector<Marker> equilibrium_markers(const BimatrixGame& g) {
  std::vector<Marker> out;
  for (const auto& eq : enumerate_nash_bimatrix<Rational>(g)) {
    const auto c = classify_rest_point(g, eq.x, eq.y);
    Marker m;
    for (const auto& p : eq.x.probs()) m.point.push_back(p.to_double());
    for (const auto& p : eq.y.probs()) m.point.push_back(p.to_double());
    m.marker_class = c.category == StabilityCategory::kEssStable
                         ? MarkerClass::kNashStable
                         : MarkerClass::kNashUnstable;
    m.title = "x=" + strategy_text(eq.x) + " y=" + strategy_text(eq.y) + " " +
              std::string(category_name(c.category));
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Marker> rest_point_markers(const SingleGame& s) {
  std::vector<Marker> out;
  const auto system = ReplicatorSystem::single(s);
  for (const auto& rp : enumerate_rest_points<Rational>(s)) {
    const auto point = to_float(rp.point);
    const auto c = classify_rest_point(system, point.probs(), rp.is_nash);
    Marker m;
    m.point.assign(point.probs().begin(), point.probs().end());
    switch (c.category) {
      case StabilityCategory::kEssStable:
        m.marker_class = MarkerClass::kNashStable;
        break;
      case StabilityCategory::kNashNotEss:
        m.marker_class = MarkerClass::kNashUnstable;
        break;
      case StabilityCategory::kNonNashRestPoint:
        m.marker_class = MarkerClass::kRestNonNash;
        break;
    }
    m.title = "x=" + strategy_text(rp.point) + " " +
              std::string(category_name(c.category));
    out.push_back(std::move(m));
  }
  return out;
}

std::string export_csv(const Trajectory& trajectory) {
  std::string out = "t";
  const bool first_is_y = trajectory.system == SystemKind::kCp1;
  for (std::size_t p = 0; p < trajectory.dimensions.size(); ++p) {
    const char prefix = (p == 0 && !first_is_y) ? 'x' : 'y';
    for (std::size_t i = 1; i <= trajectory.dimensions[p]; ++i) {
      out += ',';
      out += prefix;
      out += std::to_string(i);
    }
  }
  out += '\n';
  for (std::size_t k = 0; k < trajectory.times.size(); ++k) {
    out += csv_num(trajectory.times[k]);
    for (double v : trajectory.states[k]) out += "," + csv_num(v);
    out += '\n';
  }
  return out;
}

std::string export_csv(const FieldGrid& grid) {
  std::size_t n = 0;
  for (std::size_t d : grid.dimensions) n += d;
  std::string out;
  for (std::size_t i = 1; i <= n; ++i) out += (i > 1 ? ",p" : "p") + std::to_string(i);
  for (std::size_t i = 1; i <= n; ++i) out += (n ? ",v" : "v") + std::to_string(i);
  out += '\n';
  for (const auto& s : grid.samples) {
    std::string row;
    for (double v : s.point) row += (row.empty() ? "" : ",") + csv_num(v);
    for (double v : s.velocity) row += "," + csv_num(v);
    out += row + '\n';
  }
  return out;
}

}  // namespace cpg
