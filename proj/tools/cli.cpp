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

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cpg/decomposition.hpp"
#include "cpg/dynamics.hpp"
#include "cpg/errors.hpp"
#include "cpg/game_io.hpp"
#include "cpg/nash.hpp"
#include "cpg/serialize.hpp"
#include "cpg/stability.hpp"
#include "cpg/viz.hpp"
#include "json.hpp"

namespace cpg::cli {

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitTheorem = 4;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse:
    case ErrorKind::kValidation:
    case ErrorKind::kSizeMismatch:
    case ErrorKind::kNotSquare:
    case ErrorKind::kTooLarge:
    case ErrorKind::kUnsupportedDimension:
      return kExitInput;
    case ErrorKind::kSingularSystem:
    case ErrorKind::kDomainEscape:
    case ErrorKind::kNotRestPoint:
    case ErrorKind::kNotNash:
      return kExitNumerical;
    case ErrorKind::kTheoremViolation:
      return kExitTheorem;
  }
  return kExitNumerical;
}

std::string text(const Rational& r) { return r.to_string(); }

std::string text(double d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", d);
  return buf;
}

template <class T>
std::string text(const MixedStrategy<T>& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += text(s[i]);
  }
  return out + ")";
}

std::string text(const std::vector<std::size_t>& idx) {
  std::string out = "{";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(idx[i]);
  }
  return out + "}";
}

template <class T>
void print_equilibria(std::ostream& out,
                      const std::vector<BimatrixEquilibrium<T>>& eqs) {
  for (const auto& eq : eqs) {
    out << "x=" << text(eq.x) << " y=" << text(eq.y) << " payoffs=("
        << text(eq.payoffs.first) << ", " << text(eq.payoffs.second) << ")"
        << (eq.strict ? " strict" : "") << "\n";
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ValidationError("cannot write '" + path + "'");
  file << content;
  if (!file) throw ValidationError("failed writing '" + path + "'");
}

unsigned thread_count() {
  const char* env = std::getenv("CPG_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long n = std::strtoul(env, &end, 10);
  if (*end != '\0' || n == 0) {
    throw ValidationError("CPG_THREADS must be a positive integer");
  }
  return static_cast<unsigned>(n);
}

// "0.9,0.1;0.2,0.8": populations separated by ';', components by ','.
// Components may be decimals or "p/q" fractions.
std::vector<FloatStrategy> parse_init(const std::string& spec) {
  std::vector<FloatStrategy> out;
  std::stringstream populations(spec);
  std::string population;
  while (std::getline(populations, population, ';')) {
    std::vector<double> probs;
    std::stringstream components(population);
    std::string component;
    double sum = 0.0;
    while (std::getline(components, component, ',')) {
      const double v = Rational::parse(component).to_double();
      if (v < 0.0) throw ValidationError("negative component in --init");
      probs.push_back(v);
      sum += v;
    }
    if (probs.empty()) throw ValidationError("empty population in --init");
    if (std::abs(sum - 1.0) > 1e-9) {
      throw ValidationError("--init population '" + population +
                            "' does not sum to 1");
    }
    out.emplace_back(std::move(probs));
  }
  if (out.empty()) throw ValidationError("--init is empty");
  return out;
}

SingleGame counterpart_of(const BimatrixGame& g, int which) {
  auto cps = counterpart_games(pad_to_square(g).game);
  return which == 1 ? cps.first : cps.second;
}

struct Options {
  std::string game_path;
  bool exact = false;
  bool float_mode = false;
  bool json = false;
  std::string out_path;
  bool no_verify = false;
  std::string report_path;
  int counterpart = 0;
  std::string system;
  std::string init;
  double dt = 0.01;
  double t_max = 50.0;
  std::string kind;
  std::size_t grid = 0;
  std::string trajectories;
  std::string axes;
  std::size_t trials = 200;
  std::optional<std::size_t> size;
  std::uint64_t seed = 42;
};

int cmd_solve(const Options& o, std::ostream& out) {
  const auto g = load_game_file(o.game_path);
  if (o.float_mode) {
    const auto eqs = enumerate_nash_bimatrix<double>(g);
    if (o.json) {
      out << to_json(eqs);
    } else {
      print_equilibria(out, eqs);
    }
    return 0;
  }
  const auto solution = solve_bimatrix<Rational>(g);
  if (o.json) {
    out << to_json(solution.equilibria);
  } else {
    print_equilibria(out, solution.equilibria);
    out << "degenerate: " << (solution.degeneracy.degenerate() ? "true" : "false")
        << "\n";
  }
  return 0;
}

int cmd_counterparts(const Options& o, std::ostream& out) {
  const auto g = load_game_file(o.game_path);
  const auto cps = counterpart_games(pad_to_square(g).game);
  const auto first = serialize_single_game(cps.first);
  const auto second = serialize_single_game(cps.second);
  if (o.out_path.empty()) {
    nlohmann::ordered_json doc;
    doc["counterpart1"] = nlohmann::ordered_json::parse(first);
    doc["counterpart2"] = nlohmann::ordered_json::parse(second);
    out << doc.dump(2) << "\n";
    return 0;
  }
  const std::filesystem::path dir(o.out_path);
  std::filesystem::create_directories(dir);
  const auto stem = std::filesystem::path(o.game_path).stem().string();
  const auto p1 = (dir / (stem + "_cp1.json")).string();
  const auto p2 = (dir / (stem + "_cp2.json")).string();
  write_file(p1, first);
  write_file(p2, second);
  out << p1 << "\n" << p2 << "\n";
  return 0;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const auto g = load_game_file(o.game_path);
  const auto report = decompose(g, {!o.no_verify, thread_count()});
  if (!o.report_path.empty()) write_file(o.report_path, to_json(report));
  if (o.json) {
    out << to_json(report);
    return 0;
  }
  out << "permutation  cp1_ne  cp2_ne  matched\n";
  for (const auto& r : report.per_permutation) {
    std::string perm = "[";
    for (std::size_t j = 0; j < r.permutation.size(); ++j) {
      if (j) perm += ",";
      perm += std::to_string(r.permutation[j]);
    }
    perm += "]";
    char line[96];
    std::snprintf(line, sizeof line, "%-11s  %6zu  %6zu  %7zu\n", perm.c_str(),
                  r.cp1_equilibria.size(), r.cp2_equilibria.size(),
                  r.matched_pairs.size());
    out << line;
  }
  out << "reconstructed equilibria: " << report.reconstructed.size() << "\n";
  print_equilibria(out, report.reconstructed);
  if (report.agreement) {
    out << "agreement: " << (*report.agreement ? "true" : "false") << "\n";
  }
  out << "degenerate: " << (report.degeneracy.degenerate() ? "true" : "false")
      << "\n";
  return 0;
}

int cmd_restpoints(const Options& o, std::ostream& out) {
  const auto g = load_game_file(o.game_path);
  const auto s = counterpart_of(g, o.counterpart);
  const auto points = enumerate_rest_points<Rational>(s);
  if (o.json) {
    out << to_json(points);
    return 0;
  }
  const auto system = ReplicatorSystem::single(s);
  for (const auto& rp : points) {
    const auto c =
        classify_rest_point(system, to_float(rp.point).probs(), rp.is_nash);
    out << "x=" << text(rp.point) << " support=" << text(rp.support)
        << " nash=" << (rp.is_nash ? "true" : "false")
        << " payoff=" << text(rp.common_payoff) << " " << category_name(c.category)
        << " " << local_type_name(c.local_type)
        << (rp.continuum ? " continuum" : "") << "\n";
  }
  return 0;
}

ReplicatorSystem system_for(const BimatrixGame& g, const std::string& name) {
  if (name == "coupled") return ReplicatorSystem::coupled(g);
  const auto padded = pad_to_square(g).game;
  return ReplicatorSystem::counterpart(
      padded, name == "cp1" ? SystemKind::kCp1 : SystemKind::kCp2);
}

int cmd_dynamics(const Options& o, std::ostream& out) {
  const auto init = parse_init(o.init);
  const auto g = load_game_file(o.game_path);
  const auto system = system_for(g, o.system);
  const auto csv = export_csv(integrate(system, init, o.dt, o.t_max));
  if (o.out_path.empty()) {
    out << csv;
  } else {
    write_file(o.out_path, csv);
  }
  return 0;
}

int cmd_plot(const Options& o, std::ostream&) {
  PlotSpec spec;
  spec.grid_resolution = o.grid;
  if (o.trajectories == "lattice") {
    spec.lattice_trajectories = true;
  } else if (!o.trajectories.empty()) {
    std::stringstream list(o.trajectories);
    std::string item;
    while (std::getline(list, item, '|')) {
      spec.trajectory_starts.push_back(parse_init(item));
    }
  }
  const auto g = load_game_file(o.game_path);
  std::string svg;
  if (o.kind == "square") {
    if (!o.axes.empty()) {
      const auto comma = o.axes.find(',');
      if (comma == std::string::npos) throw ValidationError("--axes expects I,J");
      spec.axis_actions = {std::stoul(o.axes.substr(0, comma)),
                           std::stoul(o.axes.substr(comma + 1))};
    }
    spec.kind = PlotKind::kSquare;
    if (g.rows() != 2 || g.cols() != 2) {
      throw UnsupportedDimension("square plots need a 2x2 game");
    }
    spec.markers = equilibrium_markers(g);
    svg = plot_unit_square(g, spec);
  } else {
    const auto s = counterpart_of(g, o.kind == "cp1" ? 1 : 2);
    spec.kind = PlotKind::kSimplex;
    if (s.size() != 3) throw UnsupportedDimension("simplex plots need three actions");
    spec.markers = rest_point_markers(s);
    svg = plot_simplex(s, spec);
  }
  write_file(o.out_path, svg);
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  RoundtripOptions options;
  options.trials = o.trials;
  options.size = o.size;
  options.seed = o.seed;
  options.decompose.threads = thread_count();
  const auto report = verify_theorem_roundtrip(options);
  if (o.json) {
    out << to_json(report);
  } else {
    out << "verify: " << (report.passed() ? "pass" : "fail")
        << " trials=" << report.trials
        << " discarded_degenerate=" << report.discarded_degenerate
        << " failures=" << report.failures << "\n";
  }
  return report.passed() ? 0 : kExitTheorem;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Analyse asymmetric two-player games through their symmetric "
               "counterpart games."};
  app.name("cpg");
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "Enumerate Nash equilibria");
  solve->add_option("game", o.game_path, "Game file")->required();
  auto* exact_flag = solve->add_flag("--exact", o.exact, "Exact rationals (default)");
  solve->add_flag("--float", o.float_mode, "Double precision")->excludes(exact_flag);
  solve->add_flag("--json", o.json, "JSON output");

  auto* counterparts =
      app.add_subcommand("counterparts", "Write the two counterpart games");
  counterparts->add_option("game", o.game_path, "Game file")->required();
  counterparts->add_option("--out", o.out_path, "Output directory");

  auto* decompose_cmd =
      app.add_subcommand("decompose", "Reconstruct equilibria from counterparts");
  decompose_cmd->add_option("game", o.game_path, "Game file")->required();
  decompose_cmd->add_flag("--no-verify", o.no_verify, "Skip the direct solver");
  decompose_cmd->add_option("--report", o.report_path, "Write a JSON report");
  decompose_cmd->add_flag("--json", o.json, "Print the JSON report");

  auto* restpoints =
      app.add_subcommand("restpoints", "Rest points of a counterpart game");
  restpoints->add_option("game", o.game_path, "Game file")->required();
  restpoints->add_option("--counterpart", o.counterpart, "1 or 2")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  restpoints->add_flag("--json", o.json, "JSON output");

  auto* dynamics = app.add_subcommand("dynamics", "Integrate replicator dynamics");
  dynamics->add_option("game", o.game_path, "Game file")->required();
  dynamics->add_option("--system", o.system, "coupled, cp1 or cp2")
      ->required()
      ->check(CLI::IsMember({"coupled", "cp1", "cp2"}));
  dynamics->add_option("--init", o.init, "Initial state, e.g. 0.9,0.1;0.2,0.8")
      ->required();
  dynamics->add_option("--dt", o.dt, "Step size");
  dynamics->add_option("--t-max", o.t_max, "Time horizon");
  dynamics->add_option("--out", o.out_path, "CSV output path (default stdout)");

  auto* plot = app.add_subcommand("plot", "Write an SVG phase portrait");
  plot->add_option("game", o.game_path, "Game file")->required();
  plot->add_option("--kind", o.kind, "square, cp1 or cp2")
      ->required()
      ->check(CLI::IsMember({"square", "cp1", "cp2"}));
  plot->add_option("--out", o.out_path, "SVG output path")->required();
  plot->add_option("--grid", o.grid, "Field grid resolution")
      ->check(CLI::Range(std::size_t{2}, std::size_t{200}));
  plot->add_option("--trajectories", o.trajectories,
                   "'lattice' or starts separated by '|'");
  plot->add_option("--axes", o.axes, "Square plots: row,col action on the axes");

  auto* verify = app.add_subcommand("verify", "Randomized theorem round trip");
  verify->add_option("--trials", o.trials, "Non-degenerate games to check");
  verify->add_option("--size", o.size, "Game size (default: 2..4 at random)")
      ->check(CLI::Range(std::size_t{1}, kMaxDecompositionActions));
  verify->add_option("--seed", o.seed, "Random seed");
  verify->add_flag("--json", o.json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage_error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(o, out);
    if (counterparts->parsed()) return cmd_counterparts(o, out);
    if (decompose_cmd->parsed()) return cmd_decompose(o, out);
    if (restpoints->parsed()) return cmd_restpoints(o, out);
    if (dynamics->parsed()) return cmd_dynamics(o, out);
    if (plot->parsed()) return cmd_plot(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const Error& e) {
    err << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "internal_error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace cpg::cli
