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

#include "cpg/nash.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cpg/errors.hpp"

namespace cpg {

std::string_view degeneracy_reason_name(DegeneracyReason reason) {
  switch (reason) {
    case DegeneracyReason::kSingularSystem:
      return "singular-system";
    case DegeneracyReason::kExcessBestResponses:
      return "excess-best-responses";
    case DegeneracyReason::kContinuum:
      return "continuum";
  }
  return "unknown";
}

namespace {

constexpr double kFloatDedupTolerance = 1e-8;

void check_solver_size(std::size_t rows, std::size_t cols) {
  if (rows > kMaxSolverActions || cols > kMaxSolverActions) {
    throw TooLarge("support enumeration is limited to " +
                   std::to_string(kMaxSolverActions) + " actions per player; got " +
                   std::to_string(rows) + "x" + std::to_string(cols));
  }
}

std::vector<Support> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<Support> out;
  if (k == 0 || k > n) return out;
  Support current(k);
  for (std::size_t i = 0; i < k; ++i) current[i] = i;
  while (true) {
    out.push_back(current);
    std::size_t i = k;
    while (i > 0 && current[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

// Nonempty subsets ordered by size, then lexicographically.
std::vector<Support> all_subsets(std::size_t n) {
  std::vector<Support> out;
  for (std::size_t k = 1; k <= n; ++k) {
    auto layer = subsets_of_size(n, k);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

Support map_indices(const Support& positions, const Support& base) {
  Support out;
  out.reserve(positions.size());
  for (std::size_t p : positions) out.push_back(base[p]);
  return out;
}

bool contains_all(const Support& outer, const Support& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

template <class T>
struct Indifference {
  SolveStatus status = SolveStatus::kInconsistent;
  std::vector<T> s;  // full-length strategy, zero off `own`
  T value{};
};

// Finds s supported on `own`, summing to 1, that makes the opponent payoffs
// (s^T M)_j equal for every j in `opp`. M is own-actions x opponent-actions.
template <class T>
Indifference<T> solve_indifference(const Matrix<T>& m, const Support& own,
                                   const Support& opp) {
  const std::size_t k = own.size();
  Matrix<T> a(opp.size() + 1, k + 1);
  std::vector<T> b(opp.size() + 1, T{});
  for (std::size_t r = 0; r < opp.size(); ++r) {
    for (std::size_t c = 0; c < k; ++c) a(r, c) = m(own[c], opp[r]);
    a(r, k) = T(-1);
  }
  for (std::size_t c = 0; c < k; ++c) a(opp.size(), c) = T(1);
  b[opp.size()] = T(1);

  const auto solution = solve_linear_system(std::move(a), std::move(b));
  Indifference<T> out;
  out.status = solution.status;
  if (solution.status == SolveStatus::kInconsistent) return out;
  out.s.assign(m.rows(), T{});
  for (std::size_t c = 0; c < k; ++c) out.s[own[c]] = solution.values[c];
  out.value = solution.values[k];
  return out;
}

template <class T>
bool positive_on(const std::vector<T>& s, const Support& idx) {
  return std::all_of(idx.begin(), idx.end(),
                     [&](std::size_t i) { return Arithmetic<T>::positive(s[i]); });
}

template <class T>
bool nonnegative_on(const std::vector<T>& s, const Support& idx) {
  return std::all_of(idx.begin(), idx.end(), [&](std::size_t i) {
    return Arithmetic<T>::nonnegative(s[i]);
  });
}

template <class T>
Support positive_indices(const std::vector<T>& s) {
  Support out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (Arithmetic<T>::positive(s[i])) out.push_back(i);
  }
  return out;
}

template <class T>
bool same_point(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if constexpr (Arithmetic<T>::kExact) {
      if (a[i] != b[i]) return false;
    } else {
      if (std::abs(a[i] - b[i]) >= kFloatDedupTolerance) return false;
    }
  }
  return true;
}

template <class T>
std::vector<T> clamp_nonnegative(std::vector<T> s) {
  if constexpr (!Arithmetic<T>::kExact) {
    for (auto& v : s) v = std::max(v, 0.0);
  }
  return s;
}

// A vertex of one player's best-response polytope: a mixed strategy s with
// the opponent's best-response set.
template <class T>
struct Vertex {
  std::vector<T> s;
  T value{};
  Support support;
  Support best_responses;
};

template <class T>
std::vector<Vertex<T>> best_response_vertices(const Matrix<T>& m) {
  std::vector<Vertex<T>> out;
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= limit; ++k) {
    for (const auto& own : subsets_of_size(m.rows(), k)) {
      for (const auto& opp : subsets_of_size(m.cols(), k)) {
        auto sol = solve_indifference(m, own, opp);
        if (sol.status != SolveStatus::kUnique) continue;
        if (!nonnegative_on(sol.s, own)) continue;
        const auto payoffs = multiply_left(std::span<const T>(sol.s), m);
        Support best;
        bool feasible = true;
        for (std::size_t j = 0; j < payoffs.size(); ++j) {
          if (!Arithmetic<T>::less_equal(payoffs[j], sol.value)) {
            feasible = false;
            break;
          }
          if (Arithmetic<T>::equal(payoffs[j], sol.value)) best.push_back(j);
        }
        if (!feasible) continue;
        const bool seen = std::any_of(out.begin(), out.end(), [&](const auto& v) {
          return same_point<T>(v.s, sol.s);
        });
        if (seen) continue;
        Vertex<T> v;
        v.support = positive_indices(sol.s);
        v.best_responses = std::move(best);
        v.s = std::move(sol.s);
        v.value = sol.value;
        out.push_back(std::move(v));
      }
    }
  }
  return out;
}

// Vertices of the face {supp(s) within `own`, best responses include `opp`}.
template <class T>
std::vector<const Vertex<T>*> face(const std::vector<Vertex<T>>& vertices,
                                   const Support& own, const Support& opp) {
  std::vector<const Vertex<T>*> out;
  for (const auto& v : vertices) {
    if (contains_all(own, v.support) && contains_all(v.best_responses, opp)) {
      out.push_back(&v);
    }
  }
  return out;
}

// True when some point of the face has support exactly `own`.
template <class T>
bool face_reaches(const std::vector<const Vertex<T>*>& vertices,
                  const Support& own) {
  Support covered;
  for (const auto* v : vertices) {
    covered.insert(covered.end(), v->support.begin(), v->support.end());
  }
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  return covered == own;
}

void add_witness(DegeneracyReport& report, DegeneracyWitness w) {
  if (std::find(report.witnesses.begin(), report.witnesses.end(), w) ==
      report.witnesses.end()) {
    report.witnesses.push_back(std::move(w));
  }
}

struct ExactAnalysis {
  DegeneracyReport report;
  // Isolated equilibria with |supp x| != |supp y| (degenerate games only).
  std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> unequal;
};

ExactAnalysis analyse_exact(const BimatrixGame& g) {
  const auto& a = g.row_payoffs();
  const auto& b = g.col_payoffs();
  const auto a_t = a.transpose();
  const auto x_vertices = best_response_vertices(b);
  const auto y_vertices = best_response_vertices(a_t);

  ExactAnalysis out;
  auto& report = out.report;
  for (const auto& v : x_vertices) {
    if (v.best_responses.size() > v.support.size()) {
      add_witness(report, {v.support, v.best_responses,
                           DegeneracyReason::kExcessBestResponses});
    }
  }
  for (const auto& v : y_vertices) {
    if (v.best_responses.size() > v.support.size()) {
      add_witness(report, {v.best_responses, v.support,
                           DegeneracyReason::kExcessBestResponses});
    }
  }

  // A singular square system only matters when its feasible face is nonempty.
  const std::size_t limit = std::min(g.rows(), g.cols());
  for (std::size_t k = 1; k <= limit; ++k) {
    for (const auto& j1 : subsets_of_size(g.rows(), k)) {
      for (const auto& j2 : subsets_of_size(g.cols(), k)) {
        const bool x_singular =
            solve_indifference(b, j1, j2).status == SolveStatus::kUnderdetermined &&
            !face(x_vertices, j1, j2).empty();
        const bool y_singular =
            solve_indifference(a_t, j2, j1).status == SolveStatus::kUnderdetermined &&
            !face(y_vertices, j2, j1).empty();
        if (x_singular || y_singular) {
          add_witness(report, {j1, j2, DegeneracyReason::kSingularSystem});
        }
      }
    }
  }

  if (!report.degenerate()) return out;

  for (const auto& j1 : all_subsets(g.rows())) {
    for (const auto& j2 : all_subsets(g.cols())) {
      if (j1.size() == j2.size()) continue;
      const auto fx = face(x_vertices, j1, j2);
      if (!face_reaches(fx, j1)) continue;
      const auto fy = face(y_vertices, j2, j1);
      if (!face_reaches(fy, j2)) continue;
      if (fx.size() == 1 && fy.size() == 1) {
        out.unequal.emplace_back(fx.front()->s, fy.front()->s);
      } else {
        add_witness(report, {j1, j2, DegeneracyReason::kContinuum});
      }
    }
  }
  return out;
}

bool strict_pure_profile(const BimatrixGame& g, std::size_t i, std::size_t j) {
  const auto& a = g.row_payoffs();
  const auto& b = g.col_payoffs();
  for (std::size_t k = 0; k < g.rows(); ++k) {
    if (k != i && !(a(i, j) > a(k, j))) return false;
  }
  for (std::size_t l = 0; l < g.cols(); ++l) {
    if (l != j && !(b(i, j) > b(i, l))) return false;
  }
  return true;
}

template <class T>
bool lexicographic_less(std::span<const T> a, std::span<const T> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

template <class T>
MixedStrategy<T> convert(const std::vector<Rational>& s) {
  if constexpr (Arithmetic<T>::kExact) {
    return MixedStrategy<T>(s);
  } else {
    std::vector<double> out;
    out.reserve(s.size());
    for (const auto& v : s) out.push_back(v.to_double());
    return MixedStrategy<T>(std::move(out));
  }
}

template <class T>
double nash_tolerance() {
  return Arithmetic<T>::kExact ? 0.0 : Arithmetic<double>::kEqualityTolerance;
}

}  // namespace

template <class T>
BimatrixEquilibrium<T> describe_profile(const BimatrixGame& g,
                                        MixedStrategy<T> x,
                                        MixedStrategy<T> y) {
  auto payoffs = expected_payoffs(g, x, y);
  auto support_x = x.support();
  auto support_y = y.support();
  const bool strict = support_x.size() == 1 && support_y.size() == 1 &&
                      strict_pure_profile(g, support_x.front(), support_y.front());
  return BimatrixEquilibrium<T>{std::move(x),         std::move(y),
                                std::move(support_x), std::move(support_y),
                                strict,               std::move(payoffs)};
}

template BimatrixEquilibrium<Rational> describe_profile(const BimatrixGame&,
                                                        ExactStrategy,
                                                        ExactStrategy);
template BimatrixEquilibrium<double> describe_profile(const BimatrixGame&,
                                                      FloatStrategy,
                                                      FloatStrategy);

template <class T>
void canonicalize(std::vector<BimatrixEquilibrium<T>>& equilibria) {
  std::vector<BimatrixEquilibrium<T>> unique;
  for (auto& eq : equilibria) {
    const bool seen = std::any_of(unique.begin(), unique.end(), [&](const auto& o) {
      return same_point<T>(o.x.probs(), eq.x.probs()) &&
             same_point<T>(o.y.probs(), eq.y.probs());
    });
    if (!seen) unique.push_back(std::move(eq));
  }
  std::sort(unique.begin(), unique.end(), [](const auto& l, const auto& r) {
    if (l.support_x.size() != r.support_x.size())
      return l.support_x.size() < r.support_x.size();
    if (l.support_y.size() != r.support_y.size())
      return l.support_y.size() < r.support_y.size();
    if (l.support_x != r.support_x) return l.support_x < r.support_x;
    if (l.support_y != r.support_y) return l.support_y < r.support_y;
    if (!same_point<T>(l.x.probs(), r.x.probs()))
      return lexicographic_less<T>(l.x.probs(), r.x.probs());
    return lexicographic_less<T>(l.y.probs(), r.y.probs());
  });
  equilibria = std::move(unique);
}

template void canonicalize(std::vector<BimatrixEquilibrium<Rational>>&);
template void canonicalize(std::vector<BimatrixEquilibrium<double>>&);

DegeneracyReport detect_degeneracy(const BimatrixGame& g) {
  check_solver_size(g.rows(), g.cols());
  return analyse_exact(g).report;
}

template <class T>
BimatrixSolution<T> solve_bimatrix(const BimatrixGame& g) {
  check_solver_size(g.rows(), g.cols());
  const auto& a = g.row_payoffs_as<T>();
  const auto& b = g.col_payoffs_as<T>();
  const auto a_t = a.transpose();

  auto analysis = analyse_exact(g);
  BimatrixSolution<T> out;
  out.degeneracy = std::move(analysis.report);

  const std::size_t limit = std::min(g.rows(), g.cols());
  for (std::size_t k = 1; k <= limit; ++k) {
    for (const auto& j1 : subsets_of_size(g.rows(), k)) {
      for (const auto& j2 : subsets_of_size(g.cols(), k)) {
        auto ys = solve_indifference(a_t, j2, j1);
        if (ys.status != SolveStatus::kUnique || !positive_on(ys.s, j2)) continue;
        auto xs = solve_indifference(b, j1, j2);
        if (xs.status != SolveStatus::kUnique || !positive_on(xs.s, j1)) continue;
        MixedStrategy<T> x(clamp_nonnegative(std::move(xs.s)));
        MixedStrategy<T> y(clamp_nonnegative(std::move(ys.s)));
        if (!is_nash_bimatrix(g, x, y, nash_tolerance<T>())) continue;
        out.equilibria.push_back(describe_profile(g, std::move(x), std::move(y)));
      }
    }
  }
  for (const auto& [xs, ys] : analysis.unequal) {
    out.equilibria.push_back(describe_profile(g, convert<T>(xs), convert<T>(ys)));
  }

  canonicalize(out.equilibria);
  return out;
}

template BimatrixSolution<Rational> solve_bimatrix(const BimatrixGame&);
template BimatrixSolution<double> solve_bimatrix(const BimatrixGame&);

namespace {

// Vertices of {x >= 0, supp(x) within J, sum 1, (Mx)_i equal for i in J}.
template <class T>
std::vector<std::vector<T>> rest_face_vertices(const Matrix<T>& m,
                                               const Matrix<T>& m_t,
                                               const Support& j) {
  std::vector<std::vector<T>> out;
  for (std::size_t k = 1; k <= j.size(); ++k) {
    for (const auto& own_pos : subsets_of_size(j.size(), k)) {
      const auto own = map_indices(own_pos, j);
      for (const auto& opp_pos : subsets_of_size(j.size(), k)) {
        auto sol = solve_indifference(m_t, own, map_indices(opp_pos, j));
        if (sol.status != SolveStatus::kUnique) continue;
        if (!nonnegative_on(sol.s, own)) continue;
        const auto mx = multiply(m, std::span<const T>(sol.s));
        const bool level = std::all_of(j.begin(), j.end(), [&](std::size_t i) {
          return Arithmetic<T>::equal(mx[i], sol.value);
        });
        if (!level) continue;
        const bool seen = std::any_of(out.begin(), out.end(), [&](const auto& v) {
          return same_point<T>(v, sol.s);
        });
        if (!seen) out.push_back(std::move(sol.s));
      }
    }
  }
  return out;
}

template <class T>
RestPoint<T> make_rest_point(const Matrix<T>& m, std::vector<T> s,
                             bool continuum) {
  MixedStrategy<T> point(clamp_nonnegative(std::move(s)));
  const auto mx = multiply(m, point.probs());
  const T payoff = dot<T>(point.probs(), mx);
  const bool is_nash = std::all_of(mx.begin(), mx.end(), [&](const T& v) {
    return Arithmetic<T>::less_equal(v, payoff);
  });
  auto support = point.support();
  return RestPoint<T>{std::move(point), std::move(support), is_nash, payoff,
                      continuum};
}

}  // namespace

template <class T>
RestPointScan<T> scan_rest_points(const SingleGame& s) {
  check_solver_size(s.size(), s.size());
  const auto& m = s.payoffs_as<T>();
  const auto m_t = m.transpose();
  RestPointScan<T> out;
  for (const auto& j : all_subsets(s.size())) {
    auto sol = solve_indifference(m_t, j, j);
    if (sol.status == SolveStatus::kUnique) {
      if (positive_on(sol.s, j)) {
        out.points.push_back(make_rest_point(m, std::move(sol.s), false));
      }
      continue;
    }
    if (sol.status != SolveStatus::kUnderdetermined) continue;
    const auto vertices = rest_face_vertices(m, m_t, j);
    if (vertices.empty()) continue;
    std::vector<T> centre(s.size(), T{});
    for (const auto& v : vertices) {
      for (std::size_t i = 0; i < centre.size(); ++i) centre[i] += v[i];
    }
    const T count(static_cast<std::int64_t>(vertices.size()));
    for (auto& c : centre) c /= count;
    if (positive_indices(centre) != j) continue;
    out.points.push_back(make_rest_point(m, std::move(centre), true));
    add_witness(out.degeneracy, {j, j, DegeneracyReason::kContinuum});
  }
  return out;
}

template RestPointScan<Rational> scan_rest_points(const SingleGame&);
template RestPointScan<double> scan_rest_points(const SingleGame&);

template <class T>
std::vector<SingleEquilibrium<T>> enumerate_nash_single(const SingleGame& s) {
  std::vector<SingleEquilibrium<T>> out;
  const auto& m = s.payoffs();
  for (auto& rp : scan_rest_points<T>(s).points) {
    if (!rp.is_nash) continue;
    bool strict = false;
    if (rp.support.size() == 1) {
      const std::size_t i = rp.support.front();
      strict = true;
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (k != i && !(m(i, i) > m(k, i))) strict = false;
      }
    }
    out.push_back(SingleEquilibrium<T>{std::move(rp.point), std::move(rp.support),
                                       strict, rp.common_payoff, rp.continuum});
  }
  return out;
}

template std::vector<SingleEquilibrium<Rational>> enumerate_nash_single(
    const SingleGame&);
template std::vector<SingleEquilibrium<double>> enumerate_nash_single(
    const SingleGame&);

}  // namespace cpg
