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

#include "cpg/game.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "cpg/errors.hpp"

namespace cpg {

namespace {

constexpr double kClampThreshold = 1e-12;
constexpr double kSumTolerance = 1e-9;

void validate_labels(const std::vector<std::string>& labels,
                     const char* which) {
  if (labels.empty()) {
    throw ValidationError(std::string(which) + " must not be empty");
  }
  std::set<std::string> seen;
  for (const auto& label : labels) {
    if (label.empty()) {
      throw ValidationError(std::string(which) + " contains an empty label");
    }
    if (!seen.insert(label).second) {
      throw ValidationError(std::string(which) + " has duplicate label '" +
                            label + "'");
    }
  }
}

std::string unique_label(std::string label,
                         const std::vector<std::string>& taken) {
  while (std::find(taken.begin(), taken.end(), label) != taken.end()) {
    label += "'";
  }
  return label;
}

}  // namespace

template <class T>
MixedStrategy<T>::MixedStrategy(std::vector<T> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw ValidationError("empty strategy");
  if constexpr (Arithmetic<T>::kExact) {
    Rational sum;
    for (const auto& p : probs_) {
      if (p.sign() < 0) {
        throw ValidationError("negative probability " + p.to_string());
      }
      sum += p;
    }
    if (sum != Rational(1)) {
      throw ValidationError("probabilities sum to " + sum.to_string());
    }
  } else {
    double sum = 0.0;
    for (auto& p : probs_) {
      if (!std::isfinite(p) || p < -kClampThreshold) {
        throw ValidationError("invalid probability " + std::to_string(p));
      }
      if (p < 0.0) p = 0.0;
      sum += p;
    }
    if (std::abs(sum - 1.0) > kSumTolerance) {
      throw ValidationError("probabilities sum to " + std::to_string(sum));
    }
  }
}

template <class T>
MixedStrategy<T> MixedStrategy<T>::pure(std::size_t size, std::size_t action) {
  std::vector<T> probs(size, T{});
  probs.at(action) = T(1);
  return MixedStrategy(std::move(probs));
}

template <class T>
MixedStrategy<T> MixedStrategy<T>::uniform(std::size_t size) {
  if constexpr (Arithmetic<T>::kExact) {
    return MixedStrategy(std::vector<T>(
        size, Rational(1, static_cast<std::int64_t>(size))));
  } else {
    return MixedStrategy(std::vector<T>(size, 1.0 / static_cast<double>(size)));
  }
}

template <class T>
std::vector<std::size_t> MixedStrategy<T>::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (Arithmetic<T>::positive(probs_[i])) out.push_back(i);
  }
  return out;
}

template class MixedStrategy<Rational>;
template class MixedStrategy<double>;

FloatStrategy to_float(const ExactStrategy& s) {
  std::vector<double> probs;
  probs.reserve(s.size());
  for (const auto& p : s.probs()) probs.push_back(p.to_double());
  return FloatStrategy(std::move(probs));
}

BimatrixGame::BimatrixGame(std::string name,
                           std::vector<std::string> row_actions,
                           std::vector<std::string> col_actions,
                           Matrix<Rational> row_payoffs,
                           Matrix<Rational> col_payoffs)
    : name_(std::move(name)),
      row_actions_(std::move(row_actions)),
      col_actions_(std::move(col_actions)),
      a_(std::move(row_payoffs)),
      b_(std::move(col_payoffs)) {
  validate_labels(row_actions_, "row_actions");
  validate_labels(col_actions_, "col_actions");
  if (a_.rows() != row_actions_.size() || a_.cols() != col_actions_.size()) {
    throw ValidationError("row_payoffs is " + std::to_string(a_.rows()) + "x" +
                          std::to_string(a_.cols()) + " but the game has " +
                          std::to_string(row_actions_.size()) + "x" +
                          std::to_string(col_actions_.size()) + " actions");
  }
  if (b_.rows() != a_.rows() || b_.cols() != a_.cols()) {
    throw ValidationError("col_payoffs dimensions differ from row_payoffs");
  }
  a_float_ = to_double(a_);
  b_float_ = to_double(b_);
}

bool BimatrixGame::is_symmetric() const {
  return is_square() && a_ == b_.transpose();
}

SingleGame::SingleGame(std::string name, std::vector<std::string> actions,
                       Matrix<Rational> payoffs)
    : name_(std::move(name)), actions_(std::move(actions)), m_(std::move(payoffs)) {
  validate_labels(actions_, "actions");
  if (!m_.is_square() || m_.rows() != actions_.size()) {
    throw ValidationError("single-population payoff matrix must be " +
                          std::to_string(actions_.size()) + "x" +
                          std::to_string(actions_.size()));
  }
  m_float_ = to_double(m_);
}

Permutation::Permutation(std::vector<std::size_t> mapping)
    : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size(), false);
  for (std::size_t v : mapping_) {
    if (v >= mapping_.size() || seen[v]) {
      throw ValidationError("permutation mapping is not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> mapping(n);
  std::iota(mapping.begin(), mapping.end(), std::size_t{0});
  return Permutation(std::move(mapping));
}

std::vector<Permutation> Permutation::all(std::size_t n) {
  std::vector<std::size_t> mapping(n);
  std::iota(mapping.begin(), mapping.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(mapping);
  } while (std::next_permutation(mapping.begin(), mapping.end()));
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t j = 0; j < mapping_.size(); ++j) {
    if (mapping_[j] != j) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(mapping_.size());
  for (std::size_t j = 0; j < mapping_.size(); ++j) inv[mapping_[j]] = j;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw SizeMismatch("permutation sizes differ");
  std::vector<std::size_t> out(size());
  for (std::size_t j = 0; j < size(); ++j) out[j] = mapping_[other[j]];
  return Permutation(std::move(out));
}

PaddedGame pad_to_square(const BimatrixGame& g) {
  PaddingRecord record;
  record.original_rows = g.rows();
  record.original_cols = g.cols();

  Rational min_entry = g.row_payoffs()(0, 0);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      min_entry = std::min({min_entry, g.row_payoffs()(i, j),
                            g.col_payoffs()(i, j)});
    }
  }
  record.dummy_payoff = min_entry - Rational(1);

  if (g.is_square()) return PaddedGame{g, record};

  const std::size_t n = std::max(g.rows(), g.cols());
  record.player = g.rows() < g.cols() ? Player::kRow : Player::kCol;
  record.added_count = n - std::min(g.rows(), g.cols());

  auto row_actions = g.row_actions();
  auto col_actions = g.col_actions();
  auto& padded_labels = record.player == Player::kRow ? row_actions : col_actions;
  for (std::size_t k = 1; k <= record.added_count; ++k) {
    padded_labels.push_back(unique_label("D" + std::to_string(k), padded_labels));
  }

  Matrix<Rational> a(n, n, record.dummy_payoff);
  Matrix<Rational> b(n, n, record.dummy_payoff);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      a(i, j) = g.row_payoffs()(i, j);
      b(i, j) = g.col_payoffs()(i, j);
    }
  }
  return PaddedGame{BimatrixGame(g.name(), std::move(row_actions),
                                 std::move(col_actions), std::move(a),
                                 std::move(b)),
                    record};
}

template <class T>
MixedStrategy<T> strip_padding(const MixedStrategy<T>& s,
                               const PaddingRecord& padding, Player player) {
  if (padding.added_count == 0 || padding.player != player) return s;
  const std::size_t keep = s.size() - padding.added_count;
  for (std::size_t i = keep; i < s.size(); ++i) {
    if (Arithmetic<T>::positive(s[i])) {
      throw TheoremViolation("dummy action carries positive probability");
    }
  }
  std::vector<T> probs(s.probs().begin(), s.probs().begin() + keep);
  return MixedStrategy<T>(std::move(probs));
}

template ExactStrategy strip_padding(const ExactStrategy&, const PaddingRecord&,
                                     Player);
template FloatStrategy strip_padding(const FloatStrategy&, const PaddingRecord&,
                                     Player);

BimatrixGame permute_columns(const BimatrixGame& g, const Permutation& sigma) {
  if (sigma.size() != g.cols()) {
    throw SizeMismatch("permutation of size " + std::to_string(sigma.size()) +
                       " applied to " + std::to_string(g.cols()) + " columns");
  }
  Matrix<Rational> a(g.rows(), g.cols());
  Matrix<Rational> b(g.rows(), g.cols());
  std::vector<std::string> cols(g.cols());
  for (std::size_t j = 0; j < g.cols(); ++j) {
    cols[j] = g.col_actions()[sigma[j]];
    for (std::size_t i = 0; i < g.rows(); ++i) {
      a(i, j) = g.row_payoffs()(i, sigma[j]);
      b(i, j) = g.col_payoffs()(i, sigma[j]);
    }
  }
  return BimatrixGame(g.name(), g.row_actions(), std::move(cols), std::move(a),
                      std::move(b));
}

template <class T>
MixedStrategy<T> unpermute_strategy(const MixedStrategy<T>& y_permuted,
                                    const Permutation& sigma) {
  if (sigma.size() != y_permuted.size()) {
    throw SizeMismatch("permutation and strategy sizes differ");
  }
  std::vector<T> probs(y_permuted.size());
  for (std::size_t j = 0; j < sigma.size(); ++j) probs[sigma[j]] = y_permuted[j];
  return MixedStrategy<T>(std::move(probs));
}

template ExactStrategy unpermute_strategy(const ExactStrategy&, const Permutation&);
template FloatStrategy unpermute_strategy(const FloatStrategy&, const Permutation&);

CounterpartGames counterpart_games(const BimatrixGame& g) {
  if (!g.is_square()) {
    throw NotSquare("counterpart games need a square game; got " +
                    std::to_string(g.rows()) + "x" + std::to_string(g.cols()));
  }
  return CounterpartGames{
      SingleGame(g.name() + " counterpart 1", g.col_actions(), g.row_payoffs()),
      SingleGame(g.name() + " counterpart 2", g.row_actions(),
                 g.col_payoffs().transpose())};
}

namespace {

template <class T>
void check_profile(const BimatrixGame& g, const MixedStrategy<T>& x,
                   const MixedStrategy<T>& y) {
  if (x.size() != g.rows() || y.size() != g.cols()) {
    throw SizeMismatch("profile of sizes " + std::to_string(x.size()) + "/" +
                       std::to_string(y.size()) + " for a " +
                       std::to_string(g.rows()) + "x" +
                       std::to_string(g.cols()) + " game");
  }
}

template <class T>
bool within(const T& value, const T& bound, double tol) {
  if constexpr (Arithmetic<T>::kExact) {
    return value <= bound;
  } else {
    return value <= bound + tol;
  }
}

}  // namespace

template <class T>
std::pair<T, T> expected_payoffs(const BimatrixGame& g,
                                 const MixedStrategy<T>& x,
                                 const MixedStrategy<T>& y) {
  check_profile(g, x, y);
  const auto ay = multiply(g.row_payoffs_as<T>(), y.probs());
  const auto by = multiply(g.col_payoffs_as<T>(), y.probs());
  return {dot<T>(x.probs(), ay), dot<T>(x.probs(), by)};
}

template std::pair<Rational, Rational> expected_payoffs(const BimatrixGame&,
                                                        const ExactStrategy&,
                                                        const ExactStrategy&);
template std::pair<double, double> expected_payoffs(const BimatrixGame&,
                                                    const FloatStrategy&,
                                                    const FloatStrategy&);

template <class T>
bool is_nash_bimatrix(const BimatrixGame& g, const MixedStrategy<T>& x,
                      const MixedStrategy<T>& y, double tol) {
  check_profile(g, x, y);
  const auto ay = multiply(g.row_payoffs_as<T>(), y.probs());
  const T value_row = dot<T>(x.probs(), ay);
  for (const auto& v : ay) {
    if (!within(v, value_row, tol)) return false;
  }
  const auto xb = multiply_left(x.probs(), g.col_payoffs_as<T>());
  const T value_col = dot<T>(xb, y.probs());
  for (const auto& v : xb) {
    if (!within(v, value_col, tol)) return false;
  }
  return true;
}

template bool is_nash_bimatrix(const BimatrixGame&, const ExactStrategy&,
                               const ExactStrategy&, double);
template bool is_nash_bimatrix(const BimatrixGame&, const FloatStrategy&,
                               const FloatStrategy&, double);

template <class T>
bool is_nash_single(const SingleGame& s, const MixedStrategy<T>& x, double tol) {
  if (x.size() != s.size()) {
    throw SizeMismatch("strategy of size " + std::to_string(x.size()) +
                       " for a game with " + std::to_string(s.size()) +
                       " actions");
  }
  const auto mx = multiply(s.payoffs_as<T>(), x.probs());
  const T value = dot<T>(x.probs(), mx);
  for (const auto& v : mx) {
    if (!within(v, value, tol)) return false;
  }
  return true;
}

template bool is_nash_single(const SingleGame&, const ExactStrategy&, double);
template bool is_nash_single(const SingleGame&, const FloatStrategy&, double);

}  // namespace cpg
