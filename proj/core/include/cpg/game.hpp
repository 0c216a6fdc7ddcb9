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

#ifndef CPG_GAME_HPP_
#define CPG_GAME_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cpg/matrix.hpp"
#include "cpg/rational.hpp"

namespace cpg {

enum class ArithmeticMode { kExact, kFloat };

// A probability vector over a finite action set. Exact strategies hold
// Rationals; float strategies hold doubles and tolerate roundoff: entries down
// to -1e-12 are clamped to zero and the sum may deviate from one by 1e-9.
template <class T>
class MixedStrategy {
 public:
  // Throws ValidationError if `probs` is not a distribution.
  explicit MixedStrategy(std::vector<T> probs);

  static MixedStrategy pure(std::size_t size, std::size_t action);
  static MixedStrategy uniform(std::size_t size);

  static constexpr ArithmeticMode mode() {
    return Arithmetic<T>::kExact ? ArithmeticMode::kExact
                                 : ArithmeticMode::kFloat;
  }

  std::size_t size() const { return probs_.size(); }
  const T& operator[](std::size_t i) const { return probs_[i]; }
  std::span<const T> probs() const { return probs_; }

  // Indices with positive probability (float mode: above 1e-9).
  std::vector<std::size_t> support() const;
  bool is_pure() const { return support().size() == 1; }

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;

 private:
  std::vector<T> probs_;
};

using ExactStrategy = MixedStrategy<Rational>;
using FloatStrategy = MixedStrategy<double>;

FloatStrategy to_float(const ExactStrategy& s);

// Two-player normal-form game (A, B): A holds the row player's payoffs and B
// the column player's, both indexed [row action][column action].
class BimatrixGame {
 public:
  // Throws ValidationError on mismatched dimensions or bad labels.
  BimatrixGame(std::string name, std::vector<std::string> row_actions,
               std::vector<std::string> col_actions,
               Matrix<Rational> row_payoffs, Matrix<Rational> col_payoffs);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& row_actions() const { return row_actions_; }
  const std::vector<std::string>& col_actions() const { return col_actions_; }
  const Matrix<Rational>& row_payoffs() const { return a_; }
  const Matrix<Rational>& col_payoffs() const { return b_; }
  const Matrix<double>& row_payoffs_float() const { return a_float_; }
  const Matrix<double>& col_payoffs_float() const { return b_float_; }

  template <class T>
  const Matrix<T>& row_payoffs_as() const;
  template <class T>
  const Matrix<T>& col_payoffs_as() const;

  std::size_t rows() const { return a_.rows(); }
  std::size_t cols() const { return a_.cols(); }
  bool is_square() const { return rows() == cols(); }
  // A == B^T with identical action sets' sizes.
  bool is_symmetric() const;

  friend bool operator==(const BimatrixGame& a, const BimatrixGame& b) {
    return a.name_ == b.name_ && a.row_actions_ == b.row_actions_ &&
           a.col_actions_ == b.col_actions_ && a.a_ == b.a_ && a.b_ == b.b_;
  }

 private:
  std::string name_;
  std::vector<std::string> row_actions_;
  std::vector<std::string> col_actions_;
  Matrix<Rational> a_;
  Matrix<Rational> b_;
  Matrix<double> a_float_;
  Matrix<double> b_float_;
};

template <>
inline const Matrix<Rational>& BimatrixGame::row_payoffs_as<Rational>() const {
  return a_;
}
template <>
inline const Matrix<double>& BimatrixGame::row_payoffs_as<double>() const {
  return a_float_;
}
template <>
inline const Matrix<Rational>& BimatrixGame::col_payoffs_as<Rational>() const {
  return b_;
}
template <>
inline const Matrix<double>& BimatrixGame::col_payoffs_as<double>() const {
  return b_float_;
}

// Single-population game: a population playing x against itself earns x^T M x.
class SingleGame {
 public:
  // Throws ValidationError unless M is square with one row per action.
  SingleGame(std::string name, std::vector<std::string> actions,
             Matrix<Rational> payoffs);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& actions() const { return actions_; }
  const Matrix<Rational>& payoffs() const { return m_; }
  const Matrix<double>& payoffs_float() const { return m_float_; }
  template <class T>
  const Matrix<T>& payoffs_as() const;
  std::size_t size() const { return m_.rows(); }

  friend bool operator==(const SingleGame& a, const SingleGame& b) {
    return a.name_ == b.name_ && a.actions_ == b.actions_ && a.m_ == b.m_;
  }

 private:
  std::string name_;
  std::vector<std::string> actions_;
  Matrix<Rational> m_;
  Matrix<double> m_float_;
};

template <>
inline const Matrix<Rational>& SingleGame::payoffs_as<Rational>() const {
  return m_;
}
template <>
inline const Matrix<double>& SingleGame::payoffs_as<double>() const {
  return m_float_;
}

// A bijection on 0..n-1. Applied to a game's columns, column j of the result
// is column mapping[j] of the original.
class Permutation {
 public:
  // Throws ValidationError unless `mapping` is a bijection on 0..n-1.
  explicit Permutation(std::vector<std::size_t> mapping);

  static Permutation identity(std::size_t n);
  // All n! permutations in lexicographic order of their mappings.
  static std::vector<Permutation> all(std::size_t n);

  std::size_t size() const { return mapping_.size(); }
  std::size_t operator[](std::size_t j) const { return mapping_[j]; }
  const std::vector<std::size_t>& mapping() const { return mapping_; }
  bool is_identity() const;

  Permutation inverse() const;
  // (this o other)[j] = this[other[j]]
  Permutation compose(const Permutation& other) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> mapping_;
};

enum class Player { kRow, kCol };

struct PaddingRecord {
  Player player = Player::kRow;
  std::size_t added_count = 0;
  Rational dummy_payoff;
  std::size_t original_rows = 0;
  std::size_t original_cols = 0;
};

struct PaddedGame {
  BimatrixGame game;
  PaddingRecord padding;
};

struct CounterpartGames {
  SingleGame first;   // matrix A; its population state plays the role of y
  SingleGame second;  // matrix B^T; its population state plays the role of x
};

// Appends strictly dominated dummy actions "D1", "D2", ... to the player with
// fewer actions. Every payoff in a dummy-involving cell, for both players, is
// (minimum entry over A and B) - 1. Square games come back unchanged.
PaddedGame pad_to_square(const BimatrixGame& g);

// Drops the dummy entries a padding appended to the padded player's strategy.
// Throws TheoremViolation if a dummy carries positive probability.
template <class T>
MixedStrategy<T> strip_padding(const MixedStrategy<T>& s,
                               const PaddingRecord& padding, Player player);

// A' = A Sigma, B' = B Sigma; column labels follow. Throws SizeMismatch when
// `sigma` does not act on the game's columns.
BimatrixGame permute_columns(const BimatrixGame& g, const Permutation& sigma);

// Maps a strategy over permuted columns back to original column order:
// y[sigma[j]] = y_permuted[j].
template <class T>
MixedStrategy<T> unpermute_strategy(const MixedStrategy<T>& y_permuted,
                                    const Permutation& sigma);

// First counterpart: matrix A labelled with the column actions. Second
// counterpart: matrix B^T labelled with the row actions, so that its fitness
// (B^T x)_i equals the column player's payoff (x^T B)_i. Throws NotSquare.
CounterpartGames counterpart_games(const BimatrixGame& g);

// (x^T A y, x^T B y). Throws SizeMismatch.
template <class T>
std::pair<T, T> expected_payoffs(const BimatrixGame& g,
                                 const MixedStrategy<T>& x,
                                 const MixedStrategy<T>& y);

// Pure-deviation test of the two-population Nash condition. `tol` is ignored
// in exact mode.
template <class T>
bool is_nash_bimatrix(const BimatrixGame& g, const MixedStrategy<T>& x,
                      const MixedStrategy<T>& y, double tol = 1e-9);

// max_i (Mx)_i <= x^T M x (+ tol in float mode).
template <class T>
bool is_nash_single(const SingleGame& s, const MixedStrategy<T>& x,
                    double tol = 1e-9);

}  // namespace cpg

#endif  // CPG_GAME_HPP_
