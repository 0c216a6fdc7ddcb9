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

#ifndef CPG_MATRIX_HPP_
#define CPG_MATRIX_HPP_

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cpg/rational.hpp"

namespace cpg {

// Dense row-major matrix. Small by construction: games here are at most 6x6.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  // Rows must all have the same length.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const T> row(std::size_t i) const {
    return std::span<const T>(data_).subspan(i * cols_, cols_);
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

inline Matrix<double> to_double(const Matrix<Rational>& m) {
  Matrix<double> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_double();
  return out;
}

// (M v)_i
template <class T>
std::vector<T> multiply(const Matrix<T>& m, std::span<const T> v) {
  std::vector<T> out(m.rows(), T{});
  for (std::size_t i = 0; i < m.rows(); ++i) {
    T acc{};
    for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

// (v^T M)_j
template <class T>
std::vector<T> multiply_left(std::span<const T> v, const Matrix<T>& m) {
  std::vector<T> out(m.cols(), T{});
  for (std::size_t j = 0; j < m.cols(); ++j) {
    T acc{};
    for (std::size_t i = 0; i < m.rows(); ++i) acc += v[i] * m(i, j);
    out[j] = acc;
  }
  return out;
}

template <class T>
T dot(std::span<const T> a, std::span<const T> b) {
  T acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

// Comparison policy per arithmetic mode. Exact mode compares exactly; float
// mode uses the library-wide thresholds.
template <class T>
struct Arithmetic;

template <>
struct Arithmetic<Rational> {
  static constexpr bool kExact = true;
  static bool is_zero(const Rational& v) { return v.sign() == 0; }
  static bool is_pivot_zero(const Rational& v) { return v.sign() == 0; }
  static bool positive(const Rational& v) { return v.sign() > 0; }
  static bool nonnegative(const Rational& v) { return v.sign() >= 0; }
  static bool equal(const Rational& a, const Rational& b) { return a == b; }
  static bool less_equal(const Rational& a, const Rational& b) { return a <= b; }
  static Rational magnitude(const Rational& v) { return abs(v); }
};

template <>
struct Arithmetic<double> {
  static constexpr bool kExact = false;
  static constexpr double kSupportThreshold = 1e-9;
  static constexpr double kPivotThreshold = 1e-12;
  static constexpr double kEqualityTolerance = 1e-9;
  static bool is_zero(double v) { return std::abs(v) <= kSupportThreshold; }
  static bool is_pivot_zero(double v) { return std::abs(v) <= kPivotThreshold; }
  static bool positive(double v) { return v > kSupportThreshold; }
  static bool nonnegative(double v) { return v >= -kSupportThreshold; }
  static bool equal(double a, double b) {
    return std::abs(a - b) <= kEqualityTolerance;
  }
  static bool less_equal(double a, double b) {
    return a <= b + kEqualityTolerance;
  }
  static double magnitude(double v) { return std::abs(v); }
};

enum class SolveStatus { kUnique, kInconsistent, kUnderdetermined };

template <class T>
struct LinearSolution {
  SolveStatus status = SolveStatus::kInconsistent;
  // The solution when unique; a particular solution (free variables zero)
  // when underdetermined; empty when inconsistent.
  std::vector<T> values;
  std::size_t rank = 0;
};

// Gauss-Jordan elimination on an arbitrary m x n system. Exact for Rational;
// partial pivoting with a pivot threshold for double.
template <class T>
LinearSolution<T> solve_linear_system(Matrix<T> a, std::vector<T> b) {
  using Ops = Arithmetic<T>;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t best = m;
    if constexpr (Ops::kExact) {
      for (std::size_t r = row; r < m; ++r) {
        if (!Ops::is_pivot_zero(a(r, col))) {
          best = r;
          break;
        }
      }
    } else {
      T best_mag{};
      for (std::size_t r = row; r < m; ++r) {
        const T mag = Ops::magnitude(a(r, col));
        if (mag > best_mag) {
          best_mag = mag;
          best = r;
        }
      }
      if (best != m && Ops::is_pivot_zero(best_mag)) best = m;
    }
    if (best == m) continue;
    if (best != row) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(row, c), a(best, c));
      std::swap(b[row], b[best]);
    }
    const T pivot = a(row, col);
    for (std::size_t c = col; c < n; ++c) a(row, c) /= pivot;
    b[row] /= pivot;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row) continue;
      const T factor = a(r, col);
      if (Ops::is_pivot_zero(factor)) continue;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(row, c);
      b[r] -= factor * b[row];
    }
    pivot_cols.push_back(col);
    ++row;
  }

  LinearSolution<T> result;
  result.rank = pivot_cols.size();
  for (std::size_t r = result.rank; r < m; ++r) {
    if (!Ops::is_pivot_zero(b[r])) {
      result.status = SolveStatus::kInconsistent;
      return result;
    }
  }
  result.values.assign(n, T{});
  for (std::size_t r = 0; r < result.rank; ++r) result.values[pivot_cols[r]] = b[r];
  result.status = result.rank == n ? SolveStatus::kUnique
                                   : SolveStatus::kUnderdetermined;
  return result;
}

}  // namespace cpg

#endif  // CPG_MATRIX_HPP_
