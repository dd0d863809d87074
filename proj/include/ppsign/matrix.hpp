/*
 * Copyright 2026 The ppsign Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PPSIGN_MATRIX_HPP
#define PPSIGN_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ppsign/error.hpp"
#include "ppsign/number.hpp"

namespace ppsign {

/// Dense row-major matrix with 0-based indices.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      require(row.size() == cols_, ErrorKind::Dimension,
              "ragged matrix initializer");
      for (const auto& v : row) data_.push_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Rows `row_idx` of this matrix, in the given order.
  Matrix select_rows(std::span<const std::size_t> row_idx) const {
    Matrix s(row_idx.size(), cols_);
    for (std::size_t r = 0; r < row_idx.size(); ++r)
      for (std::size_t j = 0; j < cols_; ++j) s(r, j) = (*this)(row_idx[r], j);
    return s;
  }

  Matrix select_cols(std::span<const std::size_t> col_idx) const {
    Matrix s(rows_, col_idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t c = 0; c < col_idx.size(); ++c)
        s(i, c) = (*this)(i, col_idx[c]);
    return s;
  }

  /// Principal submatrix on the index set `idx`.
  Matrix principal(std::span<const std::size_t> idx) const {
    Matrix s(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c)
        s(r, c) = (*this)(idx[r], idx[c]);
    return s;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, ErrorKind::Dimension,
            "matrix product dimension mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
      }
    return p;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using ExactMatrix = Matrix<Rational>;

inline ExactMatrix to_exact(const IntMatrix& m) {
  ExactMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

/// A square matrix whose skew-symmetry (zero diagonal, m(i,j) == -m(j,i)) was
/// checked on construction.
class SkewMatrix {
 public:
  explicit SkewMatrix(ExactMatrix m);
  explicit SkewMatrix(const IntMatrix& m) : SkewMatrix(to_exact(m)) {}

  const ExactMatrix& matrix() const noexcept { return m_; }
  std::size_t size() const noexcept { return m_.rows(); }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return m_(i, j);
  }

 private:
  ExactMatrix m_;
};

std::string format_matrix(const ExactMatrix& m);

}  // namespace ppsign

#endif  // PPSIGN_MATRIX_HPP
