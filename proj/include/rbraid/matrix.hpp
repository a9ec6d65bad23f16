// Copyright 2026 The rbraid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rbraid/field.hpp"

namespace rbraid {

inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const FieldElement& x) { return x.is_zero(); }
inline bool is_one(const Rational& x) { return x == 1; }
inline bool is_one(const FieldElement& x) { return x.is_one(); }
inline Rational inverse_of(const Rational& x) { return Rational(1) / x; }
inline FieldElement inverse_of(const FieldElement& x) { return x.inverse(); }

/// Dense row-major matrix over an exact field (Rational or FieldElement).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix diagonal(const std::vector<T>& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  /// Column matrix holding v.
  static Matrix column(const std::vector<T>& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const T> row(std::size_t r) const {
    return std::span<const T>(data_).subspan(r * cols_, cols_);
  }
  std::vector<T> col(std::size_t c) const {
    std::vector<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!rbraid::is_zero(x)) return false;
    return true;
  }
  bool is_identity() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) {
        const T& x = (*this)(r, c);
        if (r == c ? !rbraid::is_one(x) : !rbraid::is_zero(x)) return false;
      }
    return true;
  }
  bool is_diagonal() const {
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (r != c && !rbraid::is_zero((*this)(r, c))) return false;
    return true;
  }
  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& x : data_)
      if (!rbraid::is_zero(x)) ++n;
    return n;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!rbraid::is_zero(o.data_[k])) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!rbraid::is_zero(o.data_[k])) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_)
      if (!rbraid::is_zero(x)) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw DomainError("matrix product shape mismatch: " + a.shape() + " * " + b.shape());
    Matrix out(a.rows_, b.cols_);
    // Row-sparse accumulation: skip zero factors, which dominate weight-graded operators.
    std::vector<std::vector<std::size_t>> b_support(b.rows_);
    for (std::size_t k = 0; k < b.rows_; ++k)
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!rbraid::is_zero(b(k, j))) b_support[k].push_back(j);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (rbraid::is_zero(aik)) continue;
        const bool unit = rbraid::is_one(aik);
        for (std::size_t j : b_support[k]) {
          if (unit) out(i, j) += b(k, j);
          else out(i, j) += aik * b(k, j);
        }
      }
    return out;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw DomainError("matrix-vector shape mismatch");
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k)
        if (!rbraid::is_zero((*this)(i, k)) && !rbraid::is_zero(v[k]))
          out[i] += (*this)(i, k) * v[k];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// First (row, col) where a and b differ, if any.
  friend std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Matrix& a,
                                                                             const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return std::pair<std::size_t, std::size_t>{0, 0};
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t c = 0; c < a.cols_; ++c)
        if (!(a(r, c) == b(r, c))) return std::pair{r, c};
    return std::nullopt;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DomainError("matrix shape mismatch: " + shape() + " vs " + o.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using FieldMatrix = Matrix<FieldElement>;
using RationalMatrix = Matrix<Rational>;
using FieldVector = std::vector<FieldElement>;

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T& x = a(i, j);
      if (is_zero(x)) continue;
      const bool unit = is_one(x);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const T& y = b(k, l);
          if (is_zero(y)) continue;
          out(i * b.rows() + k, j * b.cols() + l) = unit ? y : x * y;
        }
    }
  return out;
}

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

/// In-place reduced row echelon form; returns pivot columns. Pivots are the
/// first nonzero entry scanning rows top-down, so the result is deterministic.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < m.rows() && is_zero(m(r, c))) ++r;
    if (r == m.rows()) continue;
    if (r != pivot_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(pivot_row, k));
    T inv = inverse_of(m(pivot_row, c));
    for (std::size_t k = c; k < m.cols(); ++k)
      if (!is_zero(m(pivot_row, k))) m(pivot_row, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || is_zero(m(i, c))) continue;
      T factor = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k)
        if (!is_zero(m(pivot_row, k))) m(i, k) -= factor * m(pivot_row, k);
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  return rref(m).size();
}

/// Basis of the right kernel {x : m x = 0}, one vector per free column with
/// that coordinate set to 1.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols());
    v[free] = T(1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (!is_zero(m(i, free))) v[pivots[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Inverse via Gauss-Jordan; nullopt if singular.
template <class T>
std::optional<Matrix<T>> try_inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw DomainError("inverse of non-square matrix " + m.shape());
  std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  auto inv = try_inverse(m);
  if (!inv) throw DomainError("matrix " + m.shape() + " is singular");
  return *inv;
}

}  // namespace rbraid
