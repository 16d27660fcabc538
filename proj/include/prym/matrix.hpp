#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "prym/errors.hpp"
#include "prym/field.hpp"

namespace prym {

// Dense row-major matrix over a field, with the exact elimination routines
// the geometry code needs.
template <Field K>
class Matrix {
 public:
  using Scalar = typename K::Scalar;

  Matrix() = default;
  Matrix(K field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static Matrix identity(K field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(K field, const std::vector<std::vector<Scalar>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw ShapeError("ragged rows in matrix literal");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_ints(K field, std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<Scalar>> r;
    for (const auto& row : rows) {
      std::vector<Scalar> v;
      for (long long x : row) v.push_back(field.from_int(x));
      r.push_back(std::move(v));
    }
    return from_rows(field, r);
  }

  const K& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<Scalar> row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }

  void append_row(std::span<const Scalar> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw ShapeError("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
    Matrix c(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (K::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  std::vector<Scalar> apply(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw ShapeError("matrix-vector shape mismatch");
    std::vector<Scalar> out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!K::is_zero(x)) return false;
    return true;
  }

  // Reduced row-echelon form in place; returns the pivot columns.
  std::vector<std::size_t> rref_in_place() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t piv = r;
      while (piv < rows_ && K::is_zero((*this)(piv, c))) ++piv;
      if (piv == rows_) continue;
      if (piv != r)
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(piv, j), (*this)(r, j));
      const Scalar inv = field_.inv((*this)(r, c));
      for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = (*this)(r, j) * inv;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        const Scalar f = (*this)(i, c);
        if (K::is_zero(f)) continue;
        for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) = (*this)(i, j) - f * (*this)(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  Matrix rref() const {
    Matrix m = *this;
    m.rref_in_place();
    return m;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref_in_place().size();
  }

  // Basis of the right kernel {v : M v = 0}, one vector per free column,
  // normalized to 1 on its free column.
  std::vector<std::vector<Scalar>> kernel_basis() const {
    Matrix m = *this;
    const auto pivots = m.rref_in_place();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<Scalar> v(cols_, field_.zero());
      v[free] = field_.one();
      for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  Scalar determinant() const {
    if (rows_ != cols_) throw ShapeError("determinant of non-square matrix");
    Matrix m = *this;
    Scalar det = field_.one();
    for (std::size_t c = 0; c < cols_; ++c) {
      std::size_t piv = c;
      while (piv < rows_ && K::is_zero(m(piv, c))) ++piv;
      if (piv == rows_) return field_.zero();
      if (piv != c) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m(piv, j), m(c, j));
        det = -det;
      }
      det = det * m(c, c);
      const Scalar inv = field_.inv(m(c, c));
      for (std::size_t i = c + 1; i < rows_; ++i) {
        const Scalar f = m(i, c) * inv;
        if (K::is_zero(f)) continue;
        for (std::size_t j = c; j < cols_; ++j) m(i, j) = m(i, j) - f * m(c, j);
      }
    }
    return det;
  }

  // Inverse; throws DomainError when singular.
  Matrix inverse() const {
    if (rows_ != cols_) throw ShapeError("inverse of non-square matrix");
    const std::size_t n = rows_;
    Matrix aug(field_, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
      aug(i, n + i) = field_.one();
    }
    const auto piv = aug.rref_in_place();
    if (piv.size() < n || piv[n - 1] != n - 1) throw DomainError("matrix is singular");
    Matrix inv(field_, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
  }

 private:
  K field_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

}  // namespace prym
