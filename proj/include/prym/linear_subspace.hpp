#pragma once

#include <string>
#include <vector>

#include "prym/matrix.hpp"

namespace prym {

// Linear subspace of K^n stored as the canonical reduced row-echelon basis of
// its row space, so equality is geometric. A rank-2 subspace of K^5 is a
// line of P^4, rank 3 a plane, and so on.
template <Field K>
class LinearSubspace {
 public:
  using Scalar = typename K::Scalar;

  LinearSubspace() = default;

  // Row space of `spanning`; dependent rows are dropped.
  explicit LinearSubspace(const Matrix<K>& spanning) : field_(spanning.field()), ambient_(spanning.cols()) {
    Matrix<K> m = spanning;
    const auto piv = m.rref_in_place();
    basis_ = Matrix<K>(field_, piv.size(), ambient_);
    for (std::size_t i = 0; i < piv.size(); ++i)
      for (std::size_t j = 0; j < ambient_; ++j) basis_(i, j) = m(i, j);
  }

  static LinearSubspace span(K field, const std::vector<std::vector<Scalar>>& vectors, std::size_t ambient) {
    Matrix<K> m(field, 0, ambient);
    for (const auto& v : vectors) m.append_row(v);
    return LinearSubspace(m, ambient);
  }

  static LinearSubspace zero(K field, std::size_t ambient) { return LinearSubspace(Matrix<K>(field, 0, ambient), ambient); }
  static LinearSubspace whole(K field, std::size_t ambient) {
    return LinearSubspace(Matrix<K>::identity(field, ambient), ambient);
  }

  // Right kernel of m as a subspace of K^{m.cols()}.
  static LinearSubspace kernel_of(const Matrix<K>& m) {
    Matrix<K> k(m.field(), 0, m.cols());
    for (const auto& v : m.kernel_basis()) k.append_row(v);
    return LinearSubspace(k, m.cols());
  }

  const K& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix<K>& basis() const { return basis_; }

  bool contains(std::span<const Scalar> v) const {
    if (v.size() != ambient_) throw ShapeError("vector length does not match ambient dimension");
    Matrix<K> m = basis_;
    m.append_row(v);
    return m.rank() == dim();
  }

  bool contains(const LinearSubspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  LinearSubspace join(const LinearSubspace& other) const {
    if (other.ambient_ != ambient_) throw ShapeError("join of subspaces in different ambients");
    Matrix<K> m = basis_;
    for (std::size_t i = 0; i < other.dim(); ++i) m.append_row(other.basis_.row(i));
    return LinearSubspace(m, ambient_);
  }

  // Linear forms cutting out the subspace (rows of the result).
  Matrix<K> equations() const {
    Matrix<K> eq(field_, 0, ambient_);
    for (const auto& v : basis_.kernel_basis()) eq.append_row(v);
    return eq;
  }

  friend bool operator==(const LinearSubspace& a, const LinearSubspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  LinearSubspace(const Matrix<K>& spanning, std::size_t ambient) : field_(spanning.field()), ambient_(ambient) {
    Matrix<K> m = spanning;
    const auto piv = m.rref_in_place();
    basis_ = Matrix<K>(field_, piv.size(), ambient_);
    for (std::size_t i = 0; i < piv.size(); ++i)
      for (std::size_t j = 0; j < ambient_; ++j) basis_(i, j) = m(i, j);
  }

  K field_{};
  std::size_t ambient_ = 0;
  Matrix<K> basis_;
};

}  // namespace prym
