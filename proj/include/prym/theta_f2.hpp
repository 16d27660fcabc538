#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "prym/picard.hpp"

namespace prym::theta {

// Bit vector of length 2g: bit i is x_i, bit g+i is x_{g+i}. Genus is capped
// at 32 by the 64-bit word.
struct TwoTorsionVector {
  std::uint64_t bits = 0;

  friend TwoTorsionVector operator+(TwoTorsionVector a, TwoTorsionVector b) { return {a.bits ^ b.bits}; }
  friend bool operator==(TwoTorsionVector, TwoTorsionVector) = default;
  friend auto operator<=>(TwoTorsionVector a, TwoTorsionVector b) { return a.bits <=> b.bits; }
  bool is_zero() const { return bits == 0; }
};

// F_2^{2g} with the standard alternating form
// <u, v> = sum_i (u_i v_{g+i} + u_{g+i} v_i).
class SymplecticSpaceF2 {
 public:
  explicit SymplecticSpaceF2(int genus);

  int genus() const { return genus_; }
  int dim() const { return 2 * genus_; }
  std::uint64_t size() const { return std::uint64_t{1} << dim(); }
  int pairing(TwoTorsionVector u, TwoTorsionVector v) const;
  // Standard symplectic basis: e_i (i < g) and f_i = e_{g+i}.
  TwoTorsionVector e(int i) const { return {std::uint64_t{1} << i}; }
  TwoTorsionVector f(int i) const { return {std::uint64_t{1} << (genus_ + i)}; }
  TwoTorsionVector vector(std::uint64_t bits) const;

  friend bool operator==(const SymplecticSpaceF2&, const SymplecticSpaceF2&) = default;

 private:
  int genus_;
  std::uint64_t low_mask_;
};

// Subgroup of F_2^{2g}, stored as a canonical reduced row-echelon basis.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(int dim, const std::vector<TwoTorsionVector>& generators);

  int ambient_dim() const { return dim_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<TwoTorsionVector>& basis() const { return basis_; }
  bool contains(TwoTorsionVector v) const;
  std::vector<TwoTorsionVector> elements() const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;

 private:
  int dim_ = 0;
  std::vector<TwoTorsionVector> basis_;  // pivots are the leading (highest) bits, descending
};

// q_t(x) = q0(x) + <t, x>, q0(x) = sum_i x_i x_{g+i}. Every quadratic form
// polarizing to the standard pairing is of this shape for a unique t.
struct QuadraticFormF2 {
  int genus = 0;
  TwoTorsionVector translation;

  int operator()(TwoTorsionVector x) const;
  // The form q_{t+mu}.
  QuadraticFormF2 translated(TwoTorsionVector mu) const { return {genus, translation + mu}; }
  friend bool operator==(const QuadraticFormF2&, const QuadraticFormF2&) = default;
};

int base_form(int genus, TwoTorsionVector x);

// Arf invariant, which for q_t equals q0(t).
Parity parity(const QuadraticFormF2& q);

struct ParityCounts {
  std::uint64_t even = 0;
  std::uint64_t odd = 0;
};
ParityCounts count_parities(int genus);

// parity(q) + parity(q_{+mu1}) + parity(q_{+mu2}) + parity(q_{+mu3}) == <mu1, mu2>
// (mod 2). W = {0, mu1, mu2, mu3}; throws DomainError unless W[0] = 0 and
// mu3 = mu1 + mu2.
bool riemann_mumford_check(const QuadraticFormF2& q, const std::array<TwoTorsionVector, 4>& w);

Subgroup orthogonal_complement(const SymplecticSpaceF2& s, const Subgroup& h);

// eta^perp / <eta> with an explicit symplectic basis (a_i, b_i) of lifts in
// eta^perp, i < g - 1. The projection is read off by pairing with the
// dual lifts, so it is well defined on eta^perp and kills exactly <eta>.
class SymplecticQuotient {
 public:
  SymplecticQuotient(const SymplecticSpaceF2& s, TwoTorsionVector eta);

  const SymplecticSpaceF2& ambient() const { return ambient_; }
  const SymplecticSpaceF2& quotient() const { return quotient_; }
  TwoTorsionVector eta() const { return eta_; }
  const Subgroup& eta_perp() const { return perp_; }
  // Throws DomainError for x outside eta^perp.
  TwoTorsionVector project(TwoTorsionVector x) const;
  // A lift of a quotient vector to eta^perp.
  TwoTorsionVector lift(TwoTorsionVector y) const;

 private:
  SymplecticSpaceF2 ambient_;
  SymplecticSpaceF2 quotient_;
  TwoTorsionVector eta_;
  Subgroup perp_;
  std::vector<TwoTorsionVector> a_, b_;
};

// eta must be nonzero.
SymplecticQuotient quotient_symplectic(const SymplecticSpaceF2& s, TwoTorsionVector eta);

struct DescendedForm {
  SymplecticQuotient quotient;
  QuadraticFormF2 form;  // on quotient.quotient()
};

// The form qbar(xbar) = q(x) on mu^perp / <mu>; throws
// DescentObstructionError when q(mu) = 1.
DescendedForm descend_form(const QuadraticFormF2& q, TwoTorsionVector mu);

}  // namespace prym::theta
