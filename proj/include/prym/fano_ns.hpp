#pragma once

#include <cstdint>

#include "prym/field.hpp"

namespace prym::fano {

// m * L in NS(F(V)) = Z L, where L is the class of lines meeting a fixed
// line. The rank-one lattice and its constants (L^2 = 5, K = 3L, Gamma' = 6L)
// hold for a very general cubic threefold; nothing here checks that
// hypothesis.
struct NSClass {
  std::int64_t multiple = 0;

  friend NSClass operator+(NSClass a, NSClass b) { return {a.multiple + b.multiple}; }
  friend NSClass operator*(std::int64_t s, NSClass a) { return {s * a.multiple}; }
  friend bool operator==(NSClass, NSClass) = default;
};

inline constexpr std::int64_t kLSquared = 5;
inline constexpr NSClass kIncidence{1};
inline constexpr NSClass kCanonical{3};
inline constexpr NSClass kSecondTypeCurve{6};  // Gamma' ~ 2K

std::int64_t intersect(NSClass a, NSClass b);

// p with 2p - 2 = C.(C + K); throws DomainError for multiple <= 0.
Rational adjunction_genus(NSClass c);

// m with Gamma = m L, from the two fiber quantities produced by the
// divisor-class pipeline:
//   fiber_canonical: K of the fiber as a multiple of iota^*lambda
//   gamma_pullback:  phi^*Gamma as a multiple of iota^*lambda
// Hurwitz for the etale double cover gives fiber_canonical * iota^*lambda =
// 3 phi^*L. Throws DerivationError if fiber_canonical is 0 or m is not an
// integer.
NSClass derive_gamma_multiple(const Rational& fiber_canonical, const Rational& gamma_pullback);

// p_a(gamma) - g(normalization); by default 24L against 6L.
std::int64_t node_budget(NSClass gamma = {24}, NSClass normalization = kSecondTypeCurve);

struct DesingPartition {
  std::int64_t gamma_self;       // Gamma . Gamma
  std::int64_t crossing_points;  // intersections of the two components upstairs
  std::int64_t shared_nodes;     // nodes of Gamma whose preimage is two crossings
  std::int64_t residual_nodes;   // nodes of each component
  friend bool operator==(const DesingPartition&, const DesingPartition&) = default;
};

DesingPartition desing_partition(NSClass gamma = {24});

}  // namespace prym::fano
