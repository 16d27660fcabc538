#pragma once

#include "prym/field.hpp"

namespace prym {

// First-order dual numbers a + b eps (eps^2 = 0) over Q. Evaluating a
// polynomial map at base + eps * direction gives its exact derivative in
// the eps part.
struct Dual {
  Rational a = 0;
  Rational b = 0;

  Dual() = default;
  Dual(Rational value, Rational eps = 0) : a(std::move(value)), b(std::move(eps)) {}

  friend Dual operator+(const Dual& x, const Dual& y) { return {x.a + y.a, x.b + y.b}; }
  friend Dual operator-(const Dual& x, const Dual& y) { return {x.a - y.a, x.b - y.b}; }
  friend Dual operator*(const Dual& x, const Dual& y) { return {x.a * y.a, x.a * y.b + x.b * y.a}; }
  Dual operator-() const { return {-a, -b}; }
  Dual& operator+=(const Dual& o) { return *this = *this + o; }
  Dual& operator-=(const Dual& o) { return *this = *this - o; }
  Dual& operator*=(const Dual& o) { return *this = *this * o; }
  friend bool operator==(const Dual&, const Dual&) = default;
};

struct DualField {
  using Scalar = Dual;

  Scalar zero() const { return {}; }
  Scalar one() const { return {1}; }
  Scalar from_int(long long n) const { return {RationalField{}.from_int(n)}; }
  Scalar inv(const Scalar& x) const {
    if (x.a == 0) throw DomainError("dual number with zero real part is not invertible");
    Rational ia = 1 / x.a;
    return {ia, -x.b * ia * ia};
  }
  static bool is_zero(const Scalar& x) { return x.a == 0 && x.b == 0; }
  std::uint32_t characteristic() const { return 0; }
  std::string to_string(const Scalar& x) const { return prym::to_string(x.a) + "+" + prym::to_string(x.b) + "e"; }
  friend bool operator==(const DualField&, const DualField&) { return true; }
};

}  // namespace prym
