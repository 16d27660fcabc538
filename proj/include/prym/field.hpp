#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "prym/errors.hpp"
#include "prym/galois_field.hpp"

namespace prym {

using Rational = mpq_class;
using Integer = mpz_class;

// Canonical "num/den" (or "num" when den = 1).
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

// Element of a GaloisField. A default-constructed value is the zero of
// whichever field it is later combined with.
struct Fq {
  std::uint32_t v = 0;
  const GaloisField* f = nullptr;

  Fq() = default;
  Fq(std::uint32_t value, const GaloisField* field) : v(value), f(field) {}

  friend bool operator==(const Fq& a, const Fq& b) { return a.v == b.v; }

  friend Fq operator+(const Fq& a, const Fq& b) {
    const GaloisField* k = a.f ? a.f : b.f;
    if (!k) return {};
    return {k->add(a.v, b.v), k};
  }
  friend Fq operator-(const Fq& a, const Fq& b) {
    const GaloisField* k = a.f ? a.f : b.f;
    if (!k) return {};
    return {k->sub(a.v, b.v), k};
  }
  friend Fq operator*(const Fq& a, const Fq& b) {
    const GaloisField* k = a.f ? a.f : b.f;
    if (!k) return {};
    return {k->mul(a.v, b.v), k};
  }
  Fq operator-() const { return f ? Fq{f->neg(v), f} : Fq{}; }
  Fq& operator+=(const Fq& o) { return *this = *this + o; }
  Fq& operator-=(const Fq& o) { return *this = *this - o; }
  Fq& operator*=(const Fq& o) { return *this = *this * o; }
};

inline std::ostream& operator<<(std::ostream& os, const Fq& a) {
  return os << (a.f ? a.f->element_to_string(a.v) : std::string("0"));
}

// Field objects: cheap to copy, expose the scalar type and the operations
// generic code needs beyond the scalar operators.
struct RationalField {
  using Scalar = Rational;

  Scalar zero() const { return 0; }
  Scalar one() const { return 1; }
  Scalar from_int(long long n) const { return Rational(Integer(std::to_string(n))); }
  Scalar from_rational(const Rational& r) const { return r; }
  Scalar inv(const Scalar& a) const {
    if (a == 0) throw DomainError("inverse of zero rational");
    return 1 / a;
  }
  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }
  std::uint32_t characteristic() const { return 0; }
  std::string to_string(const Scalar& a) const { return prym::to_string(a); }
  std::string describe() const { return "Q"; }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

struct FiniteField {
  using Scalar = Fq;

  const GaloisField* gf = nullptr;

  FiniteField() = default;
  explicit FiniteField(const GaloisField& g) : gf(&g) {}
  FiniteField(std::uint32_t p, std::uint32_t k) : gf(&GaloisField::get(p, k)) {}

  Scalar zero() const { return {0, gf}; }
  Scalar one() const { return {1, gf}; }
  Scalar from_int(long long n) const { return {gf->from_int(n), gf}; }
  // Throws DomainError when the denominator vanishes mod p.
  Scalar from_rational(const Rational& r) const;
  Scalar element(std::uint32_t code) const {
    if (code >= gf->order()) throw DomainError("element code out of range for " + gf->describe());
    return {code, gf};
  }
  Scalar inv(const Scalar& a) const { return {gf->inv(a.v), gf}; }
  static bool is_zero(const Scalar& a) { return a.v == 0; }
  std::uint32_t characteristic() const { return gf->characteristic(); }
  std::uint32_t order() const { return gf->order(); }
  std::string to_string(const Scalar& a) const { return gf->element_to_string(a.v); }
  std::string describe() const { return gf->describe(); }
  friend bool operator==(const FiniteField& a, const FiniteField& b) { return a.gf == b.gf; }
};

template <class K>
concept Field = requires(const K& k, const typename K::Scalar& a, long long n) {
  { k.zero() } -> std::convertible_to<typename K::Scalar>;
  { k.one() } -> std::convertible_to<typename K::Scalar>;
  { k.from_int(n) } -> std::convertible_to<typename K::Scalar>;
  { k.inv(a) } -> std::convertible_to<typename K::Scalar>;
  { K::is_zero(a) } -> std::convertible_to<bool>;
  { k.characteristic() } -> std::convertible_to<std::uint32_t>;
  { a + a } -> std::convertible_to<typename K::Scalar>;
  { a * a } -> std::convertible_to<typename K::Scalar>;
  { a - a } -> std::convertible_to<typename K::Scalar>;
};

// Square roots inside the field, when they exist.
std::optional<Rational> square_root(const RationalField&, const Rational& a);
std::optional<Fq> square_root(const FiniteField& k, const Fq& a);

}  // namespace prym
