#include "prym/field.hpp"

namespace prym {

std::string to_string(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) throw ParseError("not a rational number: '" + s + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

Fq FiniteField::from_rational(const Rational& r) const {
  const Integer p = characteristic();
  Integer num = r.get_num() % p;
  Integer den = r.get_den() % p;
  if (num < 0) num += p;
  if (den == 0) throw DomainError("denominator of " + prym::to_string(r) + " vanishes in " + describe());
  Fq n{static_cast<std::uint32_t>(num.get_ui()), gf};
  Fq d{static_cast<std::uint32_t>(den.get_ui()), gf};
  return n * inv(d);
}

std::optional<Rational> square_root(const RationalField&, const Rational& a) {
  if (a < 0) return std::nullopt;
  Rational c = a;
  c.canonicalize();
  if (!mpz_perfect_square_p(c.get_num_mpz_t()) || !mpz_perfect_square_p(c.get_den_mpz_t())) return std::nullopt;
  Integer n = sqrt(c.get_num()), d = sqrt(c.get_den());
  return Rational(n, d);
}

std::optional<Fq> square_root(const FiniteField& k, const Fq& a) {
  auto r = k.gf->sqrt(a.v);
  if (!r) return std::nullopt;
  return Fq{*r, k.gf};
}

}  // namespace prym
