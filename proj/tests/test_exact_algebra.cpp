#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "generators.hpp"
#include "prym/errors.hpp"
#include "prym/factor_pattern.hpp"
#include "prym/galois_field.hpp"
#include "prym/linear_subspace.hpp"
#include "prym/polynomial_io.hpp"

using namespace prym;

namespace {

// Schoolbook product of residues modulo the field's defining polynomial.
std::uint32_t slow_mul(const GaloisField& gf, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t p = gf.characteristic(), k = gf.degree();
  const auto da = gf.digits(a), db = gf.digits(b);
  std::vector<std::uint64_t> prod(2 * k, 0);
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p;
  const auto& m = gf.modulus();
  for (std::uint32_t d = 2 * k - 1; d >= k; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    for (std::uint32_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * m[i]) % p;
  }
  std::vector<std::uint32_t> out(k);
  for (std::uint32_t i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return gf.from_digits(out);
}

bool has_root_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p) {
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t v = 0;
    for (std::size_t i = poly.size(); i-- > 0;) v = (v * x + poly[i]) % p;
    if (v == 0) return true;
  }
  return false;
}

HomogeneousForm<RationalField> qform(std::initializer_list<std::pair<Exponent, long long>> terms, int vars, int deg) {
  const RationalField q;
  HomogeneousForm<RationalField> f(q, vars, deg);
  for (const auto& [e, c] : terms) f.add_term(e, q.from_int(c));
  return f;
}

}  // namespace

TEST_CASE("rationals print in lowest terms with positive denominator") {
  CHECK(to_string(Rational(6, -4)) == "-3/2");
  CHECK(to_string(Rational(8, 4)) == "2");
  CHECK(to_string(Rational(0, 7)) == "0");
  CHECK(to_string(parse_rational("10/-4")) == "-5/2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("extension fields use the first irreducible modulus") {
  for (const auto& [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 2}, {7, 2}, {5, 3}, {11, 3}}) {
    const auto& gf = GaloisField::get(p, k);
    // Degree <= 3: irreducible iff no root. The first monic one by code
    // order is the modulus.
    std::vector<std::uint32_t> first;
    for (std::uint64_t code = 0;; ++code) {
      std::vector<std::uint32_t> poly(k + 1, 0);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < k; ++i) {
        poly[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      poly[k] = 1;
      if (!has_root_mod_p(poly, p)) {
        first = poly;
        break;
      }
    }
    CHECK(gf.modulus() == first);
    CHECK(gf.order() == (k == 2 ? p * p : p * p * p));
  }
  CHECK_THROWS_AS(GaloisField::get(6, 1), DomainError);
  CHECK(&GaloisField::get(5, 2) == &GaloisField::get(5, 2));
}

TEST_CASE("field multiplication matches schoolbook reduction") {
  gen::Rng rng(11);
  for (const auto& [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 2}, {7, 3}, {5, 4}, {13, 2}}) {
    const auto& gf = GaloisField::get(p, k);
    for (int i = 0; i < 2000; ++i) {
      const auto a = static_cast<std::uint32_t>(rng.next() % gf.order());
      const auto b = static_cast<std::uint32_t>(rng.next() % gf.order());
      REQUIRE(gf.mul(a, b) == slow_mul(gf, a, b));
      if (a != 0) REQUIRE(gf.mul(a, gf.inv(a)) == 1);
      REQUIRE(gf.add(gf.sub(a, b), b) == a);
    }
  }
}

TEST_CASE("square roots agree with brute force") {
  for (const auto& [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 1}, {7, 2}, {11, 1}, {5, 3}}) {
    const auto& gf = GaloisField::get(p, k);
    std::set<std::uint32_t> squares;
    for (std::uint32_t x = 0; x < gf.order(); ++x) squares.insert(gf.mul(x, x));
    for (std::uint32_t a = 0; a < gf.order(); ++a) {
      CHECK(gf.is_square(a) == (squares.count(a) == 1));
      const auto r = gf.sqrt(a);
      CHECK(r.has_value() == (squares.count(a) == 1));
      if (r) CHECK(gf.mul(*r, *r) == a);
    }
  }
  const RationalField q;
  CHECK(square_root(q, Rational(9, 4)).value() * square_root(q, Rational(9, 4)).value() == Rational(9, 4));
  CHECK_FALSE(square_root(q, Rational(2)).has_value());
  CHECK_FALSE(square_root(q, Rational(-1)).has_value());
}

TEST_CASE("substitute_linear examples") {
  const RationalField q;
  SUBCASE("identity") {
    gen::Rng rng(3);
    const auto f = rng.form(q, 4, 3);
    CHECK(substitute_linear(f, Matrix<RationalField>::identity(q, 4)) == f);
  }
  SUBCASE("single monomial on a coordinate line") {
    const auto f = qform({{{3, 0, 0, 0, 0}, 1}}, 5, 3);
    Matrix<RationalField> m(q, 5, 2);
    m(0, 0) = 1;
    CHECK(substitute_linear(f, m) == qform({{{3, 0}, 1}}, 2, 3));
  }
  SUBCASE("Fermat quartic on x + y + z = 0") {
    const auto f = qform({{{4, 0, 0}, 1}, {{0, 4, 0}, 1}, {{0, 0, 4}, 1}}, 3, 4);
    const auto m = Matrix<RationalField>::from_ints(q, {{1, 0}, {0, 1}, {-1, -1}});
    // (s+t)^4 = s^4 + 4s^3t + 6s^2t^2 + 4st^3 + t^4, plus s^4 and t^4.
    const auto want = qform({{{4, 0}, 2}, {{3, 1}, 4}, {{2, 2}, 6}, {{1, 3}, 4}, {{0, 4}, 2}}, 2, 4);
    CHECK(substitute_linear(f, m) == want);
  }
  SUBCASE("shape errors") {
    const auto f = qform({{{1, 0, 0}, 1}}, 3, 1);
    CHECK_THROWS_AS(substitute_linear(f, Matrix<RationalField>(q, 2, 2)), ShapeError);
  }
}

TEST_CASE_TEMPLATE("substitution is multiplicative", K, RationalField, FiniteField) {
  K k;
  if constexpr (std::is_same_v<K, FiniteField>) k = FiniteField(7, 2);
  gen::Rng rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(rng.range(2, 4));
    const auto f = rng.form(k, n, static_cast<int>(rng.range(1, 3)));
    const auto g = rng.form(k, n, static_cast<int>(rng.range(1, 2)));
    const auto m = rng.matrix(k, static_cast<std::size_t>(n), static_cast<std::size_t>(rng.range(1, 4)));
    CHECK(substitute_linear(f * g, m) == substitute_linear(f, m) * substitute_linear(g, m));
  }
}

TEST_CASE("reduction mod p commutes with products and substitution") {
  const RationalField q;
  const FiniteField f7(7, 1);
  gen::Rng rng(5);
  auto red = [&](const HomogeneousForm<RationalField>& f) {
    return f.map_coefficients(f7, [&](const Rational& c) { return f7.from_rational(c); });
  };
  int done = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto f = rng.form(q, 3, 2), g = rng.form(q, 3, 2);
    const auto m = rng.matrix(q, 3, 2);
    try {
      const auto rf = red(f), rg = red(g);
      Matrix<FiniteField> rm(f7, 3, 2);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j) rm(i, j) = f7.from_rational(m(i, j));
      CHECK(red(f * g) == rf * rg);
      CHECK(red(substitute_linear(f, m)) == substitute_linear(rf, rm));
      ++done;
    } catch (const DomainError&) {
      // a denominator divisible by 7
    }
  }
  CHECK(done > 30);
}

TEST_CASE("factor_pattern examples") {
  const RationalField q;
  CHECK(factor_pattern(qform({{{2, 2}, 1}}, 2, 4)).to_string() == "{2,2}");
  // s t (s + t)(s - t) = s^3 t - s t^3
  CHECK(factor_pattern(qform({{{3, 1}, 1}, {{1, 3}, -1}}, 2, 4)).to_string() == "{1,1,1,1}");
  // (s^2 + t^2)^2 has two conjugate double roots.
  CHECK(factor_pattern(qform({{{4, 0}, 1}, {{2, 2}, 2}, {{0, 4}, 1}}, 2, 4)).to_string() == "{2,2}");
  CHECK(factor_pattern(qform({{{0, 3}, 5}}, 2, 3)).to_string() == "{3}");
  CHECK_THROWS_AS(factor_pattern(HomogeneousForm<RationalField>(q, 2, 3)), DegenerateInputError);
  CHECK_THROWS_AS(factor_pattern(qform({{{1, 1, 0}, 1}}, 3, 2)), ShapeError);
  const FiniteField f3(3, 1);
  HomogeneousForm<FiniteField> cube(f3, 2, 3);
  cube.add_term({3, 0}, f3.one());
  CHECK_THROWS_AS(factor_pattern(cube), DomainError);
}

TEST_CASE("factor_pattern recovers planted multiplicities") {
  const FiniteField k(31, 1);
  gen::Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    // Distinct roots (a : 1) or (1 : 0) with chosen multiplicities.
    std::vector<int> mult;
    int deg = 0;
    while (deg < 2 || (deg < 6 && rng.coin())) {
      const int m = static_cast<int>(rng.range(1, 3));
      mult.push_back(m);
      deg += m;
    }
    std::set<long long> used;
    HomogeneousForm<FiniteField> f = HomogeneousForm<FiniteField>::constant(k, 2, k.from_int(rng.range(1, 30)));
    for (int m : mult) {
      long long a;
      do a = rng.range(-1, 30);
      while (!used.insert(a).second);
      HomogeneousForm<FiniteField> lin(k, 2, 1);
      if (a < 0) {
        lin.add_term({0, 1}, k.one());
      } else {
        lin.add_term({1, 0}, k.one());
        lin.add_term({0, 1}, -k.from_int(a));
      }
      f = f * lin.pow(m);
    }
    auto pat = factor_pattern(f);
    std::sort(mult.begin(), mult.end(), std::greater<int>());
    CHECK(pat.parts == mult);
    CHECK(pat.degree() == f.degree());
  }
}

TEST_CASE("kernel dimension against brute-force enumeration over F_5") {
  const FiniteField k(5, 1);
  gen::Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const auto r = static_cast<std::size_t>(rng.range(1, 6));
    const auto c = static_cast<std::size_t>(rng.range(1, 5));
    const auto m = rng.matrix(k, r, c, 40);
    std::size_t count = 0;
    std::vector<Fq> v(c, k.zero());
    const std::size_t total = static_cast<std::size_t>(std::pow(5, c));
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t x = code;
      for (auto& e : v) {
        e = k.element(static_cast<std::uint32_t>(x % 5));
        x /= 5;
      }
      const auto w = m.apply(v);
      count += std::all_of(w.begin(), w.end(), [](const Fq& z) { return z.v == 0; });
    }
    const auto kb = m.kernel_basis();
    CHECK(static_cast<std::size_t>(std::pow(5, kb.size())) == count);
    CHECK(kb.size() == c - m.rank());
    for (const auto& b : kb) {
      const auto w = m.apply(b);
      CHECK(std::all_of(w.begin(), w.end(), [](const Fq& z) { return z.v == 0; }));
    }
  }
}

TEST_CASE("kernel examples") {
  const RationalField q;
  CHECK(LinearSubspace<RationalField>::kernel_of(Matrix<RationalField>(q, 3, 3)).dim() == 3);
  CHECK(LinearSubspace<RationalField>::kernel_of(Matrix<RationalField>::identity(q, 4)).dim() == 0);
}

TEST_CASE("subspaces compare by row space") {
  const RationalField q;
  const LinearSubspace<RationalField> a(Matrix<RationalField>::from_ints(q, {{1, 2, 3}, {0, 1, 1}}));
  const LinearSubspace<RationalField> b(Matrix<RationalField>::from_ints(q, {{1, 3, 4}, {2, 5, 7}, {3, 8, 11}}));
  CHECK(a == b);
  CHECK(a.dim() == 2);
  const LinearSubspace<RationalField> c(Matrix<RationalField>::from_ints(q, {{1, 0, 0}, {0, 1, 0}}));
  CHECK_FALSE(a == c);
  const std::vector<Rational> v = {Rational(2), Rational(5), Rational(7)};
  CHECK(a.contains(v));
}

TEST_CASE("JSON interchange round trip and validation") {
  const auto j = nlohmann::json::parse(R"({"vars": ["x", "y", "z"], "degree": 2, "field": "rational",
    "terms": [{"exp": [2, 0, 0], "num": "3", "den": "4"}, {"exp": [0, 1, 1], "num": "-1", "den": "1"}]})");
  const auto nf = form_from_json(j);
  REQUIRE(nf.is_rational());
  CHECK(nf.rational().coefficient({2, 0, 0}) == Rational(3, 4));
  CHECK(form_from_json(form_to_json(nf.rational(), nf.vars)).rational() == nf.rational());

  const auto jf = nlohmann::json::parse(R"({"vars": ["s", "t"], "degree": 1, "field": {"char": 5, "ext": 2},
    "terms": [{"exp": [1, 0], "num": "7", "den": "1"}, {"exp": [0, 1], "num": "0", "den": "1", "poly": [1, 2]}]})");
  const auto ff = form_from_json(jf);
  REQUIRE_FALSE(ff.is_rational());
  CHECK(ff.finite().coefficient({1, 0}).v == 2);
  CHECK(ff.finite().coefficient({0, 1}).v == 1 + 2 * 5);
  CHECK(form_from_json(form_to_json(ff.finite(), ff.vars)).finite() == ff.finite());

  auto bad = j;
  bad["terms"][0]["exp"] = {2, 0};
  CHECK_THROWS_AS(form_from_json(bad), ParseError);
  bad = j;
  bad["terms"][0]["exp"] = {1, 0, 0};
  CHECK_THROWS_AS(form_from_json(bad), ParseError);
  bad = j;
  bad["terms"][0]["den"] = "0";
  CHECK_THROWS_AS(form_from_json(bad), ParseError);
}
