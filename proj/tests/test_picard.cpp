#include <doctest.h>

#include "generators.hpp"
#include "prym/errors.hpp"
#include "prym/picard.hpp"

using namespace prym;
using namespace prym::picard;

namespace {

DivisorClass random_known(gen::Rng& rng, const PicardBasis& b) {
  DivisorClass c = DivisorClass::zero(b);
  for (const auto& g : b.generators()) c.set(g, rng.rational());
  return c;
}

DivisorClass random_partial(gen::Rng& rng, const PicardBasis& b) {
  DivisorClass c = DivisorClass::zero(b);
  for (const auto& g : b.generators()) c.set(g, rng.coin() ? Coefficient::unknown() : Coefficient::known(rng.rational()));
  return c;
}

}  // namespace

TEST_CASE("basis generator lists") {
  CHECK(PicardBasis::rbar(5).generators() ==
        std::vector<std::string>{"lambda", "delta0'", "delta0''", "delta0ram", "delta1", "delta4", "delta1:4", "delta2",
                                 "delta3", "delta2:3"});
  CHECK(PicardBasis::mbar(7).generators() == std::vector<std::string>{"lambda", "delta0", "delta1", "delta2", "delta3"});
  CHECK(PicardBasis::abar5().generators() == std::vector<std::string>{"L", "D"});
  for (int g = 2; g <= 14; ++g) {
    auto gens = PicardBasis::rbar(g).generators();
    std::sort(gens.begin(), gens.end());
    CHECK(std::adjacent_find(gens.begin(), gens.end()) == gens.end());
  }
  CHECK_THROWS_AS(PicardBasis::rbar(5).index_of("delta7"), DomainError);
}

TEST_CASE("theta-null class coefficients") {
  // g = 6 by hand: 2^8, 2^5, 2^6 and 2(2^5 - 1).
  const auto t6 = class_T(6, Parity::Odd);
  CHECK(t6.known("lambda") == 256);
  CHECK(t6.known("delta0'") == -32);
  CHECK(t6.known("delta0''") == -64);
  CHECK(t6.known("delta0ram") == -62);
  CHECK_FALSE(t6["delta1"].is_known());

  const auto e5 = class_T(5, Parity::Even);
  CHECK(e5.known("lambda") == 68);
  CHECK(e5.known("delta0ram") == -17);
  CHECK_FALSE(e5["delta0''"].is_known());
  const auto o5 = class_T(5, Parity::Odd);
  CHECK(o5.known("lambda") == 64);
  CHECK(o5.known("delta0''") == -16);
  CHECK(o5.known("delta0ram") == -15);

  CHECK_THROWS_AS(class_T(2, Parity::Even), DomainError);
  CHECK_THROWS_AS(e5.known("delta0''"), InsufficientDataError);
}

TEST_CASE("fiber restriction") {
  CHECK(fiber_restrict(class_T(5, Parity::Even)) == FiberRestriction{68, -17});
  CHECK(fiber_restrict(class_T(5, Parity::Odd)) == FiberRestriction{64, -15});
  CHECK(apply_fiber_relation(fiber_restrict(class_T(5, Parity::Even))) == 0);
  CHECK(apply_fiber_relation(fiber_restrict(class_T(5, Parity::Odd))) == 4);
  CHECK(apply_fiber_relation(fiber_restrict(canonical_class_rbar5())) == 1);
  CHECK_THROWS_AS(fiber_restrict(class_T(6, Parity::Odd)), DomainError);
  CHECK_THROWS_AS(fiber_restrict(DivisorClass::unknown(PicardBasis::rbar(5))), InsufficientDataError);
}

TEST_CASE("genus-6 pushforward and pullback") {
  const auto b6 = PicardBasis::rbar(6);
  CHECK(prym6_pushforward(class_T(6, Parity::Odd)).to_string() == "10584*L - 1320*D");
  CHECK(prym6_pushforward(DivisorClass::generator(b6, "lambda")).to_string() == "486*L - 57*D");
  CHECK(prym6_pushforward(DivisorClass::generator(b6, "delta0''")).to_string() == "0");
  CHECK(prym6_pullback(prym6_pushforward(class_T(6, Parity::Odd))).to_string() ==
        "10584*lambda - 1320*delta0' - 2646*delta0ram");
  const std::vector<std::string> sub = {"lambda", "delta0'", "delta0ram"};
  const auto t = class_T(6, Parity::Odd);
  CHECK_FALSE(proportional_on(sub, prym6_pullback(prym6_pushforward(t)), t));
}

TEST_CASE("named classes") {
  const auto u = prym_ramification_rbar6();
  CHECK(u.known("lambda") == 7);
  CHECK(u.known("delta0'") == -1);
  CHECK(u.known("delta0ram") == Rational(-3, 2));
  const std::vector<std::string> sub = {"lambda", "delta0'", "delta0ram"};
  CHECK_FALSE(proportional_on(sub, u, class_T(6, Parity::Even)));
  CHECK_FALSE(proportional_on(sub, u, class_T(6, Parity::Odd)));
  const std::vector<std::string> m = {"lambda", "delta0"};
  CHECK_FALSE(proportional_on(m, theta_null_m7(), tetragonal_locus_m7()));
  CHECK(theta_null_m7().known("lambda") == 16 * 129);
  CHECK(tetragonal_locus_m7().known("delta0") == Rational(-4, 3));
}

TEST_CASE("proportionality") {
  const auto b = PicardBasis::mbar(4);
  DivisorClass a = DivisorClass::zero(b), c = DivisorClass::zero(b);
  a.set("lambda", 2).set("delta0", -3);
  c.set("lambda", Rational(-4, 3)).set("delta0", 2);
  const std::vector<std::string> sub = {"lambda", "delta0"};
  CHECK(proportional_on(sub, a, c));
  c.set("delta0", 3);
  CHECK_FALSE(proportional_on(sub, a, c));
  CHECK_THROWS_AS(proportional_on(sub, a, DivisorClass::zero(b)), DomainError);
}

TEST_CASE("linear maps are linear on random classes") {
  gen::Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = rng.rational();
    const auto a5 = random_known(rng, PicardBasis::rbar(5)), b5 = random_known(rng, PicardBasis::rbar(5));
    const auto fa = fiber_restrict(a5), fb = fiber_restrict(b5), fs = fiber_restrict(a5 + s * b5);
    CHECK(fs.lambda_coeff == fa.lambda_coeff + s * fb.lambda_coeff);
    CHECK(fs.ram_coeff == fa.ram_coeff + s * fb.ram_coeff);

    const auto a6 = random_known(rng, PicardBasis::rbar(6)), b6 = random_known(rng, PicardBasis::rbar(6));
    CHECK(prym6_pushforward(a6 + s * b6) == prym6_pushforward(a6) + s * prym6_pushforward(b6));
    const auto x = random_known(rng, PicardBasis::abar5()), y = random_known(rng, PicardBasis::abar5());
    CHECK(prym6_pullback(x + s * y) == prym6_pullback(x) + s * prym6_pullback(y));
  }
}

TEST_CASE("unknown coefficients never become known nonzero") {
  gen::Rng rng(9);
  const auto b = PicardBasis::rbar(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_partial(rng, b), c = random_partial(rng, b);
    const auto s = rng.rational();
    const auto sum = a + c, diff = a - c, scaled = s * a;
    for (const auto& g : b.generators()) {
      if (!a[g].is_known() || !c[g].is_known()) {
        CHECK_FALSE(sum[g].is_known());
        CHECK_FALSE(diff[g].is_known());
      }
      if (!a[g].is_known()) CHECK((scaled[g].is_known() ? *scaled[g].value == 0 && s == 0 : true));
    }
    const auto zero = Rational(0) * a;
    for (const auto& g : b.generators()) CHECK(zero[g] == Coefficient::known(0));
  }
}

TEST_CASE("canonical text") {
  const auto b = PicardBasis::mbar(3);
  DivisorClass c = DivisorClass::zero(b);
  c.set("lambda", Rational(1, 2)).set("delta1", -3).set("delta0", Coefficient::unknown());
  CHECK(c.to_string() == "1/2*lambda + ?*delta0 - 3*delta1");
  CHECK(DivisorClass::zero(b).to_string() == "0");
}
