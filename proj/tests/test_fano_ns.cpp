#include <doctest.h>

#include "generators.hpp"
#include "prym/errors.hpp"
#include "prym/fano_ns.hpp"

using namespace prym;
using namespace prym::fano;

TEST_CASE("intersection numbers") {
  CHECK(intersect(kIncidence, kIncidence) == 5);
  CHECK(intersect(NSClass{24}, NSClass{27}) == 3240);
  CHECK(intersect(kSecondTypeCurve, kSecondTypeCurve + kCanonical) == 270);
}

TEST_CASE("intersection is symmetric and bilinear") {
  gen::Rng rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const NSClass a{rng.range(-1000, 1000)}, b{rng.range(-1000, 1000)}, c{rng.range(-1000, 1000)};
    const auto s = rng.range(-50, 50);
    CHECK(intersect(a, b) == intersect(b, a));
    CHECK(intersect(a + b, c) == intersect(a, c) + intersect(b, c));
    CHECK(intersect(s * a, c) == s * intersect(a, c));
  }
}

TEST_CASE("adjunction genus") {
  CHECK(adjunction_genus(kSecondTypeCurve) == 136);
  CHECK(adjunction_genus(NSClass{24}) == 1621);
  // 2p - 2 = 5m(m + 3), hand-solved for every m.
  for (std::int64_t m = 1; m <= 2000; ++m) {
    const Rational p = adjunction_genus(NSClass{m});
    CHECK(p.get_den() == 1);
    CHECK(p == Rational(1 + 5 * m * (m + 3) / 2));
  }
  CHECK_THROWS_AS(adjunction_genus(NSClass{0}), DomainError);
  CHECK_THROWS_AS(adjunction_genus(NSClass{-3}), DomainError);
}

TEST_CASE("gamma multiple") {
  CHECK(derive_gamma_multiple(1, 8) == NSClass{24});
  CHECK(derive_gamma_multiple(1, 8) == 8 * kCanonical);
  CHECK_THROWS_AS(derive_gamma_multiple(0, 8), DerivationError);
  CHECK_THROWS_AS(derive_gamma_multiple(2, 1), DerivationError);
}

TEST_CASE("node budget and desingularization partition") {
  CHECK(node_budget() == 1485);
  const auto d = desing_partition();
  CHECK(d.gamma_self == 2880);
  CHECK(d.crossing_points == 1440);
  CHECK(d.shared_nodes == 720);
  CHECK(d.residual_nodes == 765);
  CHECK(d.shared_nodes + d.residual_nodes == node_budget());
}
