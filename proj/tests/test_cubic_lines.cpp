#include <doctest.h>

#include "generators.hpp"
#include "prym/cubic_lines.hpp"
#include "prym/errors.hpp"

using namespace prym;
using namespace prym::cubic;

namespace {

using Q = RationalField;

HomogeneousForm<Q> family(const std::vector<Rational>& l) { return family_cubic(Q{}, l); }

// x q(x, u, v) in P^4, restricted to the plane y = z = 0.
HomogeneousForm<Q> plane_test_cubic(std::initializer_list<std::pair<Exponent, long long>> q_terms) {
  const Q q;
  HomogeneousForm<Q> f(q, 5, 3);
  for (const auto& [e, c] : q_terms) {
    Exponent full = {e[0] + 1, 0, 0, e[1], e[2]};
    f.add_term(full, q.from_int(c));
  }
  // Terms vanishing on the plane so the cubic is not a cone over it.
  f.add_term({0, 3, 0, 0, 0}, q.one());
  f.add_term({0, 0, 3, 0, 0}, q.one());
  return f;
}

HomogeneousForm<FiniteField> fermat(std::uint32_t p, std::uint32_t k, int vars) {
  const FiniteField f(p, k);
  HomogeneousForm<FiniteField> out(f, vars, 3);
  for (int i = 0; i < vars; ++i) {
    Exponent e(static_cast<std::size_t>(vars), 0);
    e[static_cast<std::size_t>(i)] = 3;
    out.add_term(e, f.one());
  }
  return out;
}

}  // namespace

TEST_CASE("family monomials and dimension counts") {
  const auto ex = family_exponents();
  REQUIRE(ex.size() == 21);
  CHECK(ex[12] == Exponent{1, 0, 0, 2, 0});  // x u^2
  CHECK(ex[13] == Exponent{1, 0, 0, 1, 1});  // x u v
  CHECK(ex[19] == Exponent{0, 1, 0, 0, 2});  // y v^2
  CHECK(ex[20] == Exponent{0, 0, 1, 2, 0});  // z u^2
  const auto c = family_dimension_counts();
  CHECK(c.family_linear == 21);
  CHECK(c.family_projective == 20);
  CHECK(c.stabilizer_linear == 11);
  CHECK(c.stabilizer_projective == 10);
  CHECK(c.monomials_match);
}

TEST_CASE("stabilizer of a flag") {
  const Q q;
  // A single d-dimensional subspace of K^5 costs (5 - d) d conditions.
  for (std::size_t d = 1; d <= 4; ++d) {
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Rational> v(5, 0);
      v[i] = 1;
      v[4] = static_cast<long>(i) + 2;
      rows.push_back(v);
    }
    CHECK(stabilizer_dimension({LinearSubspace<Q>(Matrix<Q>::from_rows(q, rows))}) == 25 - (5 - d) * d);
  }
  CHECK(stabilizer_dimension({}) == 25);
  CHECK_THROWS_AS(stabilizer_dimension({LinearSubspace<Q>(Matrix<Q>::from_ints(q, {{1, 0}}))}), ShapeError);
}

TEST_CASE("the sampler is deterministic and generic") {
  const auto a = sample_generic_lambdas(5, 30), b = sample_generic_lambdas(5, 30);
  CHECK(a == b);
  CHECK_FALSE(a == sample_generic_lambdas(6, 30));
  for (const auto& l : a) {
    CHECK(l.size() == 21);
    CHECK(l[13] * l[19] * l[20] != 0);
    CHECK(l[7] * l[20] - l[12] * l[17] != 0);
  }
}

TEST_CASE("family cubics: containments, residual sections and line types") {
  const Q q;
  const StandardConfiguration<Q> cfg(q);
  // The plane conditions are linear in the 21 coefficients, so 25 generic
  // points certify them identically.
  for (const auto& l : sample_generic_lambdas(42, 25)) {
    const auto f = family(l);
    CHECK(contains_line(f, cfg.l));
    CHECK(contains_line(f, cfg.r1));
    CHECK(contains_line(f, cfg.r2));
    const auto c1 = residual_configuration(f, cfg.l, cfg.pi1);
    CHECK(c1.kind == ResidualKind::DoubledLine);
    REQUIRE(c1.r.has_value());
    CHECK(*c1.r == cfg.r1);
    const auto c2 = residual_configuration(f, cfg.l, cfg.pi2);
    CHECK(c2.kind == ResidualKind::DoubledLine);
    CHECK(*c2.r == cfg.r2);
    CHECK(line_type(f, cfg.l) == LineType::FirstType);
    CHECK(line_type(f, cfg.r1) == LineType::SecondType);
    CHECK(line_type(f, cfg.r2) == LineType::SecondType);
  }
  const auto l = sample_generic_lambdas(1, 1).front();
  auto degenerate = l;
  degenerate[19] = 0;
  const std::vector<Rational> head(degenerate.begin(), degenerate.begin() + 15), tail(degenerate.begin() + 15, degenerate.end());
  const auto r = build_family_cubic(q, head, tail);
  CHECK(r.pi1_contained);
  CHECK_FALSE(r.pi1_verified);
  CHECK(r.pi2_verified);
}

TEST_CASE("residual conic kinds") {
  const Q q;
  const auto l = coordinate_span(q, {3, 4});
  const auto plane = coordinate_span(q, {0, 3, 4});
  // Residual conics in plane coordinates (x, u, v), l = {x = 0}.
  CHECK(residual_configuration(plane_test_cubic({{{0, 2, 0}, 1}, {{0, 0, 2}, 1}, {{2, 0, 0}, -1}}), l, plane).kind ==
        ResidualKind::SmoothConic);
  const auto pair = residual_configuration(plane_test_cubic({{{0, 1, 1}, 1}}), l, plane);
  CHECK(pair.kind == ResidualKind::LinePair);
  REQUIRE(pair.r.has_value());
  REQUIRE(pair.r_prime.has_value());
  CHECK((*pair.r == coordinate_span(q, {0, 4}) || *pair.r == coordinate_span(q, {0, 3})));
  CHECK_FALSE(*pair.r == *pair.r_prime);
  const auto doubled = residual_configuration(plane_test_cubic({{{0, 2, 0}, 3}}), l, plane);
  CHECK(doubled.kind == ResidualKind::DoubledLine);
  CHECK(*doubled.r == coordinate_span(q, {0, 4}));
  CHECK(residual_configuration(plane_test_cubic({{{1, 1, 0}, 1}}), l, plane).kind == ResidualKind::DoubleBaseLine);
  CHECK(residual_configuration(plane_test_cubic({{{2, 0, 0}, 1}}), l, plane).kind == ResidualKind::TripleBaseLine);
  // x^2 + u^2 does not split over Q: the residual is a conjugate pair.
  const auto conj = residual_configuration(plane_test_cubic({{{0, 2, 0}, 1}, {{2, 0, 0}, 1}}), l, plane);
  CHECK(conj.kind == ResidualKind::LinePair);
  CHECK_FALSE(conj.r.has_value());

  HomogeneousForm<Q> contains(q, 5, 3);
  contains.add_term({0, 3, 0, 0, 0}, q.one());
  CHECK_THROWS_AS(residual_configuration(contains, l, plane), DegenerateInputError);
  CHECK_THROWS_AS(residual_configuration(plane_test_cubic({{{2, 0, 0}, 1}}), coordinate_span(q, {0, 3}),
                                         coordinate_span(q, {1, 3, 4})),
                  DomainError);
}

TEST_CASE("Murre system matches the displayed equations") {
  const Q q;
  const StandardConfiguration<Q> cfg(q);
  for (const auto& l : sample_generic_lambdas(9, 20)) {
    const auto ts = fano_tangent_space(family(l), LineChart<Q>::standard(cfg.l));
    const Rational z = 0;
    const auto want = Matrix<Q>::from_rows(q, {{l[12], z, z, z, l[20], z},
                                               {l[13], l[12], z, z, z, l[20]},
                                               {l[14], l[13], l[19], z, z, z},
                                               {z, l[14], z, l[19], z, z}});
    CHECK(ts.system == want);
    CHECK(ts.rank == 4);
    CHECK(ts.kernel.size() == 2);
    // x', x'' are independent coordinates on the kernel.
    CHECK(Matrix<Q>::from_rows(q, {{ts.kernel[0][0], ts.kernel[0][1]}, {ts.kernel[1][0], ts.kernel[1][1]}}).rank() == 2);
  }
  CHECK_THROWS_AS(fano_tangent_space(family(sample_generic_lambdas(1, 1).front()),
                                     LineChart<Q>::standard(coordinate_span(q, {0, 1}))),
                  DomainError);
}

TEST_CASE("node transversality at sampled cubics") {
  const Q q;
  const StandardConfiguration<Q> cfg(q);
  for (const auto& l : sample_generic_lambdas(13, 10)) {
    const auto r = gamma_node_check(CubicThreefold<Q>(family(l)), cfg.l, cfg.r1, cfg.r2);
    CHECK(r.branch1.kernel_dim == 1);
    CHECK(r.branch2.kernel_dim == 1);
    CHECK(r.independent);
    CHECK(r.branch1_on_x1_zero);
    CHECK(r.branch2_on_x2_zero);
    CHECK(r.in_tangent_space);
    CHECK(r.gamma_prime_tangent_checks);
    CHECK(r.plane_deformation_checks);
    CHECK(r.l_deformation_checks);
    REQUIRE(r.display_scale.has_value());
    CHECK(*r.display_scale == -2);
    CHECK(r.lambda == l);
    // Both directions solve the tangent system built here from scratch.
    const Rational z = 0;
    const auto sys = Matrix<Q>::from_rows(q, {{l[12], z, z, z, l[20], z},
                                              {l[13], l[12], z, z, z, l[20]},
                                              {l[14], l[13], l[19], z, z, z},
                                              {z, l[14], z, l[19], z, z}});
    for (const auto* b : {&r.branch1, &r.branch2}) {
      REQUIRE(b->l_chart.size() == 6);
      for (const auto& x : sys.apply(b->l_chart)) CHECK(x == 0);
    }
    CHECK(r.branch1.l_chart[0] == 0);
    // Tangent line of Gamma' at r1 from the closed-form coefficients.
    const Rational d = l[7] * l[20] - l[12] * l[17], e = l[12] * l[15] - l[5] * l[20];
    CHECK((r.branch1.c1 != 0 || r.branch1.c2 != 0));
    CHECK(d * r.branch1.c1 + e * r.branch1.c2 == 0);
    CHECK(r.branch2.l_chart[1] == 0);
  }
}

TEST_CASE("node transversality survives a change of coordinates") {
  const Q q;
  gen::Rng rng(31);
  const StandardConfiguration<Q> cfg(q);
  int tested = 0;
  for (const auto& l : sample_generic_lambdas(21, 8)) {
    auto a = rng.matrix(q, 5, 5, 20);
    if (a.rank() < 5) continue;
    // New coordinates y = A^{-1} x: the form becomes f(A y), lines map by A^{-1}.
    const auto g = substitute_linear(family(l), a);
    const auto inv_t = a.inverse().transpose();
    auto move = [&](const LinearSubspace<Q>& s) { return LinearSubspace<Q>(s.basis() * inv_t); };
    const auto r = gamma_node_check(CubicThreefold<Q>(g), move(cfg.l), move(cfg.r1), move(cfg.r2));
    CHECK(r.independent);
    CHECK(r.in_tangent_space);
    CHECK(r.gamma_prime_tangent_checks);
    ++tested;
  }
  CHECK(tested >= 5);
}

TEST_CASE("gamma_node_check preconditions") {
  const Q q;
  const StandardConfiguration<Q> cfg(q);
  auto l = sample_generic_lambdas(2, 1).front();
  l[20] = 0;
  CHECK_THROWS_AS(gamma_node_check(CubicThreefold<Q>(family(l)), cfg.l, cfg.r1, cfg.r2), PreconditionError);
  auto extra = family(sample_generic_lambdas(2, 1).front());
  extra.add_term({0, 0, 0, 3, 0}, q.one());
  CHECK_THROWS_AS(gamma_node_check(CubicThreefold<Q>(extra), cfg.l, cfg.r1, cfg.r2), PreconditionError);
}

TEST_CASE("line geometry rejects characteristic 2 and 3") {
  const FiniteField f3(3, 1);
  HomogeneousForm<FiniteField> f(f3, 5, 3);
  f.add_term({1, 1, 1, 0, 0}, f3.one());
  CHECK_THROWS_AS(line_type(f, coordinate_span(f3, {3, 4})), DomainError);
}

TEST_CASE("27 lines on the Fermat cubic surface") {
  // Over F_5 the cube map is bijective: only the three lines x = -y, z = -w
  // and permutations are rational.
  const auto c1 = count_lines_brute(fermat(5, 1, 4));
  CHECK(c1.count == 3);
  for (const std::uint32_t k : {2u, 4u}) {
    const auto c = count_lines_brute(fermat(5, k, 4));
    CHECK(c.count == 27);
    CHECK_FALSE(c.non_smooth);
    REQUIRE(c.incidence.size() == 27);
    for (auto d : c.incidence) CHECK(d == 10);
  }
  const auto c7 = count_lines_brute(fermat(7, 1, 4));
  CHECK(c7.count == 27);
  // Every line found really lies on the surface.
  for (const auto& l : c7.lines) CHECK(contains_line(fermat(7, 1, 4), l));
}

TEST_CASE("singular surfaces are flagged") {
  const FiniteField f(7, 1);
  HomogeneousForm<FiniteField> cone(f, 4, 3);
  cone.add_term({3, 0, 0, 0}, f.one());
  cone.add_term({0, 3, 0, 0}, f.one());
  cone.add_term({0, 0, 3, 0}, f.one());
  CHECK(count_lines_brute(cone).non_smooth);
}

TEST_CASE("lines meeting") {
  const FiniteField f(5, 1);
  CHECK(lines_meet(coordinate_span(f, {0, 1}), coordinate_span(f, {1, 2})));
  CHECK_FALSE(lines_meet(coordinate_span(f, {0, 1}), coordinate_span(f, {2, 3})));
}

TEST_CASE("determinant criterion against the all-planes oracle") {
  for (const std::uint32_t p : {5u, 7u}) {
    const auto f = fermat(p, 1, 5);
    const auto lines = lines_on_cubic(f);
    CHECK(!lines.empty());
    for (const auto& l : lines) CHECK(line_type(f, l) == line_type_by_planes(f, l));
  }
  // A reduced family cubic has second-type lines r1, r2.
  const FiniteField f7(7, 1);
  const auto l = sample_generic_lambdas(3, 1).front();
  const auto fam = family(l).map_coefficients(f7, [&](const Rational& c) { return f7.from_rational(c); });
  const StandardConfiguration<FiniteField> cfg(f7);
  CHECK(line_type_by_planes(fam, cfg.r1) == LineType::SecondType);
  CHECK(line_type(fam, cfg.r1) == LineType::SecondType);
}
