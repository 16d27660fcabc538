#include "prym/suites.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "prym/cubic_lines.hpp"
#include "prym/errors.hpp"
#include "prym/fano_ns.hpp"
#include "prym/picard.hpp"
#include "prym/polynomial_io.hpp"
#include "prym/quartic_fiber.hpp"
#include "prym/theta_f2.hpp"

namespace prym {

namespace {

using Clock = std::chrono::steady_clock;

template <class Fn>
void timed(VerificationReport& r, const std::string& id, const std::string& anchor, const std::string& expected,
           Fn&& fn) {
  const auto t0 = Clock::now();
  std::string computed;
  try {
    computed = fn();
  } catch (const std::exception& e) {
    computed = std::string("error: ") + e.what();
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  r.add(id, anchor, expected, computed).runtime_ms = ms;
}

std::string ratio(std::size_t hits, std::size_t total) { return std::to_string(hits) + "/" + std::to_string(total); }

std::uint64_t pow2(int n) { return std::uint64_t{1} << n; }

std::string field_tag(std::uint32_t p, std::uint32_t k) {
  return "F" + std::to_string(p) + (k == 1 ? "" : "^" + std::to_string(k));
}

// Coefficients of a prime-field form, carried into F_{p^k}.
HomogeneousForm<FiniteField> lift(const HomogeneousForm<FiniteField>& f, std::uint32_t ext) {
  const FiniteField k(f.field().characteristic(), ext);
  return f.map_coefficients(k, [&](const Fq& c) { return Fq{c.v, k.gf}; });
}

HomogeneousForm<FiniteField> reduce(const HomogeneousForm<RationalField>& f, std::uint32_t p) {
  const FiniteField k(p, 1);
  return f.map_coefficients(k, [&](const Rational& c) { return k.from_rational(c); });
}

// The --curve form over a prime field.
HomogeneousForm<FiniteField> curve_over_prime(const SuiteOptions& opt) {
  const NamedForm nf = load_form(*opt.curve);
  if (nf.is_rational()) {
    if (!opt.prime) throw UsageError("a rational --curve needs --prime");
    return reduce(nf.rational(), *opt.prime);
  }
  const auto& f = nf.finite();
  if (f.field().gf->degree() != 1) throw UsageError("--curve must have coefficients in a prime field");
  if (opt.prime && *opt.prime != f.field().characteristic())
    throw UsageError("--prime disagrees with the field of --curve");
  return f;
}

HomogeneousForm<FiniteField> fermat(std::uint32_t p, int vars, int degree) {
  const FiniteField k(p, 1);
  HomogeneousForm<FiniteField> f(k, vars, degree);
  for (int i = 0; i < vars; ++i) {
    Exponent e(static_cast<std::size_t>(vars), 0);
    e[static_cast<std::size_t>(i)] = degree;
    f.add_term(e, k.one());
  }
  return f;
}

// ---------------------------------------------------------------------------

void classes_checks(VerificationReport& r) {
  using namespace picard;
  const auto rbar5 = PicardBasis::rbar(5);
  const auto rbar6 = PicardBasis::rbar(6);
  const std::vector<std::string> g6 = {"lambda", "delta0'", "delta0ram"};
  const std::vector<std::string> g7 = {"lambda", "delta0"};

  timed(r, "classes.T5_even_restriction", "0 = i*[T^e_5] = 68 i*lambda - 17 i*delta0ram", "(68, -17)",
        [] { return fiber_restrict(class_T(5, Parity::Even)).to_string(); });
  timed(r, "classes.T5_even_relation", "T^e_5 misses the general Prym fiber", "0",
        [] { return to_string(apply_fiber_relation(fiber_restrict(class_T(5, Parity::Even)))); });
  timed(r, "classes.T5_odd_restriction", "i*[T^o_5] = 64 i*lambda - 15 i*delta0ram", "(64, -15)",
        [] { return fiber_restrict(class_T(5, Parity::Odd)).to_string(); });
  timed(r, "classes.T5_odd_relation", "i*[T^o_5] = 4 i*lambda, clearly nonzero", "4",
        [] { return to_string(apply_fiber_relation(fiber_restrict(class_T(5, Parity::Odd)))); });
  timed(r, "classes.K_rbar5_restriction", "i*K = 13 i*lambda - 3 i*delta0ram", "(13, -3)",
        [] { return fiber_restrict(canonical_class_rbar5()).to_string(); });
  timed(r, "classes.K_rbar5_relation", "i*K = i*lambda", "1",
        [] { return to_string(apply_fiber_relation(fiber_restrict(canonical_class_rbar5()))); });
  timed(r, "classes.prym6_pushforward_To6", "P_*[T^o_6] = 10584L - 1320D", "10584*L - 1320*D",
        [] { return prym6_pushforward(class_T(6, Parity::Odd)).to_string(); });
  timed(r, "classes.prym6_pushforward_lambda", "P_*lambda = 18*27 L - 57 D", "486*L - 57*D",
        [&] { return prym6_pushforward(DivisorClass::generator(rbar6, "lambda")).to_string(); });
  timed(r, "classes.prym6_pushforward_delta0pp", "P_*delta0'' = 0", "0",
        [&] { return prym6_pushforward(DivisorClass::generator(rbar6, "delta0''")).to_string(); });
  timed(r, "classes.prym6_pullback_L", "P^*L = lambda - 1/4 delta0ram", "1*lambda - 1/4*delta0ram",
        [] { return prym6_pullback(DivisorClass::generator(PicardBasis::abar5(), "L")).to_string(); });
  timed(r, "classes.prym6_pullback_To6", "10584 lambda - 1320 delta0' - 2646 delta0ram",
        "10584*lambda - 1320*delta0' - 2646*delta0ram",
        [] { return prym6_pullback(prym6_pushforward(class_T(6, Parity::Odd))).to_string(); });
  timed(r, "classes.prym6_pullback_To6_proportional", "these coefficients are not proportional", "false", [&] {
    const auto t = class_T(6, Parity::Odd);
    return bool_string(proportional_on(g6, prym6_pullback(prym6_pushforward(t)), t));
  });
  timed(r, "classes.T7_vs_M74_proportional", "the classes of T_7 and M^1_{7,4} on lambda, delta0", "false",
        [&] { return bool_string(proportional_on(g7, theta_null_m7(), tetragonal_locus_m7())); });
  timed(r, "classes.U60_vs_Te6_proportional", "U_{6,0} against T^e_6 on lambda, delta0', delta0ram", "false",
        [&] { return bool_string(proportional_on(g6, prym_ramification_rbar6(), class_T(6, Parity::Even))); });
  timed(r, "classes.U60_vs_To6_proportional", "U_{6,0} against T^o_6 on lambda, delta0', delta0ram", "false",
        [&] { return bool_string(proportional_on(g6, prym_ramification_rbar6(), class_T(6, Parity::Odd))); });
}

// ---------------------------------------------------------------------------

void fano_checks(VerificationReport& r) {
  using namespace fano;
  using namespace picard;
  const auto rbar5 = PicardBasis::rbar(5);
  auto fiber_canonical = [] { return apply_fiber_relation(fiber_restrict(canonical_class_rbar5())); };
  // The preimage of Gamma splits as T^o_5 and Delta0ram on the double cover.
  auto gamma_pullback = [rbar5] {
    return apply_fiber_relation(fiber_restrict(class_T(5, Parity::Odd) + DivisorClass::generator(rbar5, "delta0ram")));
  };

  timed(r, "fano.L_squared", "L^2 = 5", "5", [] { return std::to_string(intersect(kIncidence, kIncidence)); });
  timed(r, "fano.fiber_canonical", "K of the fiber = i*lambda", "1", [&] { return to_string(fiber_canonical()); });
  timed(r, "fano.gamma_pullback", "phi*Gamma = 8 i*lambda", "8", [&] { return to_string(gamma_pullback()); });
  timed(r, "fano.gamma_multiple", "we deduce that m = 24", "24", [&] {
    return std::to_string(derive_gamma_multiple(fiber_canonical(), gamma_pullback()).multiple);
  });
  timed(r, "fano.gamma_is_8K", "Gamma is numerically equivalent to 8K", "true", [&] {
    return bool_string(derive_gamma_multiple(fiber_canonical(), gamma_pullback()) == 8 * kCanonical);
  });
  timed(r, "fano.intersect_24L_27L", "648 L^2 = 3240", "3240",
        [] { return std::to_string(intersect(NSClass{24}, NSClass{27})); });
  timed(r, "fano.gamma_prime_adjunction", "54 L^2 = 270", "270",
        [] { return std::to_string(intersect(kSecondTypeCurve, kSecondTypeCurve + kCanonical)); });
  timed(r, "fano.genus_gamma_prime", "g(Gamma') = 136", "136",
        [] { return to_string(adjunction_genus(kSecondTypeCurve)); });
  timed(r, "fano.arithmetic_genus_gamma", "p_a(Gamma) = 1621", "1621",
        [] { return to_string(adjunction_genus(NSClass{24})); });
  timed(r, "fano.nodes", "exactly 1485 nodes", "1485", [] { return std::to_string(node_budget()); });
  const auto part = [] { return desing_partition(); };
  timed(r, "fano.gamma_self_intersection", "Gamma . Gamma = 2880", "2880",
        [&] { return std::to_string(part().gamma_self); });
  timed(r, "fano.crossing_points", "1440 intersection points of the two components", "1440",
        [&] { return std::to_string(part().crossing_points); });
  timed(r, "fano.shared_nodes", "exactly 720 lines", "720", [&] { return std::to_string(part().shared_nodes); });
  timed(r, "fano.residual_nodes", "765 nodes on each component", "765",
        [&] { return std::to_string(part().residual_nodes); });
}

// ---------------------------------------------------------------------------

void theta_checks(VerificationReport& r, int g) {
  using namespace theta;
  const std::string pre = "theta.g" + std::to_string(g) + ".";
  const SymplecticSpaceF2 s(g);
  const std::uint64_t n = s.size();

  const std::uint64_t even = pow2(g - 1) * (pow2(g) + 1), odd = pow2(g - 1) * (pow2(g) - 1);
  timed(r, pre + "parity_counts", "2^{g-1}(2^g + 1) even and 2^{g-1}(2^g - 1) odd theta-characteristics",
        "even=" + std::to_string(even) + " odd=" + std::to_string(odd), [&] {
          const auto c = count_parities(g);
          return "even=" + std::to_string(c.even) + " odd=" + std::to_string(c.odd);
        });
  if (g == 3)
    timed(r, pre + "odd_count_is_28", "its 28 bitangent lines", "28",
          [] { return std::to_string(count_parities(3).odd); });

  // Arf invariant against the majority value of q.
  timed(r, pre + "parity_by_zero_count", "parity of a theta-characteristic as the Arf invariant",
        ratio(n, n), [&] {
          std::size_t ok = 0;
          for (std::uint64_t t = 0; t < n; ++t) {
            const QuadraticFormF2 q{g, s.vector(t)};
            std::uint64_t zeros = 0;
            for (std::uint64_t x = 0; x < n; ++x) zeros += q(s.vector(x)) == 0;
            const Parity by_count = zeros == even ? Parity::Even : Parity::Odd;
            if (zeros != even && zeros != odd) continue;
            ok += parity(q) == by_count;
          }
          return ratio(ok, n);
        });

  timed(r, pre + "translation_parity", "parity(q + mu) = parity(q) + q(mu)", ratio(n * n, n * n), [&] {
    std::size_t ok = 0;
    for (std::uint64_t t = 0; t < n; ++t) {
      const QuadraticFormF2 q{g, s.vector(t)};
      const int pq = parity(q) == Parity::Odd;
      for (std::uint64_t m = 0; m < n; ++m) {
        const int pt = parity(q.translated(s.vector(m))) == Parity::Odd;
        ok += pt == (pq ^ q(s.vector(m)));
      }
    }
    return ratio(ok, n * n);
  });

  if (g <= 3) {
    const std::uint64_t total = n * n * n;
    timed(r, pre + "riemann_mumford", "sum of parities over W is <mu1, mu2> mod 2", ratio(total, total), [&] {
      std::size_t ok = 0;
      for (std::uint64_t t = 0; t < n; ++t) {
        const QuadraticFormF2 q{g, s.vector(t)};
        for (std::uint64_t a = 0; a < n; ++a)
          for (std::uint64_t b = 0; b < n; ++b) {
            const auto mu1 = s.vector(a), mu2 = s.vector(b);
            ok += riemann_mumford_check(q, {TwoTorsionVector{}, mu1, mu2, mu1 + mu2});
          }
      }
      return ratio(ok, total);
    });
  }

  if (g < 2) return;
  timed(r, pre + "quotient_well_defined", "eta^perp / <eta> carries the induced symplectic form",
        ratio(n - 1, n - 1), [&] {
          std::size_t ok = 0;
          for (std::uint64_t e = 1; e < n; ++e) {
            const auto eta = s.vector(e);
            const auto quo = quotient_symplectic(s, eta);
            const auto perp = quo.eta_perp().elements();
            bool good = perp.size() == n / 2 && quo.quotient().genus() == g - 1;
            std::set<std::uint64_t> image;
            for (const auto& x : perp) {
              const auto px = quo.project(x);
              image.insert(px.bits);
              if (quo.project(x + eta) != px) good = false;
              if (px.is_zero() != (x.is_zero() || x == eta)) good = false;
              if (quo.project(quo.lift(px)) != px) good = false;
              for (const auto& y : perp)
                if (quo.quotient().pairing(px, quo.project(y)) != s.pairing(x, y)) good = false;
            }
            if (image.size() != quo.quotient().size()) good = false;
            ok += good;
          }
          return ratio(ok, n - 1);
        });

  const std::uint64_t pairs = n * (n - 1);
  std::size_t descended = 0, parity_kept = 0;
  timed(r, pre + "descent", "q descends to mu^perp / <mu> exactly when q(mu) = 0", ratio(pairs, pairs), [&] {
    std::size_t ok = 0;
    for (std::uint64_t t = 0; t < n; ++t) {
      const QuadraticFormF2 q{g, s.vector(t)};
      for (std::uint64_t m = 1; m < n; ++m) {
        const auto mu = s.vector(m);
        bool good = true;
        try {
          const auto d = descend_form(q, mu);
          if (q(mu) != 0) good = false;
          for (const auto& x : d.quotient.eta_perp().elements())
            if (d.form(d.quotient.project(x)) != q(x)) good = false;
          ++descended;
          parity_kept += parity(d.form) == parity(q);
        } catch (const DescentObstructionError&) {
          good = q(mu) == 1;
        }
        ok += good;
      }
    }
    return ratio(ok, pairs);
  });
  // A singular vector splits off a hyperbolic plane of Arf invariant 0.
  r.add(pre + "descent_parity", "parity of q equals the parity of the descended form", ratio(descended, descended),
        ratio(parity_kept, descended));
}

// ---------------------------------------------------------------------------

using QField = RationalField;

Matrix<QField> displayed_murre_system(const std::vector<Rational>& l) {
  const Rational z = 0;
  return Matrix<QField>::from_rows(QField{}, {{l[12], z, z, z, l[20], z},
                                              {l[13], l[12], z, z, z, l[20]},
                                              {l[14], l[13], l[19], z, z, z},
                                              {z, l[14], z, l[19], z, z}});
}

struct FamilyTally {
  std::size_t pi1 = 0, pi2 = 0, l_first = 0, murre = 0, kernel2 = 0, r1_second = 0, r2_second = 0;
  std::size_t independent = 0, x1 = 0, x2 = 0, tangent_space = 0, gamma_tangent = 0, plane_def = 0, l_def = 0;
  std::set<std::string> scales;
};

void cubic_family_checks(VerificationReport& r, const SuiteOptions& opt) {
  using namespace cubic;
  const QField q;
  const StandardConfiguration<QField> cfg(q);
  const auto lambdas = sample_generic_lambdas(opt.seed, opt.samples);
  const std::size_t n = lambdas.size();

  nlohmann::json js = nlohmann::json::array();
  for (const auto& l : lambdas) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : l) row.push_back(to_string(x));
    js.push_back(std::move(row));
  }
  r.samples["cubic.lambda"] = std::move(js);

  timed(r, "cubic.family_dimensions", "the cubics through l with both plane sections form a 20-dimensional linear variety",
        "21 20", [] {
          const auto c = family_dimension_counts();
          return std::to_string(c.family_linear) + " " + std::to_string(c.family_projective);
        });
  timed(r, "cubic.stabilizer_dimensions", "ten projective parameters for the configuration", "11 10", [] {
    const auto c = family_dimension_counts();
    return std::to_string(c.stabilizer_linear) + " " + std::to_string(c.stabilizer_projective);
  });
  timed(r, "cubic.family_monomials", "admits an equation of the form", "true",
        [] { return bool_string(family_dimension_counts().monomials_match); });

  FamilyTally t;
  std::int64_t residual_ms = 0, murre_ms = 0, node_ms = 0;
  for (const auto& l : lambdas) {
    auto t0 = Clock::now();
    const std::vector<Rational> head(l.begin(), l.begin() + 15), tail(l.begin() + 15, l.end());
    const auto fam = build_family_cubic(q, head, tail);
    t.pi1 += fam.pi1_verified;
    t.pi2 += fam.pi2_verified;
    t.l_first += line_type(fam.form, cfg.l) == LineType::FirstType;
    t.r1_second += line_type(fam.form, cfg.r1) == LineType::SecondType;
    t.r2_second += line_type(fam.form, cfg.r2) == LineType::SecondType;
    auto t1 = Clock::now();
    residual_ms += std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count();

    const auto ts = fano_tangent_space(fam.form, LineChart<QField>::standard(cfg.l));
    t.murre += ts.system == displayed_murre_system(l);
    t.kernel2 += ts.rank == 4 && ts.kernel.size() == 2;
    auto t2 = Clock::now();
    murre_ms += std::chrono::duration_cast<std::chrono::microseconds>(t2 - t1).count();

    const auto g = gamma_node_check(CubicThreefold<QField>(fam.form), cfg.l, cfg.r1, cfg.r2);
    t.independent += g.independent;
    t.x1 += g.branch1_on_x1_zero;
    t.x2 += g.branch2_on_x2_zero;
    t.tangent_space += g.in_tangent_space;
    t.gamma_tangent += g.gamma_prime_tangent_checks;
    t.plane_def += g.plane_deformation_checks;
    t.l_def += g.l_deformation_checks;
    t.scales.insert(g.display_scale ? to_string(*g.display_scale) : "none");
    node_ms += std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t2).count();
  }
  residual_ms /= 1000;
  murre_ms /= 1000;
  node_ms /= 1000;

  const std::string all = ratio(n, n);
  auto add = [&](const std::string& id, const std::string& anchor, std::size_t hits, std::int64_t ms) {
    r.add(id, anchor, all, ratio(hits, n)).runtime_ms = ms;
  };
  add("cubic.residual_pi1", "V . pi_1 = l + 2 r_1", t.pi1, residual_ms);
  add("cubic.residual_pi2", "V . pi_2 = l + 2 r_2", t.pi2, residual_ms);
  add("cubic.l_first_type", "l is a line of first type", t.l_first, residual_ms);
  add("cubic.r1_second_type", "r_1 is a line of second type", t.r1_second, residual_ms);
  add("cubic.r2_second_type", "r_2 is a line of second type", t.r2_second, residual_ms);
  add("cubic.murre_system", "T_l F(V) is described by the four independent equations", t.murre, murre_ms);
  add("cubic.murre_kernel", "rank 4 system with a 2-dimensional kernel", t.kernel2, murre_ms);
  add("cubic.node_independent", "it follows that l is a node", t.independent, node_ms);
  add("cubic.node_branch1_x1", "the branch through r_1 lies in x' = 0", t.x1, node_ms);
  add("cubic.node_branch2_x2", "the branch through r_2 lies in x'' = 0", t.x2, node_ms);
  add("cubic.node_in_tangent_plane", "both branch directions lie in T_l F(V)", t.tangent_space, node_ms);
  add("cubic.gamma_prime_tangent", "T_{r_1}(Gamma') : (l7 l20 - l12 l17) c' + (l12 l15 - l5 l20) c'' = 0", t.gamma_tangent,
      node_ms);
  add("cubic.plane_deformation", "a first order deformation of the 2-plane, up to scale", t.plane_def, node_ms);
  add("cubic.line_deformation", "the first order deformation of l, up to scale", t.l_def, node_ms);
  std::string scales;
  for (const auto& s : t.scales) scales += (scales.empty() ? "" : ",") + s;
  r.add("cubic.deformation_scale", "solved deformation over the displayed vector at equal c''", "-2", scales).runtime_ms =
      node_ms;

  timed(r, "cubic.degenerate_lambda19", "otherwise V would contain one of the 2-planes", "pi1 contained", [&] {
    std::vector<Rational> head(lambdas.front().begin(), lambdas.front().begin() + 15);
    std::vector<Rational> tail(lambdas.front().begin() + 15, lambdas.front().end());
    tail[4] = 0;
    const auto fam = build_family_cubic(q, head, tail);
    std::string s = fam.pi1_contained ? "pi1 contained" : "pi1 not contained";
    if (fam.pi2_contained) s += ", pi2 contained";
    return s;
  });
}

// Determinant criterion against the all-planes oracle, every rational line.
std::string line_type_agreement(const HomogeneousForm<FiniteField>& f, std::size_t* second) {
  const auto lines = cubic::lines_on_cubic(f);
  std::size_t ok = 0, sec = 0;
  for (const auto& l : lines) {
    const auto a = cubic::line_type(f, l);
    ok += a == cubic::line_type_by_planes(f, l);
    sec += a == cubic::LineType::SecondType;
  }
  if (second) *second = sec;
  return ratio(ok, lines.size());
}

void cubic_line_type_checks(VerificationReport& r, const SuiteOptions& opt) {
  const auto lambdas = cubic::sample_generic_lambdas(opt.seed, 64);
  for (const std::uint32_t p : {5u, 7u}) {
    const std::string tag = field_tag(p, 1);
    const auto fer = fermat(p, 5, 3);
    std::size_t expected_lines = cubic::lines_on_cubic(fer).size();
    timed(r, "cubic.line_type_oracle." + tag + ".fermat", "second type iff a plane meets V in 2l + r",
          ratio(expected_lines, expected_lines), [&] { return line_type_agreement(fer, nullptr); });

    // First sample whose denominators survive reduction mod p.
    std::optional<HomogeneousForm<FiniteField>> fam;
    for (const auto& l : lambdas) {
      try {
        fam = reduce(cubic::family_cubic(QField{}, l), p);
        if (!FiniteField::is_zero(fam->coefficient({0, 1, 0, 0, 2})) &&
            !FiniteField::is_zero(fam->coefficient({0, 0, 1, 2, 0})))
          break;
      } catch (const DomainError&) {
      }
      fam.reset();
    }
    if (!fam) {
      r.add("cubic.line_type_oracle." + tag + ".family", "second type iff a plane meets V in 2l + r", "a family cubic",
            "no sample reduces mod " + std::to_string(p));
      continue;
    }
    expected_lines = cubic::lines_on_cubic(*fam).size();
    timed(r, "cubic.line_type_oracle." + tag + ".family", "second type iff a plane meets V in 2l + r",
          ratio(expected_lines, expected_lines), [&] { return line_type_agreement(*fam, nullptr); });
  }
}

std::string describe_line_count(const cubic::LineCount& c) {
  std::string s = std::to_string(c.count) + " lines";
  if (c.count == 27) {
    std::set<std::size_t> deg(c.incidence.begin(), c.incidence.end());
    s += ", incidence";
    for (auto d : deg) s += " " + std::to_string(d);
  }
  s += c.non_smooth ? ", singular" : ", smooth";
  return s;
}

// Lines on x^3 + y^3 + z^3 + w^3: all 27 are rational iff F_q has the cube
// roots of unity; otherwise only the three with trivial roots.
std::string fermat_surface_expectation(std::uint64_t q) {
  return (q - 1) % 3 == 0 ? "27 lines, incidence 10, smooth" : "3 lines, smooth";
}

void cubic_surface_checks(VerificationReport& r, const SuiteOptions& opt) {
  const std::string anchor = "the incidence correspondence on the 27 lines";
  if (opt.prime || opt.ext) {
    const std::uint32_t p = opt.prime.value_or(5), k = opt.ext.value_or(1);
    const FiniteField fk(p, k);
    timed(r, "cubic.lines27." + field_tag(p, k), anchor, fermat_surface_expectation(fk.order()),
          [&] { return describe_line_count(cubic::count_lines_brute(lift(fermat(p, 4, 3), k))); });
    return;
  }
  for (const std::uint32_t k : {1u, 2u, 4u}) {
    const FiniteField fk(5, k);
    timed(r, "cubic.lines27." + field_tag(5, k), anchor, fermat_surface_expectation(fk.order()),
          [&] { return describe_line_count(cubic::count_lines_brute(lift(fermat(5, 4, 3), k))); });
  }
}

void cubic_curve_checks(VerificationReport& r, const SuiteOptions& opt) {
  const auto f0 = curve_over_prime(opt);
  if (f0.degree() != 3) throw UsageError("--curve for the cubic suite must be a cubic form");
  const std::uint32_t p = f0.field().characteristic(), k = opt.ext.value_or(1);
  const auto f = lift(f0, k);
  const std::string tag = field_tag(p, k);
  if (f.num_vars() == 4) {
    const auto c = cubic::count_lines_brute(f);
    r.add("cubic.curve.lines." + tag, "at most 27 lines on a smooth cubic surface", "true",
          bool_string(c.non_smooth || c.count <= 27));
    r.samples["cubic.curve.lines." + tag] = describe_line_count(c);
  } else if (f.num_vars() == 5) {
    std::size_t second = 0;
    const auto n = cubic::lines_on_cubic(f).size();
    timed(r, "cubic.curve.line_type_oracle." + tag, "second type iff a plane meets V in 2l + r", ratio(n, n),
          [&] { return line_type_agreement(f, &second); });
    r.samples["cubic.curve.second_type_lines." + tag] = second;
  } else {
    throw UsageError("--curve for the cubic suite needs 4 or 5 variables");
  }
}

// ---------------------------------------------------------------------------

std::string fiber_expectation(std::uint64_t q) {
  switch (q) {
    case 7: return "22";
    case 11: return "70";
    case 13: return "106";
    case 17: return "202";
    default: return std::to_string((q - 5) * (q - 6) / 2 + q * (q - 1) / 2);
  }
}

void fiber_check(VerificationReport& r, const FiniteField& k, std::uint64_t seed) {
  const std::string tag = "F" + std::to_string(k.order());
  timed(r, "quartic.genus3_fiber." + tag, "lines missing the six points and not tangent to the conic",
        fiber_expectation(k.order()), [&] {
          const auto c = quartic::genus3_fiber_counts(quartic::MarkedConic::random(k, seed));
          return std::to_string(c.direct);
        });
}

void bitangent_checks(VerificationReport& r, const std::string& name, const quartic::PlaneQuartic<FiniteField>& x,
                      std::uint32_t from_k, std::uint32_t to_k, bool expect_full) {
  const std::uint32_t p = x.field().characteristic();
  nlohmann::json counts = nlohmann::json::object();
  std::size_t last = 0;
  bool smooth = true;
  for (std::uint32_t k = from_k; k <= to_k; ++k) {
    timed(r, "quartic." + name + "." + field_tag(p, k) + ".at_most_28", "28 bitangent lines", "true", [&] {
      const auto c = quartic::count_bitangents(x, k);
      counts[field_tag(p, k)] = {{"bitangents", c.count}, {"hyperflexes", c.hyperflexes}};
      last = c.count;
      smooth = smooth && !c.singular;
      return bool_string(c.count <= 28);
    });
  }
  r.add("quartic." + name + ".smooth", "a smooth plane quartic", "true", bool_string(smooth));
  if (expect_full)
    r.add("quartic." + name + ".all_28_at_" + field_tag(p, to_k), "28 bitangent lines", "28", std::to_string(last));
  r.samples["quartic." + name] = std::move(counts);
}

void quartic_checks(VerificationReport& r, const SuiteOptions& opt) {
  timed(r, "quartic.odd_theta_count", "odd theta-characteristics of a genus-3 curve against its 28 bitangent lines", "28",
        [] { return std::to_string(theta::count_parities(3).odd); });

  if (opt.curve) {
    const auto f = curve_over_prime(opt);
    const quartic::PlaneQuartic<FiniteField> x(f);
    const std::uint32_t k = opt.ext.value_or(1);
    bitangent_checks(r, "curve", x, k, k, false);
  } else if (opt.prime || opt.ext) {
    const std::uint32_t p = opt.prime.value_or(7), k = opt.ext.value_or(1);
    bitangent_checks(r, "fermat", quartic::PlaneQuartic<FiniteField>(fermat(p, 3, 4)), k, k, false);
    const FiniteField fk(p, k);
    if (fk.order() >= 7) fiber_check(r, fk, opt.seed);
    return;
  } else {
    for (const auto& b : quartic::builtin_quartics()) bitangent_checks(r, b.name, b.curve, 1, b.full_extension, true);
  }
  for (const std::uint32_t q : {7u, 11u, 13u, 17u}) fiber_check(r, FiniteField(q, 1), opt.seed);
}

VerificationReport fresh(const SuiteOptions& opt) {
  VerificationReport r;
  r.seed = opt.seed;
  r.toolchain = toolchain_string();
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"classes", "fano", "theta", "cubic", "quartic", "all"};
  return names;
}

void validate_options(const std::string& suite, const SuiteOptions& opt) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown suite '" + suite + "'");
  if (opt.genus && (*opt.genus < 1 || *opt.genus > 4)) throw UsageError("--genus must be between 1 and 4");
  if (opt.samples == 0) throw UsageError("--samples must be positive");
  if (opt.prime) {
    if (*opt.prime < 5) throw UsageError("--prime must be at least 5");
    try {
      GaloisField::get(*opt.prime, 1);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  if (opt.ext && *opt.ext == 0) throw UsageError("--ext must be positive");
  if (opt.prime || opt.ext) {
    try {
      GaloisField::get(opt.prime.value_or(5), opt.ext.value_or(1));
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
}

VerificationReport run_classes(const SuiteOptions& opt) {
  auto r = fresh(opt);
  classes_checks(r);
  r.normalize();
  return r;
}

VerificationReport run_fano(const SuiteOptions& opt) {
  auto r = fresh(opt);
  fano_checks(r);
  r.normalize();
  return r;
}

VerificationReport run_theta(const SuiteOptions& opt) {
  auto r = fresh(opt);
  if (opt.genus) {
    theta_checks(r, *opt.genus);
  } else {
    for (int g = 1; g <= 4; ++g) theta_checks(r, g);
  }
  r.normalize();
  return r;
}

VerificationReport run_cubic(const SuiteOptions& opt) {
  auto r = fresh(opt);
  cubic_family_checks(r, opt);
  if (opt.curve) {
    cubic_curve_checks(r, opt);
  } else {
    cubic_line_type_checks(r, opt);
    cubic_surface_checks(r, opt);
  }
  r.normalize();
  return r;
}

VerificationReport run_quartic(const SuiteOptions& opt) {
  auto r = fresh(opt);
  quartic_checks(r, opt);
  r.normalize();
  return r;
}

VerificationReport run_suite(const std::string& suite, const SuiteOptions& opt) {
  validate_options(suite, opt);
  if (suite == "classes") return run_classes(opt);
  if (suite == "fano") return run_fano(opt);
  if (suite == "theta") return run_theta(opt);
  if (suite == "cubic") return run_cubic(opt);
  if (suite == "quartic") return run_quartic(opt);
  auto r = fresh(opt);
  // Options that only make sense for one suite are not forwarded to the others.
  SuiteOptions plain;
  plain.seed = opt.seed;
  plain.samples = opt.samples;
  r.merge(run_classes(plain));
  r.merge(run_fano(plain));
  plain.genus = opt.genus;
  r.merge(run_theta(plain));
  plain.genus.reset();
  plain.prime = opt.prime;
  plain.ext = opt.ext;
  // A --curve goes to the suite matching its degree.
  int curve_degree = 0;
  if (opt.curve) {
    const NamedForm nf = load_form(*opt.curve);
    curve_degree = nf.is_rational() ? nf.rational().degree() : nf.finite().degree();
    if (curve_degree != 3 && curve_degree != 4) throw UsageError("--curve must be a cubic or a quartic form");
  }
  if (curve_degree == 3) plain.curve = opt.curve;
  r.merge(run_cubic(plain));
  plain.curve.reset();
  if (curve_degree == 4) plain.curve = opt.curve;
  r.merge(run_quartic(plain));
  r.normalize();
  return r;
}

}  // namespace prym
