#include "prym/quartic_fiber.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "prym/parallel.hpp"
#include "prym/projective_points.hpp"

namespace prym::quartic {

namespace {

// Two points spanning the line {a . x = 0}, a normalized with leading 1.
Matrix<FiniteField> line_points(const FiniteField& k, const std::uint32_t* a) {
  const Fq a0{a[0], k.gf}, a1{a[1], k.gf}, a2{a[2], k.gf};
  if (a[0] != 0) return Matrix<FiniteField>::from_rows(k, {{-a1, k.one(), k.zero()}, {-a2, k.zero(), k.one()}});
  if (a[1] != 0) return Matrix<FiniteField>::from_rows(k, {{k.one(), k.zero(), k.zero()}, {k.zero(), -a2, k.one()}});
  return Matrix<FiniteField>::from_rows(k, {{k.one(), k.zero(), k.zero()}, {k.zero(), k.one(), k.zero()}});
}

std::vector<std::array<std::uint32_t, 3>> all_lines(const GaloisField& gf) {
  std::vector<std::array<std::uint32_t, 3>> out;
  for_each_projective_point(gf, 3, [&](const std::uint32_t* a) {
    out.push_back({a[0], a[1], a[2]});
    return true;
  });
  return out;
}

// Binary quartic sections on raw codes: coefficient j multiplies s^{4-j} t^j.
struct RawSection {
  const GaloisField& gf;
  std::vector<std::uint32_t> coef;
  std::vector<std::array<int, 3>> exps;

  RawSection(const HomogeneousForm<FiniteField>& f) : gf(*f.field().gf) {
    for (const auto& [e, c] : f.terms()) {
      coef.push_back(c.v);
      exps.push_back({e[0], e[1], e[2]});
    }
  }

  std::array<std::uint32_t, 5> operator()(const std::uint32_t* p, const std::uint32_t* w) const {
    // pw[i][d] = (p_i s + w_i t)^d
    std::array<std::array<std::array<std::uint32_t, 5>, 5>, 3> pw{};
    for (int i = 0; i < 3; ++i) {
      pw[i][0] = {1, 0, 0, 0, 0};
      for (int d = 1; d <= 4; ++d)
        for (int j = 0; j <= d; ++j) {
          std::uint32_t v = j < d ? gf.mul(pw[i][d - 1][j], p[i]) : 0;
          if (j > 0) v = gf.add(v, gf.mul(pw[i][d - 1][j - 1], w[i]));
          pw[i][d][j] = v;
        }
    }
    std::array<std::uint32_t, 5> out{};
    for (std::size_t t = 0; t < coef.size(); ++t) {
      const auto& e = exps[t];
      std::array<std::uint32_t, 5> acc{};
      for (int a = 0; a <= e[0]; ++a) {
        if (!pw[0][e[0]][a]) continue;
        for (int b = 0; b <= e[1]; ++b) {
          const std::uint32_t ab = gf.mul(pw[0][e[0]][a], pw[1][e[1]][b]);
          if (!ab) continue;
          for (int c = 0; c <= e[2]; ++c) acc[a + b + c] = gf.add(acc[a + b + c], gf.mul(ab, pw[2][e[2]][c]));
        }
      }
      for (int j = 0; j < 5; ++j) out[j] = gf.add(out[j], gf.mul(coef[t], acc[j]));
    }
    return out;
  }
};

// Whether a nonzero binary quartic is a constant times a square, and
// whether it is a fourth power. Characteristic p >= 5.
BitangentVerdict square_test(const GaloisField& gf, const std::array<std::uint32_t, 5>& c) {
  BitangentVerdict v;
  auto div = [&](std::uint32_t a, std::uint32_t b) { return gf.mul(a, gf.inv(b)); };
  const std::uint32_t two = gf.from_int(2), four = gf.from_int(4);
  if (c[0] != 0) {
    // c / c0 = (s^2 + beta s t + gamma t^2)^2
    const std::uint32_t b3 = div(c[1], c[0]), b2 = div(c[2], c[0]), b1 = div(c[3], c[0]), b0 = div(c[4], c[0]);
    const std::uint32_t beta = div(b3, two);
    const std::uint32_t gamma = div(gf.sub(b2, gf.mul(beta, beta)), two);
    if (gf.mul(two, gf.mul(beta, gamma)) != b1 || gf.mul(gamma, gamma) != b0) return v;
    v.bitangent = true;
    v.hyperflex = gf.mul(beta, beta) == gf.mul(four, gamma);
    return v;
  }
  // (1 : 0) is a root: need t^2 | c, then the cofactor a square.
  if (c[1] != 0) return v;
  if (c[2] != 0) {
    v.bitangent = gf.mul(c[3], c[3]) == gf.mul(four, gf.mul(c[2], c[4]));
    return v;
  }
  v.bitangent = v.hyperflex = c[3] == 0;
  return v;
}

}  // namespace

BitangentVerdict bitangent_test_fast(const HomogeneousForm<FiniteField>& section) {
  if (section.num_vars() != 2 || section.degree() != 4) throw ShapeError("expected a binary quartic");
  if (section.is_zero()) throw DegenerateInputError("zero section");
  std::array<std::uint32_t, 5> c{};
  for (const auto& [e, v] : section.terms()) c[e[1]] = v.v;
  return square_test(*section.field().gf, c);
}

BitangentCount count_bitangents(const PlaneQuartic<FiniteField>& x, std::uint32_t ext) {
  const GaloisField& base = *x.field().gf;
  if (base.degree() != 1) throw DomainError("count_bitangents expects coefficients in a prime field");
  if (base.characteristic() < 5) throw DomainError("bitangent counts need p >= 5");
  const FiniteField k(base.characteristic(), ext);
  const auto f = x.form().map_coefficients(k, [&](const Fq& c) { return Fq{c.v, k.gf}; });

  BitangentCount out;
  out.field_order = k.order();
  out.singular = find_singular_point(f).has_value();

  const auto lines = all_lines(*k.gf);
  const int workers = worker_count();
  const std::size_t chunks = static_cast<std::size_t>(workers) * 4;
  std::vector<std::vector<std::pair<std::size_t, bool>>> hits(chunks);
  const RawSection raw(f);
  parallel_chunks(lines.size(), workers, chunks, [&](std::size_t b, std::size_t e, std::size_t ci) {
    for (std::size_t i = b; i < e; ++i) {
      const auto pts = line_points(k, lines[i].data());
      const std::uint32_t p[3] = {pts(0, 0).v, pts(0, 1).v, pts(0, 2).v};
      const std::uint32_t w[3] = {pts(1, 0).v, pts(1, 1).v, pts(1, 2).v};
      const auto c = raw(p, w);
      if (std::all_of(c.begin(), c.end(), [](std::uint32_t x) { return x == 0; })) continue;
      const auto v = square_test(*k.gf, c);
      if (v.bitangent) hits[ci].emplace_back(i, v.hyperflex);
    }
  });
  for (const auto& h : hits)
    for (const auto& [i, flex] : h) {
      ++out.count;
      if (flex) ++out.hyperflexes;
      out.lines.emplace_back(line_points(k, lines[i].data()));
    }
  return out;
}

MarkedConic MarkedConic::from_parameters(const FiniteField& k, const std::vector<std::pair<Fq, Fq>>& params) {
  MarkedConic m;
  m.conic = HomogeneousForm<FiniteField>(k, 3, 2);
  m.conic.add_term({0, 2, 0}, k.one());
  m.conic.add_term({1, 0, 1}, -k.one());
  for (const auto& [s, t] : params) m.marked.push_back({s * s, s * t, t * t});
  validate(m);
  return m;
}

MarkedConic MarkedConic::random(const FiniteField& k, std::uint64_t seed) {
  std::vector<std::pair<Fq, Fq>> params;
  for (std::uint32_t a = 0; a < k.order(); ++a) params.emplace_back(k.element(a), k.one());
  params.emplace_back(k.one(), k.zero());
  if (params.size() < 6) throw DomainError("the conic has fewer than six rational points");
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < 6; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (params.size() - i));
    std::swap(params[i], params[j]);
  }
  params.resize(6);
  return from_parameters(k, params);
}

void validate(const MarkedConic& m) {
  const FiniteField& k = m.conic.field();
  if (m.conic.num_vars() != 3 || m.conic.degree() != 2) throw ShapeError("marked conic needs a ternary quadratic form");
  if (m.marked.size() != 6) throw ShapeError("a marked conic carries exactly six points");
  for (const auto& p : m.marked) {
    if (p.size() != 3) throw ShapeError("marked points need three coordinates");
    if (!FiniteField::is_zero(m.conic.evaluate(p))) throw DomainError("marked point is not on the conic");
  }
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if (Matrix<FiniteField>::from_rows(k, {m.marked[i], m.marked[j]}).rank() < 2)
        throw DomainError("marked points must be distinct");
}

FiberCounts genus3_fiber_counts(const MarkedConic& m) {
  validate(m);
  const FiniteField& k = m.conic.field();
  const std::uint64_t q = k.order();
  if (k.characteristic() == 2) throw DomainError("conic tangency test needs odd characteristic");
  if (q < 7) throw DomainError("fiber count needs q >= 7");
  if (find_singular_point(m.conic)) throw DomainError("the conic is singular");

  FiberCounts out;
  for (const auto& a : all_lines(*k.gf)) {
    bool through = false;
    for (const auto& p : m.marked) {
      Fq d = k.zero();
      for (int i = 0; i < 3; ++i) d += Fq{a[i], k.gf} * p[i];
      if (FiniteField::is_zero(d)) through = true;
    }
    if (through) continue;
    const auto g = restrict_to_line(m.conic, line_points(k, a.data()));
    const Fq disc = g.coefficient({1, 1}) * g.coefficient({1, 1}) - k.from_int(4) * g.coefficient({2, 0}) * g.coefficient({0, 2});
    if (FiniteField::is_zero(disc)) continue;
    ++out.direct;
  }
  out.formula = (q - 5) * (q - 6) / 2 + (q * q - q) / 2;
  out.match = out.direct == out.formula;
  return out;
}

std::vector<BuiltinQuartic> builtin_quartics() {
  std::vector<BuiltinQuartic> out;
  auto make = [&](const std::string& name, std::uint32_t p, std::uint32_t ext,
                  const std::vector<std::pair<Exponent, long long>>& terms) {
    const FiniteField k(p, 1);
    HomogeneousForm<FiniteField> f(k, 3, 4);
    for (const auto& [e, c] : terms) f.add_term(e, k.from_int(c));
    out.push_back({name, p, ext, PlaneQuartic<FiniteField>(f)});
  };
  make("fermat", 7, 2, {{{4, 0, 0}, 1}, {{0, 4, 0}, 1}, {{0, 0, 4}, 1}});
  make("klein", 11, 3, {{{3, 1, 0}, 1}, {{0, 3, 1}, 1}, {{1, 0, 3}, 1}});
  make("fermat-x2y2", 5, 4, {{{4, 0, 0}, 1}, {{0, 4, 0}, 1}, {{0, 0, 4}, 1}, {{2, 2, 0}, 1}});
  return out;
}

}  // namespace prym::quartic
