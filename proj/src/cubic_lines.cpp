#include "prym/cubic_lines.hpp"

#include <algorithm>
#include <random>

#include "prym/dual.hpp"
#include "prym/parallel.hpp"
#include "prym/projective_points.hpp"

namespace prym::cubic {

namespace {

using QMatrix = Matrix<RationalField>;
using QSpace = LinearSubspace<RationalField>;

std::vector<Rational> unit(std::size_t n, std::size_t i) {
  std::vector<Rational> e(n, 0);
  e[i] = 1;
  return e;
}

// Rows: the conditions "coefficient of m in f|plane vanishes" for every
// plane monomial m other than `allowed`, as functionals on the coefficient
// vector of a cubic in the `source` monomial basis.
void append_plane_conditions(QMatrix& rows, const std::vector<Exponent>& source, const QSpace& plane,
                             const Exponent& allowed) {
  RationalField q;
  const auto targets = monomials(3, 3);
  std::vector<HomogeneousForm<RationalField>> restricted;
  for (const auto& e : source) restricted.push_back(restrict_to(HomogeneousForm<RationalField>::monomial(q, e, 1), plane.basis()));
  for (const auto& t : targets) {
    if (t == allowed) continue;
    std::vector<Rational> row(source.size(), 0);
    bool any = false;
    for (std::size_t j = 0; j < source.size(); ++j) {
      row[j] = restricted[j].coefficient(t);
      any = any || row[j] != 0;
    }
    if (any) rows.append_row(row);
  }
}

}  // namespace

std::size_t stabilizer_dimension(const std::vector<QSpace>& subspaces) {
  RationalField q;
  QMatrix sys(q, 0, 25);
  for (const auto& s : subspaces) {
    if (s.ambient_dim() != 5) throw ShapeError("stabilizer conditions live in K^5");
    const QMatrix eq = s.equations();
    for (std::size_t h = 0; h < eq.rows(); ++h)
      for (std::size_t b = 0; b < s.dim(); ++b) {
        std::vector<Rational> row(25, 0);
        for (std::size_t i = 0; i < 5; ++i)
          for (std::size_t j = 0; j < 5; ++j) row[5 * i + j] = eq(h, i) * s.basis()(b, j);
        sys.append_row(row);
      }
  }
  return 25 - sys.rank();
}

FamilyDimensionCounts family_dimension_counts() {
  RationalField q;
  const StandardConfiguration<RationalField> cfg(q);
  const auto all = monomials(5, 3);
  QMatrix conds(q, 0, all.size());
  // Plane coordinates follow the echelon basis: pi1 = (y, u, v), pi2 = (z, u, v).
  append_plane_conditions(conds, all, cfg.pi1, {1, 0, 2});
  append_plane_conditions(conds, all, cfg.pi2, {1, 2, 0});
  const auto kernel = conds.kernel_basis();

  FamilyDimensionCounts out;
  out.family_linear = kernel.size();
  out.family_projective = out.family_linear - 1;

  auto expected = family_exponents();
  std::sort(expected.begin(), expected.end());
  std::vector<Exponent> got;
  bool unit_vectors = true;
  for (const auto& v : kernel) {
    std::size_t nz = 0, at = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) {
        ++nz;
        at = j;
      }
    if (nz != 1) unit_vectors = false;
    got.push_back(all[at]);
  }
  std::sort(got.begin(), got.end());
  out.monomials_match = unit_vectors && got == expected;

  out.stabilizer_linear = stabilizer_dimension({cfg.l, cfg.r1, cfg.r2});
  out.stabilizer_projective = out.stabilizer_linear - 1;
  return out;
}

std::vector<std::vector<Rational>> sample_generic_lambdas(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  auto draw = [&] {
    const long num = static_cast<long>(rng() % 41) - 20;
    const long den = static_cast<long>(rng() % 6) + 1;
    Rational r(num, den);
    r.canonicalize();
    return r;
  };
  std::vector<std::vector<Rational>> out;
  while (out.size() < count) {
    std::vector<Rational> lam(21);
    for (auto& x : lam) x = draw();
    if (lam[13] == 0 || lam[19] == 0 || lam[20] == 0) continue;
    if (lam[7] * lam[20] - lam[12] * lam[17] == 0) continue;
    out.push_back(std::move(lam));
  }
  return out;
}

namespace {

std::vector<Rational> meet_point(const QSpace& a, const QSpace& b) {
  QMatrix eq = a.equations();
  const QMatrix eb = b.equations();
  for (std::size_t i = 0; i < eb.rows(); ++i) eq.append_row(eb.row(i));
  const auto k = eq.kernel_basis();
  if (k.size() != 1) throw PreconditionError("the lines do not meet in a single point");
  return k.front();
}

std::vector<Rational> point_off(const QSpace& line, const QSpace& avoid) {
  for (std::size_t i = 0; i < line.dim(); ++i)
    if (!avoid.contains(line.basis().row(i))) return line.basis().row_vector(i);
  throw PreconditionError("the lines coincide");
}

struct BranchFrame {
  std::array<std::size_t, 3> b;  // plane points B0, B1, B2 (coordinate axes)
  std::array<std::size_t, 2> d;  // deformation directions
};

constexpr std::size_t kUnknowns = 11;  // p1..p6, m1, m2, n1, n2, c

std::array<std::vector<Dual>, 3> deformed_plane(const BranchFrame& fr, const std::vector<Dual>& x) {
  std::array<std::vector<Dual>, 3> p;
  for (std::size_t k = 0; k < 3; ++k) {
    p[k].assign(5, Dual{});
    p[k][fr.b[k]] = Dual{1};
    p[k][fr.d[0]] = p[k][fr.d[0]] + x[2 * k];
    p[k][fr.d[1]] = p[k][fr.d[1]] + x[2 * k + 1];
  }
  return p;
}

// Coefficients of F|pi' - c (alpha - n1 beta - n2 gamma)(gamma - m1 alpha - m2 beta)^2.
std::vector<Dual> incidence_residual(const HomogeneousForm<DualField>& f, const BranchFrame& fr, const std::vector<Dual>& x) {
  DualField k;
  const auto p = deformed_plane(fr, x);
  Matrix<DualField> rows(k, 0, 5);
  for (const auto& r : p) rows.append_row(r);
  const auto restricted = restrict_to(f, rows);
  const Dual one{1};
  const std::vector<Dual> lin1 = {one, -x[8], -x[9]};
  const std::vector<Dual> lin2 = {-x[6], -x[7], one};
  const auto l1 = HomogeneousForm<DualField>::linear(k, lin1);
  const auto l2 = HomogeneousForm<DualField>::linear(k, lin2);
  const auto residual = restricted - x[10] * (l1 * l2 * l2);
  std::vector<Dual> out;
  for (const auto& e : monomials(3, 3)) out.push_back(residual.coefficient(e));
  return out;
}

BranchDirection solve_branch(const HomogeneousForm<RationalField>& f, const BranchFrame& fr, const Rational& c0) {
  DualField dk;
  const auto fd = f.map_coefficients(dk, [](const Rational& r) { return Dual{r}; });
  std::vector<Dual> base(kUnknowns, Dual{});
  base[10] = Dual{c0};
  for (const auto& r : incidence_residual(fd, fr, base))
    if (r.a != 0) throw DerivationError("the standard plane section is not l + 2r");

  RationalField q;
  QMatrix jac(q, 10, kUnknowns);
  for (std::size_t j = 0; j < kUnknowns; ++j) {
    auto x = base;
    x[j].b = 1;
    const auto r = incidence_residual(fd, fr, x);
    for (std::size_t i = 0; i < 10; ++i) jac(i, j) = r[i].b;
  }
  const auto kernel = jac.kernel_basis();

  BranchDirection out;
  out.kernel_dim = kernel.size();
  if (kernel.size() != 1) return out;
  const auto& dir = kernel.front();

  std::vector<Dual> x(kUnknowns);
  for (std::size_t j = 0; j < kUnknowns; ++j) x[j] = Dual{base[j].a, dir[j]};
  const auto p = deformed_plane(fr, x);
  auto combo = [&](std::size_t i, const Dual& s, std::size_t j) {
    std::vector<Dual> v(5);
    for (std::size_t c = 0; c < 5; ++c) v[c] = p[i][c] + s * p[j][c];
    return v;
  };

  // Points of l' = {alpha = n1 beta + n2 gamma}; the one based at u = e3
  // gives (x', y', z'), the one based at v = e4 gives (x'', y'', z'').
  out.l_chart.assign(6, 0);
  for (const auto& pt : {combo(1, x[8], 0), combo(2, x[9], 0)}) {
    const std::size_t slot = pt[3].a != 0 ? 0 : 1;
    for (std::size_t c = 0; c < 3; ++c) out.l_chart[2 * c + slot] = pt[c].b;
  }
  out.plane.assign(dir.begin(), dir.begin() + 6);
  // Points of r' = {gamma = m1 alpha + m2 beta}, read along the B2 axis.
  out.c1 = combo(0, x[6], 2)[fr.b[2]].b;
  out.c2 = combo(1, x[7], 2)[fr.b[2]].b;
  return out;
}

bool proportional(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  RationalField q;
  auto nz = [](const std::vector<Rational>& w) {
    return std::any_of(w.begin(), w.end(), [](const Rational& r) { return r != 0; });
  };
  return nz(a) && nz(b) && QMatrix::from_rows(q, {a, b}).rank() == 1;
}

}  // namespace

GammaNodeResult gamma_node_check(const CubicThreefold<RationalField>& v, const QSpace& l, const QSpace& r1, const QSpace& r2) {
  RationalField q;
  for (const auto* s : {&l, &r1, &r2}) {
    require_rank(*s, 2, "line");
    if (s->ambient_dim() != 5) throw ShapeError("lines must live in P^4");
  }
  const auto p1 = meet_point(l, r1);
  const auto p2 = meet_point(l, r2);
  const auto q1 = point_off(r1, l);
  const auto q2 = point_off(r2, l);
  std::vector<std::vector<Rational>> cols;
  for (std::size_t i = 0; i < 5; ++i) {
    auto trial = QMatrix::from_rows(q, {unit(5, i), q1, q2, p1, p2});
    if (trial.rank() == 5) {
      cols = {unit(5, i), q1, q2, p1, p2};
      break;
    }
  }
  if (cols.empty()) throw PreconditionError("the three lines do not span P^4 in the expected configuration");
  const QMatrix change = QMatrix::from_rows(q, cols).transpose();
  const auto f = substitute_linear(v.form(), change);

  const auto ex = family_exponents();
  GammaNodeResult out;
  out.lambda.assign(21, 0);
  std::size_t seen = 0;
  for (std::size_t i = 0; i < ex.size(); ++i) {
    out.lambda[i] = f.coefficient(ex[i]);
    if (out.lambda[i] != 0) ++seen;
  }
  if (seen != f.terms().size()) throw PreconditionError("the cubic is not of the expected shape along l, r1, r2");
  const auto& lam = out.lambda;
  if (lam[19] == 0 || lam[20] == 0) throw PreconditionError("a residual plane lies in the cubic (l19 l20 = 0)");
  const Rational dd = lam[7] * lam[20] - lam[12] * lam[17];
  const Rational ee = lam[12] * lam[15] - lam[5] * lam[20];
  if (dd == 0 && ee == 0) throw PreconditionError("both tangent-line coefficients vanish");

  // r1 branch: plane (y, u, v) moved along (x, z). r2 branch: plane (z, v, u) moved along (x, y).
  out.branch1 = solve_branch(f, {{1, 3, 4}, {0, 2}}, lam[19]);
  out.branch2 = solve_branch(f, {{2, 4, 3}, {0, 1}}, lam[20]);
  const auto& b1 = out.branch1;
  const auto& b2 = out.branch2;
  const bool both = b1.kernel_dim == 1 && b2.kernel_dim == 1;
  if (!both) return out;

  auto nonzero = [](const std::vector<Rational>& w) {
    return std::any_of(w.begin(), w.end(), [](const Rational& r) { return r != 0; });
  };
  out.branch1_on_x1_zero = nonzero(b1.l_chart) && b1.l_chart[0] == 0;
  out.branch2_on_x2_zero = nonzero(b2.l_chart) && b2.l_chart[1] == 0;

  const auto chart = LineChart<RationalField>::standard(coordinate_span(q, {3, 4}));
  const auto ts = fano_tangent_space(f, chart);
  out.in_tangent_space = nonzero(ts.system.apply(b1.l_chart)) == false && nonzero(ts.system.apply(b2.l_chart)) == false;
  out.independent = QMatrix::from_rows(q, {b1.l_chart, b2.l_chart}).rank() == 2;

  out.gamma_prime_tangent_checks = (b1.c1 != 0 || b1.c2 != 0) && dd * b1.c1 + ee * b1.c2 == 0;

  if (dd != 0) {
    const std::vector<Rational> want_plane = {0, 0, 0, 0, lam[19] * lam[20] / dd, -lam[12] * lam[19] / dd};
    const std::vector<Rational> want_l = {0,
                                         lam[19] * lam[20] / dd,
                                         -lam[13] * lam[20] / dd,
                                         -lam[14] * lam[20] / dd,
                                         0,
                                         -lam[12] * lam[19] / dd};
    out.plane_deformation_checks = proportional(b1.plane, want_plane);
    out.l_deformation_checks = proportional(b1.l_chart, want_l);
    if (out.l_deformation_checks && b1.c2 != 0) {
      for (std::size_t i = 0; i < 6; ++i)
        if (want_l[i] != 0) {
          out.display_scale = b1.l_chart[i] / (want_l[i] * b1.c2);
          break;
        }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::uint32_t dot(const GaloisField& gf, const std::uint32_t* a, const std::uint32_t* b, int n) {
  std::uint32_t acc = 0;
  for (int i = 0; i < n; ++i) acc = gf.add(acc, gf.mul(a[i], b[i]));
  return acc;
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Echelon rows with a 1 at `pivot`, zeros at `zero_cols` and before the
// pivot, and free entries elsewhere; the i-th one for i < q^{#free}.
struct RowCell {
  int n;
  std::vector<int> free_cols;
  std::size_t pivot;

  void fill(std::uint64_t idx, std::uint32_t q, std::uint32_t* row) const {
    std::fill(row, row + n, 0u);
    row[pivot] = 1;
    for (int c : free_cols) {
      row[c] = static_cast<std::uint32_t>(idx % q);
      idx /= q;
    }
  }
};

}  // namespace

std::vector<LinearSubspace<FiniteField>> lines_on_cubic(const HomogeneousForm<FiniteField>& f) {
  const FiniteField k = f.field();
  const GaloisField& gf = *k.gf;
  const int n = f.num_vars();
  if (n < 2) throw ShapeError("lines need at least two homogeneous variables");
  const std::uint32_t q = gf.order();
  const RawForm eval(f);
  const RawGradient grad(f);
  const int workers = worker_count();

  std::vector<LinearSubspace<FiniteField>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      RowCell c1{n, {}, static_cast<std::size_t>(i)}, c2{n, {}, static_cast<std::size_t>(j)};
      for (int c = i + 1; c < n; ++c)
        if (c != j) c1.free_cols.push_back(c);
      for (int c = j + 1; c < n; ++c) c2.free_cols.push_back(c);

      // Points of each row cell on the hypersurface, with gradients.
      auto collect = [&](const RowCell& cell) {
        const std::uint64_t total = ipow(q, static_cast<int>(cell.free_cols.size()));
        const std::size_t chunks = static_cast<std::size_t>(std::max(1, workers)) * 4;
        std::vector<std::vector<std::uint32_t>> parts(chunks);
        parallel_chunks(total, workers, chunks, [&](std::size_t b, std::size_t e, std::size_t ci) {
          std::vector<std::uint32_t> row(n), g(n);
          for (std::size_t idx = b; idx < e; ++idx) {
            cell.fill(idx, q, row.data());
            if (eval(row.data()) != 0) continue;
            grad(row.data(), g.data());
            parts[ci].insert(parts[ci].end(), row.begin(), row.end());
            parts[ci].insert(parts[ci].end(), g.begin(), g.end());
          }
        });
        std::vector<std::uint32_t> flat;
        for (auto& p : parts) flat.insert(flat.end(), p.begin(), p.end());
        return flat;
      };
      const auto rows1 = collect(c1);
      const auto rows2 = collect(c2);
      const std::size_t stride = 2 * n;
      const std::size_t m1 = rows1.size() / stride, m2 = rows2.size() / stride;
      if (m1 == 0 || m2 == 0) continue;

      const std::size_t chunks = static_cast<std::size_t>(std::max(1, workers)) * 4;
      std::vector<std::vector<std::pair<std::size_t, std::size_t>>> hits(chunks);
      parallel_chunks(m1, workers, chunks, [&](std::size_t b, std::size_t e, std::size_t ci) {
        for (std::size_t a = b; a < e; ++a) {
          const std::uint32_t* pa = &rows1[a * stride];
          for (std::size_t bb = 0; bb < m2; ++bb) {
            const std::uint32_t* pb = &rows2[bb * stride];
            if (dot(gf, pa + n, pb, n) != 0) continue;
            if (dot(gf, pb + n, pa, n) != 0) continue;
            hits[ci].emplace_back(a, bb);
          }
        }
      });
      for (const auto& h : hits)
        for (const auto& [a, bb] : h) {
          Matrix<FiniteField> m(k, 2, n);
          for (int c = 0; c < n; ++c) {
            m(0, c) = Fq{rows1[a * stride + c], k.gf};
            m(1, c) = Fq{rows2[bb * stride + c], k.gf};
          }
          out.emplace_back(m);
        }
    }
  return out;
}

bool lines_meet(const LinearSubspace<FiniteField>& a, const LinearSubspace<FiniteField>& b) {
  return a.join(b).dim() <= 3;
}

LineCount count_lines_brute(const HomogeneousForm<FiniteField>& f) {
  if (f.num_vars() != 4 || f.degree() != 3) throw ShapeError("count_lines_brute expects a cubic form in 4 variables");
  const auto p = f.field().characteristic();
  if (p < 5) throw DomainError("line counts need p >= 5");
  LineCount out;
  out.lines = lines_on_cubic(f);
  out.count = out.lines.size();
  out.incidence.assign(out.count, 0);
  if (out.count <= 64) {
    for (std::size_t a = 0; a < out.count; ++a)
      for (std::size_t b = a + 1; b < out.count; ++b)
        if (lines_meet(out.lines[a], out.lines[b])) {
          ++out.incidence[a];
          ++out.incidence[b];
        }
  }
  out.non_smooth = out.count > 27;
  // Exhaustive singular-point search only where it stays cheap.
  if (!out.non_smooth && f.field().order() <= 128) out.non_smooth = find_singular_point(f).has_value();
  return out;
}

LineType line_type_by_planes(const HomogeneousForm<FiniteField>& f, const LinearSubspace<FiniteField>& l) {
  const FiniteField k = f.field();
  require_supported_characteristic(k);
  if (!contains_line(f, l)) throw DomainError("line is not contained in the cubic");
  const auto chart = LineChart<FiniteField>::standard(l);
  const std::uint32_t q = k.order();
  for (int lead = 0; lead < 3; ++lead) {
    const std::uint64_t total = ipow(q, 2 - lead);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<Fq> w(3, k.zero());
      w[lead] = k.one();
      std::uint64_t r = idx;
      for (int c = lead + 1; c < 3; ++c) {
        w[c] = k.element(static_cast<std::uint32_t>(r % q));
        r /= q;
      }
      Matrix<FiniteField> span = l.basis();
      std::vector<Fq> pt(5, k.zero());
      for (int t = 0; t < 3; ++t)
        for (int c = 0; c < 5; ++c) pt[c] += w[t] * chart.frame(t, c);
      span.append_row(pt);
      try {
        const auto res = residual_configuration(f, l, LinearSubspace<FiniteField>(span));
        if (res.kind == ResidualKind::DoubleBaseLine || res.kind == ResidualKind::TripleBaseLine) return LineType::SecondType;
      } catch (const DegenerateInputError&) {
        return LineType::SecondType;
      }
    }
  }
  return LineType::FirstType;
}

}  // namespace prym::cubic
