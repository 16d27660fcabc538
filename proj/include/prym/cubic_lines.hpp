#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prym/errors.hpp"
#include "prym/field.hpp"
#include "prym/homogeneous_form.hpp"
#include "prym/linear_subspace.hpp"
#include "prym/matrix.hpp"

namespace prym::cubic {

enum class LineType { FirstType, SecondType };

inline std::string to_string(LineType t) { return t == LineType::FirstType ? "first-type" : "second-type"; }

// Characteristic 2 and 3 break the conic and tangent-space arguments.
template <Field K>
void require_supported_characteristic(const K& k) {
  const auto c = k.characteristic();
  if (c == 2 || c == 3) throw DomainError("line geometry needs characteristic 0 or p >= 5, got " + std::to_string(c));
}

template <Field K>
class CubicThreefold {
 public:
  explicit CubicThreefold(HomogeneousForm<K> f) : form_(std::move(f)) {
    if (form_.num_vars() != 5 || form_.degree() != 3) throw ShapeError("a cubic threefold needs a degree-3 form in 5 variables");
    if (form_.is_zero()) throw DegenerateInputError("zero cubic form");
  }
  const HomogeneousForm<K>& form() const { return form_; }
  const K& field() const { return form_.field(); }

 private:
  HomogeneousForm<K> form_;
};

template <Field K>
void require_rank(const LinearSubspace<K>& s, std::size_t rank, const char* what) {
  if (s.dim() != rank) throw ShapeError(std::string(what) + " must have rank " + std::to_string(rank));
}

// f restricted to the span of the rows of `spanning`, in one variable per row.
template <Field K>
HomogeneousForm<K> restrict_to(const HomogeneousForm<K>& f, const Matrix<K>& spanning) {
  if (static_cast<int>(spanning.cols()) != f.num_vars()) throw ShapeError("subspace lives in a different ambient space");
  return substitute_linear(f, parametrization(spanning));
}

template <Field K>
bool contains_line(const HomogeneousForm<K>& f, const LinearSubspace<K>& l) {
  require_rank(l, 2, "line");
  return restrict_to(f, l.basis()).is_zero();
}

template <Field K>
bool contains_line(const CubicThreefold<K>& v, const LinearSubspace<K>& l) {
  return contains_line(v.form(), l);
}

template <Field K>
std::vector<std::size_t> pivot_columns(const Matrix<K>& rref) {
  std::vector<std::size_t> piv;
  for (std::size_t i = 0; i < rref.rows(); ++i)
    for (std::size_t j = 0; j < rref.cols(); ++j)
      if (!K::is_zero(rref(i, j))) {
        piv.push_back(j);
        break;
      }
  return piv;
}

// Frame adapted to a line: rows 0..2 are unit vectors at the non-pivot
// columns of the line's echelon basis (the transverse x, y, z directions),
// rows 3 and 4 are the echelon basis itself (the u and v points).
template <Field K>
struct LineChart {
  LinearSubspace<K> base_line;
  std::array<std::size_t, 3> transverse{};
  Matrix<K> frame;

  static LineChart standard(const LinearSubspace<K>& l) {
    require_rank(l, 2, "line");
    if (l.ambient_dim() != 5) throw ShapeError("line chart needs a line in P^4");
    const K& k = l.field();
    LineChart c{l, {}, Matrix<K>(k, 5, 5)};
    const auto piv = pivot_columns(l.basis());
    std::size_t t = 0;
    for (std::size_t j = 0; j < 5; ++j)
      if (j != piv[0] && j != piv[1]) c.transverse[t++] = j;
    for (std::size_t i = 0; i < 3; ++i) c.frame(i, c.transverse[i]) = k.one();
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 5; ++j) c.frame(3 + i, j) = l.basis()(i, j);
    return c;
  }

  // The form in frame coordinates (x, y, z, u, v).
  HomogeneousForm<K> normalize(const HomogeneousForm<K>& f) const { return substitute_linear(f, frame.transpose()); }

  // Ambient vector of the point with the given frame coordinates.
  std::vector<typename K::Scalar> point(std::span<const typename K::Scalar> coords) const {
    return frame.transpose().apply(coords);
  }
};

// Row i holds the binary quadratic [u^2, uv, v^2] multiplying the i-th
// transverse coordinate in the part of f linear in x, y, z.
template <Field K>
Matrix<K> transverse_quadratics(const HomogeneousForm<K>& f, const LineChart<K>& chart) {
  const HomogeneousForm<K> g = chart.normalize(f);
  const K& k = f.field();
  Matrix<K> t(k, 3, 3);
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < 3; ++a) {
      Exponent e(5, 0);
      e[i] = 1;
      e[3] = 2 - a;
      e[4] = a;
      t(i, a) = g.coefficient(e);
    }
  return t;
}

template <Field K>
struct TangentSystem {
  Matrix<K> system;                                   // 4 x 6, rows u^3, u^2v, uv^2, v^3
  std::vector<std::vector<typename K::Scalar>> kernel;  // basis, columns (x', x'', y', y'', z', z'')
  std::size_t rank = 0;
};

// First-order condition for the line through [x':y':z':1:0] and
// [x'':y'':z'':0:1] (frame coordinates) to stay on f.
template <Field K>
TangentSystem<K> fano_tangent_space(const HomogeneousForm<K>& f, const LineChart<K>& chart) {
  if (!contains_line(f, chart.base_line)) throw DomainError("tangent space requested at a line not on the cubic");
  const K& k = f.field();
  const Matrix<K> t = transverse_quadratics(f, chart);
  Matrix<K> sys(k, 4, 6);
  for (int i = 0; i < 3; ++i) {
    const std::size_t c1 = 2 * i, c2 = 2 * i + 1;
    sys(0, c1) += t(i, 0);
    sys(1, c1) += t(i, 1);
    sys(1, c2) += t(i, 0);
    sys(2, c1) += t(i, 2);
    sys(2, c2) += t(i, 1);
    sys(3, c2) += t(i, 2);
  }
  TangentSystem<K> out{sys, sys.kernel_basis(), sys.rank()};
  return out;
}

template <Field K>
TangentSystem<K> fano_tangent_space(const CubicThreefold<K>& v, const LineChart<K>& chart) {
  return fano_tangent_space(v.form(), chart);
}

// Second type iff the three transverse quadratics are linearly dependent.
template <Field K>
LineType line_type(const HomogeneousForm<K>& f, const LinearSubspace<K>& l) {
  require_supported_characteristic(f.field());
  if (!contains_line(f, l)) throw DomainError("line is not contained in the cubic");
  const auto chart = LineChart<K>::standard(l);
  return K::is_zero(transverse_quadratics(f, chart).determinant()) ? LineType::SecondType : LineType::FirstType;
}

template <Field K>
LineType line_type(const CubicThreefold<K>& v, const LinearSubspace<K>& l) {
  return line_type(v.form(), l);
}

enum class ResidualKind { SmoothConic, LinePair, DoubledLine, DoubleBaseLine, TripleBaseLine };

inline std::string to_string(ResidualKind k) {
  switch (k) {
    case ResidualKind::SmoothConic: return "l+conic";
    case ResidualKind::LinePair: return "l+r+r'";
    case ResidualKind::DoubledLine: return "l+2r";
    case ResidualKind::DoubleBaseLine: return "2l+r";
    case ResidualKind::TripleBaseLine: return "3l";
  }
  return "?";
}

template <Field K>
struct ResidualConfiguration {
  ResidualKind kind = ResidualKind::SmoothConic;
  std::optional<LinearSubspace<K>> r;
  std::optional<LinearSubspace<K>> r_prime;
  // For a line pair: discriminant of the pair restricted to an auxiliary
  // line; the two lines are rational iff it is a square.
  std::optional<typename K::Scalar> discriminant;
};

namespace detail {

template <Field K>
LinearSubspace<K> plane_line_to_ambient(const Matrix<K>& plane_basis, const std::vector<typename K::Scalar>& eq) {
  Matrix<K> e(plane_basis.field(), 1, 3);
  for (int j = 0; j < 3; ++j) e(0, j) = eq[j];
  Matrix<K> pts(plane_basis.field(), 0, 3);
  for (const auto& v : e.kernel_basis()) pts.append_row(v);
  return LinearSubspace<K>(pts * plane_basis);
}

template <Field K>
LinearSubspace<K> plane_points_to_ambient(const Matrix<K>& plane_basis,
                                          const std::vector<std::vector<typename K::Scalar>>& pts) {
  Matrix<K> m(plane_basis.field(), 0, 3);
  for (const auto& p : pts) m.append_row(p);
  return LinearSubspace<K>(m * plane_basis);
}

}  // namespace detail

// Plane section of the cubic through a contained line l, minus l.
template <Field K>
ResidualConfiguration<K> residual_configuration(const HomogeneousForm<K>& f, const LinearSubspace<K>& l,
                                                const LinearSubspace<K>& plane) {
  using S = typename K::Scalar;
  const K& k = f.field();
  require_supported_characteristic(k);
  require_rank(l, 2, "line");
  require_rank(plane, 3, "plane");
  if (!plane.contains(l)) throw DomainError("line does not lie in the plane");
  if (!contains_line(f, l)) throw DomainError("line is not contained in the cubic");

  // Plane coordinates (s, t, w): the first two basis points span l.
  Matrix<K> basis = l.basis();
  for (std::size_t i = 0; i < plane.dim() && basis.rows() < 3; ++i) {
    Matrix<K> trial = basis;
    trial.append_row(plane.basis().row(i));
    if (trial.rank() == 3) basis = trial;
  }
  const HomogeneousForm<K> c = restrict_to(f, basis);
  if (c.is_zero()) throw DegenerateInputError("plane is contained in the cubic");

  // Every term carries w since l = {w = 0} lies on the cubic.
  HomogeneousForm<K> q(k, 3, 2);
  for (const auto& [e, coef] : c.terms()) {
    Exponent d = e;
    --d[2];
    q.add_term(d, coef);
  }

  ResidualConfiguration<K> out;
  bool divisible = true;
  for (const auto& [e, coef] : q.terms())
    if (e[2] == 0) divisible = false;
  if (divisible) {
    std::vector<S> m(3, k.zero());
    for (const auto& [e, coef] : q.terms()) {
      Exponent d = e;
      --d[2];
      for (int j = 0; j < 3; ++j)
        if (d[j]) m[j] = coef;
    }
    if (K::is_zero(m[0]) && K::is_zero(m[1])) {
      out.kind = ResidualKind::TripleBaseLine;
    } else {
      out.kind = ResidualKind::DoubleBaseLine;
      out.r = detail::plane_line_to_ambient(basis, m);
    }
    return out;
  }

  const S half = k.inv(k.from_int(2));
  Matrix<K> a(k, 3, 3);
  for (const auto& [e, coef] : q.terms()) {
    std::vector<int> idx;
    for (int j = 0; j < 3; ++j)
      for (int r = 0; r < e[j]; ++r) idx.push_back(j);
    if (idx[0] == idx[1]) {
      a(idx[0], idx[0]) = coef;
    } else {
      a(idx[0], idx[1]) = coef * half;
      a(idx[1], idx[0]) = coef * half;
    }
  }
  const std::size_t rank = a.rank();
  if (rank == 3) {
    out.kind = ResidualKind::SmoothConic;
    return out;
  }
  if (rank == 1) {
    out.kind = ResidualKind::DoubledLine;
    for (std::size_t i = 0; i < 3; ++i) {
      auto row = a.row_vector(i);
      bool nz = false;
      for (const auto& x : row) nz = nz || !K::is_zero(x);
      if (nz) {
        out.r = detail::plane_line_to_ambient(basis, row);
        break;
      }
    }
    return out;
  }

  out.kind = ResidualKind::LinePair;
  const auto sing = a.kernel_basis().front();
  std::vector<std::vector<S>> units;
  for (int j = 0; j < 3; ++j) {
    std::vector<S> e(3, k.zero());
    e[j] = k.one();
    units.push_back(e);
  }
  std::vector<S> u1, u2;
  for (int i = 0; i < 3 && u1.empty(); ++i)
    for (int j = i + 1; j < 3 && u1.empty(); ++j) {
      Matrix<K> m = Matrix<K>::from_rows(k, {sing, units[i], units[j]});
      if (!K::is_zero(m.determinant())) {
        u1 = units[i];
        u2 = units[j];
      }
    }
  std::vector<S> sum(3);
  for (int j = 0; j < 3; ++j) sum[j] = u1[j] + u2[j];
  const S qa = q.evaluate(u1), qc = q.evaluate(u2);
  const S qb = q.evaluate(sum) - qa - qc;
  const S disc = qb * qb - k.from_int(4) * qa * qc;
  out.discriminant = disc;
  const auto root = square_root(k, disc);
  if (!root) return out;
  auto through = [&](const S& s, const S& t) {
    std::vector<S> p(3);
    for (int j = 0; j < 3; ++j) p[j] = s * u1[j] + t * u2[j];
    return detail::plane_points_to_ambient(basis, {sing, p});
  };
  if (!K::is_zero(qa)) {
    const S inv2a = k.inv(k.from_int(2) * qa);
    out.r = through((-qb + *root) * inv2a, k.one());
    out.r_prime = through((-qb - *root) * inv2a, k.one());
  } else {
    out.r = through(k.one(), k.zero());
    out.r_prime = through(-qc, qb);
  }
  return out;
}

template <Field K>
ResidualConfiguration<K> residual_configuration(const CubicThreefold<K>& v, const LinearSubspace<K>& l,
                                                const LinearSubspace<K>& plane) {
  return residual_configuration(v.form(), l, plane);
}

// ---------------------------------------------------------------------------
// The 21-coefficient family of cubics containing l, r1, r2 with
// V.pi_i = l + 2 r_i. Variables are (x, y, z, u, v) = indices 0..4.

inline std::vector<Exponent> family_exponents() {
  std::vector<Exponent> out;
  for (auto e : monomials(5, 2)) {
    ++e[0];
    out.push_back(e);
  }
  // y^2 z, y z^2, y z u, y z v, y v^2, z u^2
  out.push_back({0, 2, 1, 0, 0});
  out.push_back({0, 1, 2, 0, 0});
  out.push_back({0, 1, 1, 1, 0});
  out.push_back({0, 1, 1, 0, 1});
  out.push_back({0, 1, 0, 0, 2});
  out.push_back({0, 0, 1, 2, 0});
  return out;
}

template <Field K>
LinearSubspace<K> coordinate_span(const K& k, std::initializer_list<std::size_t> idx) {
  Matrix<K> m(k, 0, 5);
  for (auto i : idx) {
    std::vector<typename K::Scalar> e(5, k.zero());
    e[i] = k.one();
    m.append_row(e);
  }
  return LinearSubspace<K>(m);
}

template <Field K>
struct StandardConfiguration {
  LinearSubspace<K> l, r1, r2, pi1, pi2;

  explicit StandardConfiguration(const K& k)
      : l(coordinate_span(k, {3, 4})),
        r1(coordinate_span(k, {1, 3})),
        r2(coordinate_span(k, {2, 4})),
        pi1(coordinate_span(k, {1, 3, 4})),
        pi2(coordinate_span(k, {2, 3, 4})) {}
};

template <Field K>
HomogeneousForm<K> family_cubic(const K& k, const std::vector<typename K::Scalar>& lambda) {
  if (lambda.size() != 21) throw ShapeError("the family has 21 coefficients");
  const auto ex = family_exponents();
  HomogeneousForm<K> f(k, 5, 3);
  for (std::size_t i = 0; i < 21; ++i) f.add_term(ex[i], lambda[i]);
  return f;
}

template <Field K>
struct FamilyCubicResult {
  HomogeneousForm<K> form;
  bool pi1_contained = false;  // plane inside V: V is singular
  bool pi2_contained = false;
  bool pi1_verified = false;   // V.pi1 = l + 2 r1 confirmed
  bool pi2_verified = false;
};

// F = x Q + l15 y^2 z + l16 y z^2 + l17 y z u + l18 y z v + l19 y v^2 + l20 z u^2,
// with the residual plane sections checked.
template <Field K>
FamilyCubicResult<K> build_family_cubic(const K& k, const std::vector<typename K::Scalar>& q_coeffs,
                                        const std::vector<typename K::Scalar>& tail) {
  if (q_coeffs.size() != 15 || tail.size() != 6) throw ShapeError("family needs 15 quadric and 6 tail coefficients");
  std::vector<typename K::Scalar> lambda = q_coeffs;
  lambda.insert(lambda.end(), tail.begin(), tail.end());
  FamilyCubicResult<K> out{family_cubic(k, lambda)};
  const StandardConfiguration<K> cfg(k);
  auto check = [&](const LinearSubspace<K>& plane, const LinearSubspace<K>& r, bool& contained, bool& verified) {
    try {
      const auto res = residual_configuration(out.form, cfg.l, plane);
      verified = res.kind == ResidualKind::DoubledLine && res.r && *res.r == r;
    } catch (const DegenerateInputError&) {
      contained = true;
    }
  };
  check(cfg.pi1, cfg.r1, out.pi1_contained, out.pi1_verified);
  check(cfg.pi2, cfg.r2, out.pi2_contained, out.pi2_verified);
  return out;
}

// ---------------------------------------------------------------------------
// Rational-coefficient routines implemented out of line.

struct FamilyDimensionCounts {
  std::size_t family_linear = 0;
  std::size_t family_projective = 0;
  std::size_t stabilizer_linear = 0;
  std::size_t stabilizer_projective = 0;
  // Whether the kernel of the plane conditions is spanned by exactly the
  // named family monomials.
  bool monomials_match = false;
};

FamilyDimensionCounts family_dimension_counts();

// Dimension of {A in gl_5 : A S subset S for every S}.
std::size_t stabilizer_dimension(const std::vector<LinearSubspace<RationalField>>& subspaces);

// Deterministic generic coefficient vectors (21 entries each):
// l13 l19 l20 != 0 (so l is of first type) and l7 l20 - l12 l17 != 0.
std::vector<std::vector<Rational>> sample_generic_lambdas(std::uint64_t seed, std::size_t count);

struct BranchDirection {
  std::vector<Rational> l_chart;  // (x', x'', y', y'', z', z'')
  std::vector<Rational> plane;    // p1..p6 of the plane deformation
  Rational c1, c2;                // (c', c'') of the residual line when it is r1
  std::size_t kernel_dim = 0;
};

struct GammaNodeResult {
  BranchDirection branch1;  // through r1
  BranchDirection branch2;  // through r2
  bool branch1_on_x1_zero = false;   // x' = 0
  bool branch2_on_x2_zero = false;   // x'' = 0
  bool in_tangent_space = false;     // both directions solve the Murre system
  bool independent = false;
  bool gamma_prime_tangent_checks = false;
  bool plane_deformation_checks = false;
  bool l_deformation_checks = false;
  // Computed l-deformation divided by the closed-form one at equal c''.
  std::optional<Rational> display_scale;
  std::vector<Rational> lambda;  // coefficients in the standard frame
};

// Tangent directions at l of the curve of lines l' with V.pi' = l' + 2r'
// for r' near r1 and near r2. The three lines must be in the standard
// configuration up to a change of coordinates, which is applied first.
GammaNodeResult gamma_node_check(const CubicThreefold<RationalField>& v, const LinearSubspace<RationalField>& l,
                                 const LinearSubspace<RationalField>& r1, const LinearSubspace<RationalField>& r2);

// ---------------------------------------------------------------------------
// Finite-field enumeration.

// All F_q-rational lines on {f = 0} in P^{n-1}, as echelon subspaces, in a
// deterministic order.
std::vector<LinearSubspace<FiniteField>> lines_on_cubic(const HomogeneousForm<FiniteField>& f);

bool lines_meet(const LinearSubspace<FiniteField>& a, const LinearSubspace<FiniteField>& b);

struct LineCount {
  std::size_t count = 0;
  bool non_smooth = false;                // a singular point was found, or count > 27
  std::vector<std::size_t> incidence;     // per line: number of other lines meeting it
  std::vector<LinearSubspace<FiniteField>> lines;
};

// Lines on a cubic surface in P^3 over F_{p^k}; p >= 5.
LineCount count_lines_brute(const HomogeneousForm<FiniteField>& f);

// Second type iff some plane through l meets V in 2l + r or 3l (or lies in V).
LineType line_type_by_planes(const HomogeneousForm<FiniteField>& f, const LinearSubspace<FiniteField>& l);

}  // namespace prym::cubic
