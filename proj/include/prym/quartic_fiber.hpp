#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prym/errors.hpp"
#include "prym/factor_pattern.hpp"
#include "prym/field.hpp"
#include "prym/homogeneous_form.hpp"
#include "prym/linear_subspace.hpp"

namespace prym::quartic {

template <Field K>
class PlaneQuartic {
 public:
  explicit PlaneQuartic(HomogeneousForm<K> f) : form_(std::move(f)) {
    if (form_.num_vars() != 3 || form_.degree() != 4) throw ShapeError("a plane quartic needs a degree-4 form in 3 variables");
    if (form_.is_zero()) throw DegenerateInputError("zero quartic form");
  }
  const HomogeneousForm<K>& form() const { return form_; }
  const K& field() const { return form_.field(); }

 private:
  HomogeneousForm<K> form_;
};

template <Field K>
HomogeneousForm<K> restrict_to_line(const HomogeneousForm<K>& f, const Matrix<K>& rows) {
  if (rows.rows() != 2 || static_cast<int>(rows.cols()) != f.num_vars()) throw ShapeError("line must be given by two points");
  return substitute_linear(f, rows.transpose());
}

// Root multiplicities of the quartic along the line.
template <Field K>
MultiplicityPattern line_section_pattern(const PlaneQuartic<K>& x, const LinearSubspace<K>& l) {
  if (l.dim() != 2 || l.ambient_dim() != 3) throw ShapeError("line in P^2 must be a rank-2 subspace of K^3");
  const auto b = restrict_to_line(x.form(), l.basis());
  if (b.is_zero()) throw DegenerateInputError("line is a component of the quartic");
  return factor_pattern(b);
}

struct BitangentVerdict {
  bool bitangent = false;
  bool hyperflex = false;
};

inline BitangentVerdict classify_section(const MultiplicityPattern& p) {
  BitangentVerdict v;
  v.hyperflex = p.parts == std::vector<int>{4};
  v.bitangent = v.hyperflex || p.parts == std::vector<int>{2, 2};
  return v;
}

template <Field K>
BitangentVerdict is_bitangent(const PlaneQuartic<K>& x, const LinearSubspace<K>& l) {
  return classify_section(line_section_pattern(x, l));
}

// Closed-form version of classify_section for binary quartics over a finite
// field of characteristic >= 5: constant times a square.
BitangentVerdict bitangent_test_fast(const HomogeneousForm<FiniteField>& section);

struct BitangentCount {
  std::size_t count = 0;
  std::size_t hyperflexes = 0;
  bool singular = false;  // a singular point was found over the field
  std::uint32_t field_order = 0;
  std::vector<LinearSubspace<FiniteField>> lines;
};

// F_{p^k}-rational bitangents of a quartic with coefficients in F_p.
BitangentCount count_bitangents(const PlaneQuartic<FiniteField>& x, std::uint32_t ext);

template <Field K>
struct ResidualPair {
  Matrix<K> line;               // rows P, W parametrize the line as s P + t W
  HomogeneousForm<K> quadratic;  // residual divisor in (s, t)
  std::vector<std::vector<typename K::Scalar>> points;  // when it splits over K
};

namespace detail {

template <Field K>
bool proportional(const std::vector<typename K::Scalar>& a, const std::vector<typename K::Scalar>& b, const K& k) {
  return Matrix<K>::from_rows(k, {a, b}).rank() == 1;
}

// Roots (s : t) of a nonzero binary quadratic, with multiplicity, when
// they are rational over K.
template <Field K>
std::vector<std::pair<typename K::Scalar, typename K::Scalar>> binary_quadratic_roots(const HomogeneousForm<K>& g) {
  using S = typename K::Scalar;
  const K& k = g.field();
  const S a = g.coefficient({2, 0}), b = g.coefficient({1, 1}), c = g.coefficient({0, 2});
  std::vector<std::pair<S, S>> out;
  if (K::is_zero(a)) {
    // g = t (b s + c t)
    out.emplace_back(k.one(), k.zero());
    if (K::is_zero(b))
      out.emplace_back(k.one(), k.zero());
    else
      out.emplace_back(-c, b);
    return out;
  }
  const S disc = b * b - k.from_int(4) * a * c;
  const auto r = square_root(k, disc);
  if (!r) return out;
  const S inv2a = k.inv(k.from_int(2) * a);
  out.emplace_back((-b + *r) * inv2a, k.one());
  out.emplace_back((-b - *r) * inv2a, k.one());
  return out;
}

}  // namespace detail

// X.(line pq) - p - q, with the tangent line at p when p = q.
template <Field K>
ResidualPair<K> residual_pair(const PlaneQuartic<K>& x, const std::vector<typename K::Scalar>& p,
                              const std::vector<typename K::Scalar>& q) {
  using S = typename K::Scalar;
  const K& k = x.field();
  if (p.size() != 3 || q.size() != 3) throw ShapeError("points of P^2 need three coordinates");
  if (!K::is_zero(x.form().evaluate(p)) || !K::is_zero(x.form().evaluate(q))) throw DomainError("points must lie on the quartic");
  if (k.characteristic() != 0 && k.characteristic() <= 4) throw DomainError("residual pairs need characteristic 0 or p >= 5");

  const bool same = Matrix<K>::from_rows(k, {p, q}).rank() < 2;
  std::vector<S> w = q;
  if (same) {
    std::vector<S> grad(3);
    for (int i = 0; i < 3; ++i) grad[i] = x.form().derivative(i).evaluate(p);
    if (std::all_of(grad.begin(), grad.end(), [](const S& g) { return K::is_zero(g); }))
      throw DegenerateInputError("tangent line requested at a singular point");
    Matrix<K> eq(k, 1, 3);
    for (int i = 0; i < 3; ++i) eq(0, i) = grad[i];
    w.clear();
    for (const auto& v : eq.kernel_basis())
      if (!detail::proportional(v, p, k)) {
        w = v;
        break;
      }
  }
  ResidualPair<K> out{Matrix<K>::from_rows(k, {p, w}), HomogeneousForm<K>(k, 2, 2), {}};
  const auto b = restrict_to_line(x.form(), out.line);
  if (b.is_zero()) throw DegenerateInputError("the line is a component of the quartic");
  // p sits at t = 0; q (or the tangency) at s = 0 (or t^2).
  for (const auto& [e, c] : b.terms()) {
    Exponent d = e;
    if (same) {
      d[1] -= 2;
    } else {
      d[0] -= 1;
      d[1] -= 1;
    }
    if (d[0] < 0 || d[1] < 0) throw DerivationError("restricted quartic is not divisible by the given points");
    out.quadratic.add_term(d, c);
  }
  for (const auto& [s, t] : detail::binary_quadratic_roots(out.quadratic)) {
    std::vector<S> pt(3);
    for (int i = 0; i < 3; ++i) pt[i] = s * p[i] + t * w[i];
    out.points.push_back(pt);
  }
  return out;
}

// The conic y^2 = xz, image of (s : t) -> (s^2 : st : t^2), with six
// distinct marked points.
struct MarkedConic {
  HomogeneousForm<FiniteField> conic;
  std::vector<std::vector<Fq>> marked;

  // Marked points given by their parameters (s : t) on P^1.
  static MarkedConic from_parameters(const FiniteField& k, const std::vector<std::pair<Fq, Fq>>& params);
  // Six distinct parameters drawn deterministically from the seed.
  static MarkedConic random(const FiniteField& k, std::uint64_t seed);
};

void validate(const MarkedConic& m);

struct FiberCounts {
  std::uint64_t direct = 0;
  std::uint64_t formula = 0;
  bool match = false;
};

// Lines of P^2(F_q) through none of the marked points and not tangent to
// the conic, counted directly and by C(q-5, 2) + (q^2 - q)/2.
FiberCounts genus3_fiber_counts(const MarkedConic& m);

struct BuiltinQuartic {
  std::string name;
  std::uint32_t prime = 0;
  std::uint32_t full_extension = 0;  // an extension where all 28 are rational
  PlaneQuartic<FiniteField> curve;
};

std::vector<BuiltinQuartic> builtin_quartics();

}  // namespace prym::quartic
