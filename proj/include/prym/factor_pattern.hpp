#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "prym/homogeneous_form.hpp"

namespace prym {

// Multiset of root multiplicities of a binary form over the algebraic
// closure, stored in descending order ({2,1,1} for a simple tangent).
struct MultiplicityPattern {
  std::vector<int> parts;

  int degree() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
  }
  int max_multiplicity() const { return parts.empty() ? 0 : parts.front(); }
  friend bool operator==(const MultiplicityPattern&, const MultiplicityPattern&) = default;
  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s + "}";
  }
};

namespace univariate {

// Dense univariate polynomials, lowest degree first, no trailing zeros.
template <Field K>
using Poly = std::vector<typename K::Scalar>;

template <Field K>
void trim(Poly<K>& a) {
  while (!a.empty() && K::is_zero(a.back())) a.pop_back();
}

template <Field K>
int deg(const Poly<K>& a) {
  return static_cast<int>(a.size()) - 1;
}

template <Field K>
Poly<K> derivative(const K& k, const Poly<K>& a) {
  Poly<K> d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(k.from_int(static_cast<long long>(i)) * a[i]);
  trim<K>(d);
  return d;
}

template <Field K>
Poly<K> sub(const K& k, const Poly<K>& a, const Poly<K>& b) {
  Poly<K> r(std::max(a.size(), b.size()), k.zero());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
  trim<K>(r);
  return r;
}

// Quotient and remainder; b must be nonzero.
template <Field K>
std::pair<Poly<K>, Poly<K>> divmod(const K& k, Poly<K> a, const Poly<K>& b) {
  if (b.empty()) throw DomainError("polynomial division by zero");
  trim<K>(a);
  if (a.size() < b.size()) return {Poly<K>{}, a};
  Poly<K> q(a.size() - b.size() + 1, k.zero());
  const auto lead_inv = k.inv(b.back());
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const auto c = a.back() * lead_inv;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - c * b[i];
    a.pop_back();
    trim<K>(a);
  }
  trim<K>(q);
  return {q, a};
}

template <Field K>
Poly<K> monic(const K& k, Poly<K> a) {
  if (a.empty()) return a;
  const auto inv = k.inv(a.back());
  for (auto& c : a) c = c * inv;
  return a;
}

template <Field K>
Poly<K> gcd(const K& k, Poly<K> a, Poly<K> b) {
  trim<K>(a);
  trim<K>(b);
  while (!b.empty()) {
    auto r = divmod(k, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(k, a);
}

// Yun's squarefree decomposition: returns a_1, a_2, ... with
// f = c * prod a_i^i. Valid in characteristic 0 or above deg f.
template <Field K>
std::vector<Poly<K>> squarefree_decomposition(const K& k, const Poly<K>& f) {
  std::vector<Poly<K>> out;
  if (deg<K>(f) <= 0) return out;
  const Poly<K> df = derivative(k, f);
  Poly<K> a = gcd(k, f, df);
  Poly<K> b = divmod(k, f, a).first;
  Poly<K> c = divmod(k, df, a).first;
  Poly<K> d = sub(k, c, derivative(k, b));
  while (deg<K>(b) > 0) {
    Poly<K> ai = gcd(k, b, d);
    b = divmod(k, b, ai).first;
    c = divmod(k, d, ai).first;
    d = sub(k, c, derivative(k, b));
    out.push_back(ai);
  }
  return out;
}

}  // namespace univariate

// Root multiplicities of a nonzero binary form over the algebraic closure.
// No roots are constructed: the root at (1:0) is read off the power of t
// dividing b, and the affine part goes through a squarefree decomposition.
template <Field K>
MultiplicityPattern factor_pattern(const HomogeneousForm<K>& b) {
  if (b.num_vars() != 2) throw ShapeError("factor_pattern needs a binary form");
  if (b.is_zero()) throw DegenerateInputError("factor_pattern of the zero form");
  const K& k = b.field();
  const int d = b.degree();
  const std::uint32_t ch = k.characteristic();
  if (ch != 0 && static_cast<int>(ch) <= d)
    throw DomainError("squarefree decomposition needs characteristic above the form degree");

  // f(x) = b(x, 1); coefficient of x^i is that of s^i t^{d-i}.
  univariate::Poly<K> f(d + 1, k.zero());
  for (const auto& [e, c] : b.terms()) f[e[0]] = c;
  univariate::trim<K>(f);

  MultiplicityPattern pat;
  const int at_infinity = d - univariate::deg<K>(f);
  if (at_infinity > 0) pat.parts.push_back(at_infinity);
  const auto parts = univariate::squarefree_decomposition(k, f);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int r = 0; r < univariate::deg<K>(parts[i]); ++r) pat.parts.push_back(static_cast<int>(i) + 1);
  std::sort(pat.parts.begin(), pat.parts.end(), std::greater<int>());
  return pat;
}

}  // namespace prym
