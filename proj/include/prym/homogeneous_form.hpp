#pragma once

#include <functional>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "prym/errors.hpp"
#include "prym/field.hpp"
#include "prym/matrix.hpp"

namespace prym {

using Exponent = std::vector<int>;

// Homogeneous polynomial of fixed degree in `num_vars` variables.
// Terms are kept in descending lexicographic order of exponent vectors
// (x^3 before x^2 y before ...), and only nonzero coefficients are stored.
template <Field K>
class HomogeneousForm {
 public:
  using Scalar = typename K::Scalar;
  using Terms = std::map<Exponent, Scalar, std::greater<Exponent>>;

  HomogeneousForm() = default;
  HomogeneousForm(K field, int num_vars, int degree) : field_(field), num_vars_(num_vars), degree_(degree) {
    if (num_vars <= 0 || degree < 0) throw ShapeError("form needs num_vars > 0 and degree >= 0");
  }

  static HomogeneousForm monomial(K field, const Exponent& e, const Scalar& c) {
    int d = std::accumulate(e.begin(), e.end(), 0);
    HomogeneousForm f(field, static_cast<int>(e.size()), d);
    f.add_term(e, c);
    return f;
  }

  // The linear form sum_i c_i x_i.
  static HomogeneousForm linear(K field, std::span<const Scalar> c) {
    HomogeneousForm f(field, static_cast<int>(c.size()), 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      Exponent e(c.size(), 0);
      e[i] = 1;
      f.add_term(e, c[i]);
    }
    return f;
  }

  static HomogeneousForm constant(K field, int num_vars, const Scalar& c) {
    HomogeneousForm f(field, num_vars, 0);
    f.add_term(Exponent(num_vars, 0), c);
    return f;
  }

  const K& field() const { return field_; }
  int num_vars() const { return num_vars_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, const Scalar& c) {
    check_exponent(e);
    if (K::is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
      return;
    }
    it->second = it->second + c;
    if (K::is_zero(it->second)) terms_.erase(it);
  }

  Scalar coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  Scalar evaluate(std::span<const Scalar> point) const {
    if (static_cast<int>(point.size()) != num_vars_) throw ShapeError("evaluation point has wrong length");
    std::vector<std::vector<Scalar>> powers(num_vars_);
    for (int i = 0; i < num_vars_; ++i) {
      powers[i].push_back(field_.one());
      for (int d = 1; d <= degree_; ++d) powers[i].push_back(powers[i].back() * point[i]);
    }
    Scalar acc = field_.zero();
    for (const auto& [e, c] : terms_) {
      Scalar t = c;
      for (int i = 0; i < num_vars_; ++i)
        if (e[i]) t = t * powers[i][e[i]];
      acc = acc + t;
    }
    return acc;
  }

  HomogeneousForm& operator+=(const HomogeneousForm& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  HomogeneousForm& operator-=(const HomogeneousForm& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend HomogeneousForm operator+(HomogeneousForm a, const HomogeneousForm& b) { return a += b; }
  friend HomogeneousForm operator-(HomogeneousForm a, const HomogeneousForm& b) { return a -= b; }
  HomogeneousForm operator-() const {
    HomogeneousForm r(field_, num_vars_, degree_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b) {
    if (a.num_vars_ != b.num_vars_) throw ShapeError("product of forms in different variable counts");
    HomogeneousForm r(a.field_, a.num_vars_, a.degree_ + b.degree_);
    Exponent e(a.num_vars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (int i = 0; i < a.num_vars_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }

  friend HomogeneousForm operator*(const Scalar& s, const HomogeneousForm& f) {
    HomogeneousForm r(f.field_, f.num_vars_, f.degree_);
    if (K::is_zero(s)) return r;
    for (const auto& [e, c] : f.terms_) r.add_term(e, s * c);
    return r;
  }

  HomogeneousForm pow(int n) const {
    HomogeneousForm r = constant(field_, num_vars_, field_.one());
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  // Formal partial derivative in variable i.
  HomogeneousForm derivative(int i) const {
    if (i < 0 || i >= num_vars_) throw ShapeError("derivative variable out of range");
    if (degree_ == 0) return HomogeneousForm(field_, num_vars_, 0);
    HomogeneousForm r(field_, num_vars_, degree_ - 1);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      Exponent d = e;
      --d[i];
      r.add_term(d, field_.from_int(e[i]) * c);
    }
    return r;
  }

  // Map coefficients into another field (e.g. Q -> F_p).
  template <Field K2, class Fn>
  HomogeneousForm<K2> map_coefficients(K2 target, Fn&& fn) const {
    HomogeneousForm<K2> r(target, num_vars_, degree_);
    for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
    return r;
  }

  friend bool operator==(const HomogeneousForm& a, const HomogeneousForm& b) {
    return a.num_vars_ == b.num_vars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  // e.g. "2*x0^3 - x0*x1^2"; variable names default to x0, x1, ...
  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << field_.to_string(c) << ")";
      for (int i = 0; i < num_vars_; ++i) {
        if (!e[i]) continue;
        os << "*" << (names.empty() ? "x" + std::to_string(i) : names[i]);
        if (e[i] > 1) os << "^" << e[i];
      }
    }
    return os.str();
  }

 private:
  void check_exponent(const Exponent& e) const {
    if (static_cast<int>(e.size()) != num_vars_) throw ShapeError("exponent vector has wrong length");
    int s = 0;
    for (int x : e) {
      if (x < 0) throw ShapeError("negative exponent");
      s += x;
    }
    if (s != degree_) throw ShapeError("exponent vector does not sum to the form degree");
  }
  void check_compatible(const HomogeneousForm& o) const {
    if (o.num_vars_ != num_vars_ || o.degree_ != degree_) throw ShapeError("sum of forms with different shapes");
  }

  K field_{};
  int num_vars_ = 1;
  int degree_ = 0;
  Terms terms_;
};

// All exponent vectors of the given degree in n variables, in descending
// lexicographic order.
inline std::vector<Exponent> monomials(int num_vars, int degree) {
  std::vector<Exponent> out;
  Exponent e(num_vars, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == num_vars - 1) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
  };
  rec(0, degree);
  return out;
}

// f composed with the linear map x_i = sum_j m(i, j) y_j. The result lives in
// m.cols() variables and has the same degree.
template <Field K>
HomogeneousForm<K> substitute_linear(const HomogeneousForm<K>& f, const Matrix<K>& m) {
  if (static_cast<int>(m.rows()) != f.num_vars()) throw ShapeError("substitution matrix row count must equal num_vars");
  if (m.cols() == 0) throw ShapeError("substitution into zero variables");
  const K& k = f.field();
  const int n_new = static_cast<int>(m.cols());
  // powers[i][d] = (row i as a linear form)^d, built lazily.
  std::vector<std::vector<HomogeneousForm<K>>> powers(f.num_vars());
  auto power = [&](int i, int d) -> const HomogeneousForm<K>& {
    auto& pw = powers[i];
    if (pw.empty()) {
      pw.push_back(HomogeneousForm<K>::constant(k, n_new, k.one()));
      auto r = m.row(i);
      pw.push_back(HomogeneousForm<K>::linear(k, r));
    }
    while (static_cast<int>(pw.size()) <= d) pw.push_back(pw.back() * pw[1]);
    return pw[d];
  };
  HomogeneousForm<K> out(k, n_new, f.degree());
  for (const auto& [e, c] : f.terms()) {
    HomogeneousForm<K> t = HomogeneousForm<K>::constant(k, n_new, c);
    for (int i = 0; i < f.num_vars(); ++i)
      if (e[i]) t = t * power(i, e[i]);
    out += t;
  }
  return out;
}

// Row i of the result parametrizes variable i: for a line spanned by points
// P and Q, returns the n x 2 matrix [P | Q] so f(s P + t Q) is a binary form.
template <Field K>
Matrix<K> parametrization(const Matrix<K>& spanning_rows) {
  return spanning_rows.transpose();
}

}  // namespace prym
