#include "prym/picard.hpp"

#include <algorithm>

#include "prym/errors.hpp"

namespace prym::picard {

namespace {

Rational pow2(int e) {
  Rational r = 1;
  if (e >= 0) {
    for (int i = 0; i < e; ++i) r *= 2;
  } else {
    for (int i = 0; i < -e; ++i) r /= 2;
  }
  return r;
}

void require_basis(const DivisorClass& c, const PicardBasis& b, const char* op) {
  if (!(c.basis() == b)) throw DomainError(std::string(op) + " expects a class on " + b.tag() + ", got " + c.basis().tag());
}

}  // namespace

PicardBasis PicardBasis::rbar(int g) {
  if (g < 2) throw DomainError("RBar(g) needs g >= 2");
  std::vector<std::string> gens = {"lambda", "delta0'", "delta0''", "delta0ram"};
  for (int i = 1; i <= g / 2; ++i) {
    for (std::string name : {"delta" + std::to_string(i), "delta" + std::to_string(g - i),
                             "delta" + std::to_string(i) + ":" + std::to_string(g - i)}) {
      if (std::find(gens.begin(), gens.end(), name) == gens.end()) gens.push_back(name);
    }
  }
  return PicardBasis(Space::RBar, g, std::move(gens));
}

PicardBasis PicardBasis::mbar(int g) {
  if (g < 2) throw DomainError("MBar(g) needs g >= 2");
  std::vector<std::string> gens = {"lambda"};
  for (int i = 0; i <= g / 2; ++i) gens.push_back("delta" + std::to_string(i));
  return PicardBasis(Space::MBar, g, std::move(gens));
}

PicardBasis PicardBasis::abar5() { return PicardBasis(Space::ABar5, 5, {"L", "D"}); }

std::size_t PicardBasis::index_of(const std::string& name) const {
  auto it = std::find(gens_.begin(), gens_.end(), name);
  if (it == gens_.end()) throw DomainError("generator '" + name + "' is not in " + tag());
  return static_cast<std::size_t>(it - gens_.begin());
}

bool PicardBasis::has(const std::string& name) const {
  return std::find(gens_.begin(), gens_.end(), name) != gens_.end();
}

std::string PicardBasis::tag() const {
  switch (space_) {
    case Space::RBar:
      return "RBar(" + std::to_string(genus_) + ")";
    case Space::MBar:
      return "MBar(" + std::to_string(genus_) + ")";
    case Space::ABar5:
      return "ABar5";
  }
  return "?";
}

DivisorClass DivisorClass::zero(const PicardBasis& basis) {
  return DivisorClass(basis, std::vector<Coefficient>(basis.size(), Coefficient::known(0)));
}

DivisorClass DivisorClass::unknown(const PicardBasis& basis) {
  return DivisorClass(basis, std::vector<Coefficient>(basis.size(), Coefficient::unknown()));
}

DivisorClass DivisorClass::generator(const PicardBasis& basis, const std::string& name) {
  DivisorClass c = zero(basis);
  c.set(name, 1);
  return c;
}

DivisorClass& DivisorClass::set(const std::string& name, const Coefficient& c) {
  coeffs_[basis_.index_of(name)] = c;
  return *this;
}

Rational DivisorClass::known(const std::string& name) const {
  const auto& c = (*this)[name];
  if (!c.is_known()) throw InsufficientDataError("coefficient of " + name + " is unknown in " + to_string());
  return *c.value;
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  if (!(a.basis_ == b.basis_)) throw ShapeError("sum of classes on " + a.basis_.tag() + " and " + b.basis_.tag());
  DivisorClass r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return r;
}

DivisorClass operator*(const Rational& s, const DivisorClass& c) {
  DivisorClass r = c;
  for (auto& x : r.coeffs_) x = s * x;
  return r;
}

DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return a + Rational(-1) * b; }

std::string DivisorClass::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& c = coeffs_[i];
    const std::string& name = basis_.generators()[i];
    if (!c.is_known()) {
      out += out.empty() ? "?*" + name : " + ?*" + name;
      continue;
    }
    const Rational& v = *c.value;
    if (v == 0) continue;
    const bool neg = v < 0;
    const std::string mag = prym::to_string(neg ? Rational(-v) : v);
    if (out.empty()) {
      out += (neg ? "-" : "") + mag + "*" + name;
    } else {
      out += (neg ? " - " : " + ") + mag + "*" + name;
    }
  }
  return out.empty() ? "0" : out;
}

std::string FiberRestriction::to_string() const {
  return "(" + prym::to_string(lambda_coeff) + ", " + prym::to_string(ram_coeff) + ")";
}

DivisorClass class_T(int g, Parity parity) {
  if (g < 3) throw DomainError("class_T needs g >= 3, got " + std::to_string(g));
  DivisorClass c = DivisorClass::unknown(PicardBasis::rbar(g));
  if (parity == Parity::Even) {
    c.set("lambda", pow2(g - 3) * (pow2(g - 1) + 1));
    c.set("delta0'", -pow2(2 * g - 7));
    c.set("delta0ram", -pow2(g - 5) * (pow2(g - 1) + 1));
  } else {
    c.set("lambda", pow2(2 * g - 4));
    c.set("delta0'", -pow2(2 * g - 7));
    c.set("delta0''", -pow2(2 * g - 6));
    c.set("delta0ram", -pow2(g - 5) * (pow2(g - 1) - 1));
  }
  return c;
}

FiberRestriction fiber_restrict(const DivisorClass& c) {
  require_basis(c, PicardBasis::rbar(5), "fiber_restrict");
  return {c.known("lambda"), c.known("delta0ram")};
}

Rational apply_fiber_relation(const FiberRestriction& r) { return r.lambda_coeff + 4 * r.ram_coeff; }

DivisorClass prym6_pushforward(const DivisorClass& c) {
  require_basis(c, PicardBasis::rbar(6), "prym6_pushforward");
  const Rational lam = c.known("lambda");
  const Rational ram = c.known("delta0ram");
  const Rational d0p = c.known("delta0'");
  DivisorClass out = DivisorClass::zero(PicardBasis::abar5());
  out.set("L", lam * (18 * 27) + ram * (4 * 17 * 27));
  out.set("D", lam * -57 + ram * (4 * -57) + d0p * 27);
  return out;
}

DivisorClass prym6_pullback(const DivisorClass& c) {
  require_basis(c, PicardBasis::abar5(), "prym6_pullback");
  const Rational l = c.known("L");
  const Rational d = c.known("D");
  DivisorClass out = DivisorClass::zero(PicardBasis::rbar(6));
  out.set("lambda", l);
  out.set("delta0ram", -l / 4);
  out.set("delta0'", d);
  return out;
}

bool proportional_on(std::span<const std::string> generators, const DivisorClass& c1, const DivisorClass& c2) {
  if (!(c1.basis() == c2.basis())) throw ShapeError("proportionality of classes on different bases");
  if (generators.empty()) throw DomainError("proportional_on needs at least one generator");
  std::optional<Rational> t;
  std::vector<std::pair<Rational, Rational>> pairs;
  bool c2_nonzero = false;
  for (const auto& g : generators) {
    pairs.emplace_back(c1.known(g), c2.known(g));
    if (pairs.back().second != 0) c2_nonzero = true;
  }
  if (!c2_nonzero) throw DomainError("second class vanishes on the generator subset");
  for (const auto& [a, b] : pairs) {
    if (b == 0) {
      if (a != 0) return false;
      continue;
    }
    const Rational ratio = a / b;
    if (!t) {
      t = ratio;
    } else if (*t != ratio) {
      return false;
    }
  }
  return true;
}

DivisorClass canonical_class_rbar5() {
  DivisorClass c = DivisorClass::unknown(PicardBasis::rbar(5));
  c.set("lambda", 13).set("delta0'", -2).set("delta0''", -2).set("delta0ram", -3);
  return c;
}

DivisorClass tetragonal_locus_m7() {
  DivisorClass c = DivisorClass::zero(PicardBasis::mbar(7));
  c.set("lambda", 10).set("delta0", Rational(-4, 3)).set("delta1", -6).set("delta2", -10).set("delta3", -12);
  return c;
}

DivisorClass theta_null_m7() {
  DivisorClass c = DivisorClass::zero(PicardBasis::mbar(7));
  c.set("lambda", 129).set("delta0", -16).set("delta1", -63).set("delta2", -93).set("delta3", -105);
  return Rational(16) * c;
}

DivisorClass prym_ramification_rbar6() {
  DivisorClass c = DivisorClass::unknown(PicardBasis::rbar(6));
  c.set("lambda", 7).set("delta0ram", Rational(-3, 2)).set("delta0'", -1);
  return c;
}

}  // namespace prym::picard
