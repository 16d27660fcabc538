#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prym/field.hpp"

namespace prym {

enum class Parity { Even, Odd };

inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

namespace picard {

enum class Space { RBar, MBar, ABar5 };

// Ordered generator list of a rational Picard group.
//   RBar(g): lambda, delta0', delta0'', delta0ram, then delta_i, delta_{g-i},
//            delta_{i:g-i} for 1 <= i <= g/2 (a name shared by i and g-i
//            appears once)
//   MBar(g): lambda, delta0, ..., delta_{g/2}
//   ABar5:   L (Hodge class), D (boundary)
class PicardBasis {
 public:
  static PicardBasis rbar(int g);
  static PicardBasis mbar(int g);
  static PicardBasis abar5();

  Space space() const { return space_; }
  int genus() const { return genus_; }
  const std::vector<std::string>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  // Throws DomainError for a name outside the basis.
  std::size_t index_of(const std::string& name) const;
  bool has(const std::string& name) const;
  std::string tag() const;

  friend bool operator==(const PicardBasis& a, const PicardBasis& b) {
    return a.space_ == b.space_ && a.genus_ == b.genus_;
  }

 private:
  PicardBasis(Space s, int g, std::vector<std::string> gens) : space_(s), genus_(g), gens_(std::move(gens)) {}
  Space space_;
  int genus_;
  std::vector<std::string> gens_;
};

// A coefficient is either a known rational or explicitly unknown.
struct Coefficient {
  std::optional<Rational> value;

  static Coefficient known(const Rational& r) { return {r}; }
  static Coefficient unknown() { return {std::nullopt}; }
  bool is_known() const { return value.has_value(); }

  friend Coefficient operator+(const Coefficient& a, const Coefficient& b) {
    if (!a.is_known() || !b.is_known()) return unknown();
    return known(*a.value + *b.value);
  }
  // 0 * Unknown = 0; any other multiple of Unknown stays Unknown.
  friend Coefficient operator*(const Rational& s, const Coefficient& c) {
    if (s == 0) return known(0);
    if (!c.is_known()) return unknown();
    return known(s * *c.value);
  }
  friend bool operator==(const Coefficient&, const Coefficient&) = default;
};

class DivisorClass {
 public:
  // All coefficients Known(0).
  static DivisorClass zero(const PicardBasis& basis);
  // All coefficients Unknown.
  static DivisorClass unknown(const PicardBasis& basis);
  static DivisorClass generator(const PicardBasis& basis, const std::string& name);

  const PicardBasis& basis() const { return basis_; }
  const Coefficient& operator[](const std::string& name) const { return coeffs_[basis_.index_of(name)]; }
  const std::vector<Coefficient>& coefficients() const { return coeffs_; }
  DivisorClass& set(const std::string& name, const Coefficient& c);
  DivisorClass& set(const std::string& name, const Rational& r) { return set(name, Coefficient::known(r)); }
  // Known value of a generator; throws InsufficientDataError if Unknown.
  Rational known(const std::string& name) const;

  friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);
  friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b);
  friend DivisorClass operator*(const Rational& s, const DivisorClass& c);
  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
  }

  // Canonical text: generators in basis order, Known zeros omitted,
  // Unknown slots as "?*name", e.g. "68*lambda - 8*delta0' - 17*delta0ram + ?*delta1".
  std::string to_string() const;

 private:
  DivisorClass(PicardBasis b, std::vector<Coefficient> c) : basis_(std::move(b)), coeffs_(std::move(c)) {}
  PicardBasis basis_;
  std::vector<Coefficient> coeffs_;
};

// a * iota^*lambda + b * iota^*delta0ram on the general Prym fiber.
struct FiberRestriction {
  Rational lambda_coeff;
  Rational ram_coeff;
  friend bool operator==(const FiberRestriction&, const FiberRestriction&) = default;
  std::string to_string() const;
};

// Classes of the loci T^e_g, T^o_g in Pic(RBar_g)_Q. Only lambda, delta0',
// delta0'' (odd case) and delta0ram are known; the rest are Unknown.
DivisorClass class_T(int g, Parity parity);

// Pullback to the general fiber of the genus-5 Prym map. The fiber misses
// every boundary divisor except delta0ram, so only lambda and delta0ram
// need to be Known.
FiberRestriction fiber_restrict(const DivisorClass& c);

// Multiple of iota^*lambda after imposing iota^*delta0ram = 4 iota^*lambda,
// the relation forced by T^e_5 missing the general fiber.
Rational apply_fiber_relation(const FiberRestriction& r);

// Genus-6 Prym map, RBar_6 --> ABar_5.
//   lambda    -> 486 L - 57 D
//   delta0ram -> 1836 L - 228 D
//   delta0'   -> 27 D
//   others    -> 0
DivisorClass prym6_pushforward(const DivisorClass& c);
// L -> lambda - 1/4 delta0ram, D -> delta0'; contracted generators get 0.
DivisorClass prym6_pullback(const DivisorClass& c);

// True iff c1 = t * c2 on every listed generator for a single rational t.
bool proportional_on(std::span<const std::string> generators, const DivisorClass& c1, const DivisorClass& c2);

// Named classes that appear inside proofs.
DivisorClass canonical_class_rbar5();       // 13 lambda - 2(delta0' + delta0'') - 3 delta0ram - ...
DivisorClass tetragonal_locus_m7();         // [M^1_{7,4}] with the free scalar set to 1
DivisorClass theta_null_m7();               // [T_7]
DivisorClass prym_ramification_rbar6();     // [U_{6,0}] = 7 lambda - 3/2 delta0ram - delta0' - ...

}  // namespace picard
}  // namespace prym
