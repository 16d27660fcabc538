#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "prym/field.hpp"
#include "prym/homogeneous_form.hpp"
#include "prym/matrix.hpp"

namespace gen {

// Seeded generators for property tests. Every draw goes through the raw
// engine output so sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  long long range(long long lo, long long hi) { return lo + static_cast<long long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return (eng_() & 1u) != 0; }

  prym::Rational rational(long long bound = 9) {
    prym::Rational r(static_cast<long>(range(-bound, bound)), static_cast<long>(range(1, bound)));
    r.canonicalize();
    return r;
  }
  prym::Fq fq(const prym::FiniteField& k) { return k.element(static_cast<std::uint32_t>(eng_() % k.order())); }

  prym::Rational scalar(const prym::RationalField&) { return rational(); }
  prym::Fq scalar(const prym::FiniteField& k) { return fq(k); }

  // Random form with roughly `density` of the monomials present.
  template <prym::Field K>
  prym::HomogeneousForm<K> form(const K& k, int vars, int degree, int density_pct = 60) {
    prym::HomogeneousForm<K> f(k, vars, degree);
    for (const auto& e : prym::monomials(vars, degree))
      if (range(0, 99) < density_pct) f.add_term(e, scalar(k));
    return f;
  }

  template <prym::Field K>
  prym::Matrix<K> matrix(const K& k, std::size_t rows, std::size_t cols, int zero_pct = 30) {
    prym::Matrix<K> m(k, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (range(0, 99) >= zero_pct) m(i, j) = scalar(k);
    return m;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace gen
