#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace prym {

// Finite field F_{p^k}. Elements are encoded as the integer
// c_0 + c_1 p + ... + c_{k-1} p^{k-1} of their residue polynomial
// c_0 + c_1 t + ... modulo the defining polynomial.
//
// The defining polynomial is the first monic irreducible of degree k when
// non-leading coefficient vectors are ordered by that same integer code, so
// two runs always build the same field. Multiplication goes through
// discrete log tables; addition is digit-wise mod p.
class GaloisField {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 22;

  // Interned instance; lives for the lifetime of the process.
  static const GaloisField& get(std::uint32_t p, std::uint32_t k = 1);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t order() const { return q_; }
  // Monic defining polynomial, coefficients c_0..c_k (c_k = 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  std::uint32_t generator() const { return exp_[1]; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (k_ == 1) {
      std::uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return add_digits(a, b);
  }
  std::uint32_t neg(std::uint32_t a) const {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_digits(a);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  // Throws DomainError on zero.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  bool is_square(std::uint32_t a) const;
  // A square root when one exists in the field (odd characteristic).
  std::optional<std::uint32_t> sqrt(std::uint32_t a) const;
  // Reduction of an integer into the prime subfield.
  std::uint32_t from_int(long long n) const;

  // Prime-field digits c_0..c_{k-1} of an element.
  std::vector<std::uint32_t> digits(std::uint32_t a) const;
  std::uint32_t from_digits(const std::vector<std::uint32_t>& d) const;

  std::string element_to_string(std::uint32_t a) const;
  std::string describe() const;

 private:
  GaloisField(std::uint32_t p, std::uint32_t k);

  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_digits(std::uint32_t a) const;
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_;
  std::uint32_t k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // length 2(q-1) so log sums need no reduction
  std::vector<std::uint32_t> log_;
};

bool is_prime(std::uint64_t n);

}  // namespace prym
