#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "prym/field.hpp"
#include "prym/homogeneous_form.hpp"

namespace prym {

// A form over F_q compiled to raw element codes for fast repeated evaluation.
class RawForm {
 public:
  explicit RawForm(const HomogeneousForm<FiniteField>& f);
  std::uint32_t operator()(const std::uint32_t* x) const;
  int num_vars() const { return n_; }

 private:
  const GaloisField* gf_;
  int n_;
  std::vector<std::uint32_t> coef_;
  std::vector<std::vector<int>> exps_;
};

// All partial derivatives, compiled.
class RawGradient {
 public:
  explicit RawGradient(const HomogeneousForm<FiniteField>& f);
  void operator()(const std::uint32_t* x, std::uint32_t* out) const;

 private:
  std::vector<RawForm> parts_;
};

// Visits every point of P^{n-1}(F_q) once, normalized so the first nonzero
// coordinate is 1, as raw element codes. Stops early when fn returns false.
void for_each_projective_point(const GaloisField& gf, int n, const std::function<bool(const std::uint32_t*)>& fn);

// A point where all partial derivatives vanish, found by exhaustive search.
// Intended for small fields.
std::optional<std::vector<Fq>> find_singular_point(const HomogeneousForm<FiniteField>& f);

}  // namespace prym
