#include "prym/fano_ns.hpp"

#include "prym/errors.hpp"

namespace prym::fano {

std::int64_t intersect(NSClass a, NSClass b) { return kLSquared * a.multiple * b.multiple; }

Rational adjunction_genus(NSClass c) {
  if (c.multiple <= 0) throw DomainError("adjunction genus needs a positive multiple of L");
  const Rational twice_minus_two = intersect(c, c + kCanonical);
  return (twice_minus_two + 2) / 2;
}

NSClass derive_gamma_multiple(const Rational& fiber_canonical, const Rational& gamma_pullback) {
  if (fiber_canonical == 0) throw DerivationError("fiber canonical class restricts to zero; cannot compare with phi^*K");
  // iota^*lambda = (3 / fiber_canonical) phi^*L, so phi^*Gamma = m phi^*L.
  const Rational m = Rational(kCanonical.multiple) * gamma_pullback / fiber_canonical;
  if (m.get_den() != 1) throw DerivationError("Gamma multiple " + to_string(m) + " is not integral");
  if (!m.get_num().fits_slong_p()) throw DerivationError("Gamma multiple out of range");
  return {m.get_num().get_si()};
}

std::int64_t node_budget(NSClass gamma, NSClass normalization) {
  const Rational d = adjunction_genus(gamma) - adjunction_genus(normalization);
  return d.get_num().get_si();
}

DesingPartition desing_partition(NSClass gamma) {
  DesingPartition d{};
  d.gamma_self = intersect(gamma, gamma);
  // The two components of phi^{-1}(Gamma) share a class, so by the projection
  // formula 2 (T.Dram) = T.phi^*Gamma = Gamma.Gamma. Each node of Gamma whose
  // preimage is not a pair of nodes lifts to two crossings.
  d.crossing_points = d.gamma_self / 2;
  d.shared_nodes = d.crossing_points / 2;
  d.residual_nodes = node_budget(gamma) - d.shared_nodes;
  return d;
}

}  // namespace prym::fano
