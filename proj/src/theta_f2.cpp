#include "prym/theta_f2.hpp"

#include <algorithm>
#include <bit>

#include "prym/errors.hpp"

namespace prym::theta {

SymplecticSpaceF2::SymplecticSpaceF2(int genus) : genus_(genus) {
  if (genus < 0 || genus > 32) throw DomainError("symplectic F2 space needs 0 <= genus <= 32");
  low_mask_ = genus == 32 ? ~std::uint64_t{0} >> 32 : (std::uint64_t{1} << genus) - 1;
}

int SymplecticSpaceF2::pairing(TwoTorsionVector u, TwoTorsionVector v) const {
  const std::uint64_t u_lo = u.bits & low_mask_, u_hi = (u.bits >> genus_) & low_mask_;
  const std::uint64_t v_lo = v.bits & low_mask_, v_hi = (v.bits >> genus_) & low_mask_;
  return std::popcount((u_lo & v_hi) ^ (u_hi & v_lo)) & 1;
}

TwoTorsionVector SymplecticSpaceF2::vector(std::uint64_t bits) const {
  if (dim() < 64 && (bits >> dim()) != 0) throw ShapeError("vector has bits beyond dimension 2g");
  return {bits};
}

Subgroup::Subgroup(int dim, const std::vector<TwoTorsionVector>& generators) : dim_(dim) {
  std::vector<std::uint64_t> rows;
  for (auto g : generators) {
    if (dim < 64 && (g.bits >> dim) != 0) throw ShapeError("generator has bits beyond the ambient dimension");
    std::uint64_t v = g.bits;
    for (auto r : rows)
      if (v & (std::uint64_t{1} << (63 - std::countl_zero(r)))) v ^= r;
    if (v == 0) continue;
    // Keep existing rows reduced against the new pivot.
    const std::uint64_t pivot = std::uint64_t{1} << (63 - std::countl_zero(v));
    for (auto& r : rows)
      if (r & pivot) r ^= v;
    rows.push_back(v);
  }
  // Fully reduce: each pivot bit appears in exactly one row.
  std::sort(rows.begin(), rows.end(), std::greater<>());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::uint64_t pivot = std::uint64_t{1} << (63 - std::countl_zero(rows[i]));
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (j != i && (rows[j] & pivot)) rows[j] ^= rows[i];
  }
  std::sort(rows.begin(), rows.end(), std::greater<>());
  for (auto r : rows) basis_.push_back({r});
}

bool Subgroup::contains(TwoTorsionVector v) const {
  std::uint64_t x = v.bits;
  for (auto r : basis_) {
    const std::uint64_t pivot = std::uint64_t{1} << (63 - std::countl_zero(r.bits));
    if (x & pivot) x ^= r.bits;
  }
  return x == 0;
}

std::vector<TwoTorsionVector> Subgroup::elements() const {
  std::vector<TwoTorsionVector> out;
  const std::uint64_t n = std::uint64_t{1} << basis_.size();
  for (std::uint64_t mask = 0; mask < n; ++mask) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (mask >> i & 1) v ^= basis_[i].bits;
    out.push_back({v});
  }
  std::sort(out.begin(), out.end());
  return out;
}

int base_form(int genus, TwoTorsionVector x) {
  const std::uint64_t mask = genus == 32 ? ~std::uint64_t{0} >> 32 : (std::uint64_t{1} << genus) - 1;
  return std::popcount((x.bits & mask) & ((x.bits >> genus) & mask)) & 1;
}

int QuadraticFormF2::operator()(TwoTorsionVector x) const {
  return base_form(genus, x) ^ SymplecticSpaceF2(genus).pairing(translation, x);
}

Parity parity(const QuadraticFormF2& q) { return base_form(q.genus, q.translation) ? Parity::Odd : Parity::Even; }

ParityCounts count_parities(int genus) {
  SymplecticSpaceF2 s(genus);
  if (s.dim() > 40) throw DomainError("exhaustive parity count is limited to genus <= 20");
  ParityCounts c;
  for (std::uint64_t t = 0; t < s.size(); ++t) {
    if (parity({genus, {t}}) == Parity::Odd) {
      ++c.odd;
    } else {
      ++c.even;
    }
  }
  return c;
}

bool riemann_mumford_check(const QuadraticFormF2& q, const std::array<TwoTorsionVector, 4>& w) {
  if (!w[0].is_zero() || !(w[3] == w[1] + w[2])) throw DomainError("W = {0, mu1, mu2, mu3} must satisfy mu3 = mu1 + mu2");
  int sum = 0;
  for (auto mu : w) sum ^= parity(q.translated(mu)) == Parity::Odd ? 1 : 0;
  return sum == SymplecticSpaceF2(q.genus).pairing(w[1], w[2]);
}

Subgroup orthogonal_complement(const SymplecticSpaceF2& s, const Subgroup& h) {
  if (h.ambient_dim() != s.dim()) throw ShapeError("subgroup lives in a different ambient dimension");
  // Solve <x, h_j> = 0 by elimination on the constraint rows: <x, h> is the
  // dot product of x with h with its two halves swapped.
  const int g = s.genus();
  const std::uint64_t mask = g == 32 ? ~std::uint64_t{0} >> 32 : (std::uint64_t{1} << g) - 1;
  std::vector<TwoTorsionVector> constraints;
  for (auto v : h.basis()) {
    const std::uint64_t swapped = ((v.bits & mask) << g) | ((v.bits >> g) & mask);
    constraints.push_back({swapped});
  }
  Subgroup rows(s.dim(), constraints);
  std::vector<int> pivots;
  for (auto r : rows.basis()) pivots.push_back(63 - std::countl_zero(r.bits));
  std::vector<TwoTorsionVector> kernel;
  for (int free = 0; free < s.dim(); ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::uint64_t v = std::uint64_t{1} << free;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (rows.basis()[i].bits >> free & 1) v |= std::uint64_t{1} << pivots[i];
    kernel.push_back({v});
  }
  return Subgroup(s.dim(), kernel);
}

SymplecticQuotient::SymplecticQuotient(const SymplecticSpaceF2& s, TwoTorsionVector eta)
    : ambient_(s), quotient_(s.genus() - 1), eta_(eta) {
  if (eta.is_zero()) throw DomainError("quotient by the zero vector");
  if (s.dim() < 64 && (eta.bits >> s.dim()) != 0) throw ShapeError("eta has bits beyond dimension 2g");
  perp_ = orthogonal_complement(s, Subgroup(s.dim(), {eta}));

  // Symplectic Gram-Schmidt inside eta^perp; its radical is <eta>.
  std::vector<TwoTorsionVector> pool = perp_.basis();
  while (true) {
    std::size_t ia = pool.size(), ib = pool.size();
    for (std::size_t i = 0; i < pool.size() && ia == pool.size(); ++i)
      for (std::size_t j = i + 1; j < pool.size(); ++j)
        if (s.pairing(pool[i], pool[j])) {
          ia = i;
          ib = j;
          break;
        }
    if (ia == pool.size()) break;
    const TwoTorsionVector a = pool[ia], b = pool[ib];
    std::vector<TwoTorsionVector> rest;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (i == ia || i == ib) continue;
      TwoTorsionVector v = pool[i];
      if (s.pairing(v, b)) v = v + a;
      if (s.pairing(v, a)) v = v + b;
      if (!v.is_zero()) rest.push_back(v);
    }
    a_.push_back(a);
    b_.push_back(b);
    pool = std::move(rest);
  }
  if (static_cast<int>(a_.size()) != s.genus() - 1) throw DomainError("eta^perp / <eta> has unexpected dimension");
}

TwoTorsionVector SymplecticQuotient::project(TwoTorsionVector x) const {
  if (!perp_.contains(x)) throw DomainError("projection is only defined on eta^perp");
  const int h = quotient_.genus();
  std::uint64_t y = 0;
  for (int i = 0; i < h; ++i) {
    if (ambient_.pairing(x, b_[i])) y |= std::uint64_t{1} << i;
    if (ambient_.pairing(x, a_[i])) y |= std::uint64_t{1} << (h + i);
  }
  return {y};
}

TwoTorsionVector SymplecticQuotient::lift(TwoTorsionVector y) const {
  const int h = quotient_.genus();
  TwoTorsionVector x;
  for (int i = 0; i < h; ++i) {
    if (y.bits >> i & 1) x = x + a_[i];
    if (y.bits >> (h + i) & 1) x = x + b_[i];
  }
  return x;
}

SymplecticQuotient quotient_symplectic(const SymplecticSpaceF2& s, TwoTorsionVector eta) {
  return SymplecticQuotient(s, eta);
}

DescendedForm descend_form(const QuadraticFormF2& q, TwoTorsionVector mu) {
  if (q(mu) != 0) throw DescentObstructionError("q(mu) = 1: the form does not descend to mu^perp / <mu>");
  SymplecticQuotient quo(SymplecticSpaceF2(q.genus), mu);
  const int h = quo.quotient().genus();
  // qbar = q0' + <t', .>, and q0' vanishes on the basis vectors, so
  // t'_i = qbar(f_i), t'_{h+i} = qbar(e_i).
  std::uint64_t t = 0;
  for (int i = 0; i < h; ++i) {
    if (q(quo.lift(quo.quotient().f(i)))) t |= std::uint64_t{1} << i;
    if (q(quo.lift(quo.quotient().e(i)))) t |= std::uint64_t{1} << (h + i);
  }
  return {quo, {h, {t}}};
}

}  // namespace prym::theta
