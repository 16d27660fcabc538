#include "prym/projective_points.hpp"

#include <algorithm>

namespace prym {

RawForm::RawForm(const HomogeneousForm<FiniteField>& f) : gf_(f.field().gf), n_(f.num_vars()) {
  for (const auto& [e, c] : f.terms()) {
    coef_.push_back(c.v);
    exps_.push_back(e);
  }
}

std::uint32_t RawForm::operator()(const std::uint32_t* x) const {
  std::uint32_t acc = 0;
  for (std::size_t t = 0; t < coef_.size(); ++t) {
    std::uint32_t term = coef_[t];
    for (int i = 0; i < n_ && term; ++i)
      if (exps_[t][i]) term = gf_->mul(term, gf_->pow(x[i], exps_[t][i]));
    acc = gf_->add(acc, term);
  }
  return acc;
}

RawGradient::RawGradient(const HomogeneousForm<FiniteField>& f) {
  for (int i = 0; i < f.num_vars(); ++i) parts_.emplace_back(f.derivative(i));
}

void RawGradient::operator()(const std::uint32_t* x, std::uint32_t* out) const {
  for (std::size_t i = 0; i < parts_.size(); ++i) out[i] = parts_[i](x);
}

void for_each_projective_point(const GaloisField& gf, int n, const std::function<bool(const std::uint32_t*)>& fn) {
  const std::uint32_t q = gf.order();
  std::vector<std::uint32_t> x(n);
  for (int lead = 0; lead < n; ++lead) {
    std::fill(x.begin(), x.end(), 0u);
    x[lead] = 1;
    // Odometer over the coordinates after the leading one.
    while (true) {
      if (!fn(x.data())) return;
      int c = n - 1;
      while (c > lead && x[c] == q - 1) x[c--] = 0;
      if (c == lead) break;
      ++x[c];
    }
  }
}

std::optional<std::vector<Fq>> find_singular_point(const HomogeneousForm<FiniteField>& f) {
  const FiniteField k = f.field();
  const int n = f.num_vars();
  const RawForm value(f);
  const RawGradient grad(f);
  std::vector<std::uint32_t> g(n);
  std::optional<std::vector<Fq>> hit;
  for_each_projective_point(*k.gf, n, [&](const std::uint32_t* x) {
    if (value(x) != 0) return true;
    grad(x, g.data());
    for (auto v : g)
      if (v != 0) return true;
    std::vector<Fq> pt;
    for (int i = 0; i < n; ++i) pt.push_back(Fq{x[i], k.gf});
    hit = pt;
    return false;
  });
  return hit;
}

}  // namespace prym
