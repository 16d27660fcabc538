#include "prym/galois_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

#include "prym/errors.hpp"

namespace prym {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // coefficients over F_p, low degree first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i]) % p);
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  return poly_mod(std::move(r), m, p);
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's test restricted to the gcd conditions; k is small so the
// x^{p^k} = x check is implied by the degree argument on the gcds.
bool irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t k = f.size() - 1;
  if (k == 1) return true;
  Poly xp = {0, 1};  // x^{p^i} mod f
  for (std::size_t i = 1; i <= k / 2; ++i) {
    Poly acc = {1};
    Poly base = xp;
    for (std::uint32_t e = p; e > 0; e >>= 1) {
      if (e & 1) acc = poly_mulmod(acc, base, f, p);
      base = poly_mulmod(base, base, f, p);
    }
    xp = acc;
    Poly diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

const GaloisField& GaloisField::get(std::uint32_t p, std::uint32_t k) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<GaloisField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({p, k});
  if (it == cache.end()) {
    it = cache.emplace(std::make_pair(p, k), std::unique_ptr<GaloisField>(new GaloisField(p, k))).first;
  }
  return *it->second;
}

GaloisField::GaloisField(std::uint32_t p, std::uint32_t k) : p_(p), k_(k) {
  if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
  if (k == 0) throw DomainError("extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) throw DomainError("field order p^k exceeds " + std::to_string(kMaxOrder));
  }
  q_ = static_cast<std::uint32_t>(q);

  if (k == 1) {
    modulus_ = {0, 1};
  } else {
    for (std::uint32_t code = 0; code < q_; ++code) {
      Poly f(k + 1, 0);
      std::uint32_t c = code;
      for (std::uint32_t i = 0; i < k; ++i) {
        f[i] = c % p;
        c /= p;
      }
      f[k] = 1;
      if (f[0] == 0) continue;
      if (irreducible(f, p)) {
        modulus_ = f;
        break;
      }
    }
  }

  // Search for a multiplicative generator, smallest code first.
  const auto factors = prime_factors(q_ - 1);
  std::uint32_t gen = 0;
  for (std::uint32_t cand = 1; cand < q_ && gen == 0; ++cand) {
    bool ok = true;
    for (auto f : factors) {
      std::uint64_t e = (q_ - 1) / f;
      std::uint32_t acc = 1, base = cand;
      for (; e > 0; e >>= 1) {
        if (e & 1) acc = mul_slow(acc, base);
        base = mul_slow(base, base);
      }
      if (acc == 1) {
        ok = false;
        break;
      }
    }
    if (ok) gen = cand;
  }
  if (q_ == 2) gen = 1;

  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, 0);
  std::uint32_t cur = 1;
  for (std::uint32_t i = 0; i < q_ - 1; ++i) {
    exp_[i] = cur;
    exp_[i + q_ - 1] = cur;
    log_[cur] = i;
    cur = mul_slow(cur, gen);
  }
}

std::uint32_t GaloisField::mul_slow(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) return static_cast<std::uint32_t>(std::uint64_t(a) * b % p_);
  Poly pa(k_), pb(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    pa[i] = a % p_;
    a /= p_;
    pb[i] = b % p_;
    b /= p_;
  }
  trim(pa);
  trim(pb);
  Poly r = poly_mulmod(pa, pb, modulus_, p_);
  std::uint32_t code = 0;
  for (std::size_t i = r.size(); i-- > 0;) code = code * p_ + r[i];
  return code;
}

std::uint32_t GaloisField::add_digits(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t out = 0, place = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    std::uint32_t d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    out += d * place;
    place *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

std::uint32_t GaloisField::neg_digits(std::uint32_t a) const {
  std::uint32_t out = 0, place = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    std::uint32_t d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * place;
    place *= p_;
    a /= p_;
  }
  return out;
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
  if (a == 0) throw DomainError("inverse of zero in " + describe());
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t GaloisField::pow(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  return exp_[(std::uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1)];
}

bool GaloisField::is_square(std::uint32_t a) const {
  if (a == 0 || p_ == 2) return true;
  return log_[a] % 2 == 0;
}

std::optional<std::uint32_t> GaloisField::sqrt(std::uint32_t a) const {
  if (a == 0) return 0u;
  if (p_ == 2) return pow(a, q_ / 2);
  if (log_[a] % 2 != 0) return std::nullopt;
  return exp_[log_[a] / 2];
}

std::uint32_t GaloisField::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

std::vector<std::uint32_t> GaloisField::digits(std::uint32_t a) const {
  std::vector<std::uint32_t> d(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

std::uint32_t GaloisField::from_digits(const std::vector<std::uint32_t>& d) const {
  if (d.size() > k_) throw DomainError("too many digits for " + describe());
  std::uint32_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] >= p_) throw DomainError("digit out of range for " + describe());
    code = code * p_ + d[i];
  }
  return code;
}

std::string GaloisField::element_to_string(std::uint32_t a) const {
  if (k_ == 1) return std::to_string(a);
  std::ostringstream os;
  os << "[";
  auto d = digits(a);
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << "]";
  return os.str();
}

std::string GaloisField::describe() const {
  std::ostringstream os;
  os << "F_" << p_;
  if (k_ > 1) os << "^" << k_;
  return os.str();
}

}  // namespace prym
