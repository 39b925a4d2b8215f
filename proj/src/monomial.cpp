#include "germforge/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace germforge {

Monomial::Monomial(std::initializer_list<unsigned> exps) {
  if (exps.size() > kMaxVars) throw std::out_of_range("too many variables");
  std::size_t i = 0;
  for (unsigned e : exps) set(i++, e);
}

Monomial::Monomial(const std::vector<unsigned>& exps) {
  if (exps.size() > kMaxVars) throw std::out_of_range("too many variables");
  for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
}

Monomial Monomial::var(std::size_t i, unsigned e) {
  Monomial m;
  m.set(i, e);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVars) throw std::out_of_range("variable index out of range");
  if (e > 0xffff) throw std::overflow_error("exponent overflow");
  deg_ = deg_ - e_[i] + e;
  e_[i] = static_cast<std::uint16_t>(e);
}

std::size_t Monomial::span() const {
  std::size_t n = kMaxVars;
  while (n > 0 && e_[n - 1] == 0) --n;
  return n;
}

bool Monomial::divides(const Monomial& o) const {
  if (deg_ > o.deg_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(e_[i]) + o.e_[i];
    if (e > 0xffff) throw std::overflow_error("exponent overflow");
    r.e_[i] = static_cast<std::uint16_t>(e);
  }
  r.deg_ = deg_ + o.deg_;
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (o.e_[i] > e_[i]) throw std::domain_error("monomial does not divide");
    r.e_[i] = static_cast<std::uint16_t>(e_[i] - o.e_[i]);
  }
  r.deg_ = deg_ - o.deg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.e_[i] = std::max(a.e_[i], b.e_[i]);
    d += r.e_[i];
  }
  r.deg_ = d;
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.e_[i] = std::min(a.e_[i], b.e_[i]);
    d += r.e_[i];
  }
  r.deg_ = d;
  return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e_[i] && b.e_[i]) return false;
  return true;
}

std::vector<unsigned> Monomial::exponents(std::size_t nvars) const {
  std::vector<unsigned> v(nvars);
  for (std::size_t i = 0; i < nvars && i < kMaxVars; ++i) v[i] = e_[i];
  return v;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : e_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

VarNames germ_vars() { return {"x", "lambda"}; }

std::string to_string(const Monomial& m, const VarNames& names) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (!m[i]) continue;
    if (!out.empty()) out += "*";
    out += i < names.size() ? names[i] : "v" + std::to_string(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

}  // namespace germforge
