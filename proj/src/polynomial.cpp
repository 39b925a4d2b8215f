#include "germforge/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace germforge {

int canonical_cmp(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  const auto& ra = a.raw();
  const auto& rb = b.raw();
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (ra[i] != rb[i]) return ra[i] > rb[i] ? 1 : -1;
  return 0;
}

namespace {
bool canon_less(const Term& a, const Term& b) { return canonical_cmp(a.mono, b.mono) > 0; }
}  // namespace

Polynomial::Polynomial(const Rational& c) {
  if (sgn(c) != 0) terms_.push_back({c, Monomial()});
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (sgn(c) != 0) p.terms_.push_back({c, m});
  return p;
}

Polynomial Polynomial::var(std::size_t i) { return monomial(Monomial::var(i)); }

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), canon_less);
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
      continue;
    }
    if (sgn(t.coeff) != 0) p.terms_.push_back(std::move(t));
  }
  return p;
}

Polynomial Polynomial::from_sorted(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& v) { return canonical_cmp(t.mono, v) > 0; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

int Polynomial::degree() const { return terms_.empty() ? -1 : int(terms_.front().mono.degree()); }
int Polynomial::order() const { return terms_.empty() ? -1 : int(terms_.back().mono.degree()); }

std::size_t Polynomial::span() const {
  std::size_t s = 0;
  for (const auto& t : terms_) s = std::max(s, t.mono.span());
  return s;
}

bool Polynomial::uses_var(std::size_t i) const {
  for (const auto& t : terms_)
    if (t.mono[i]) return true;
  return false;
}

Polynomial Polynomial::truncated(unsigned N) const {
  Polynomial p;
  for (const auto& t : terms_)
    if (t.mono.degree() <= N) p.terms_.push_back(t);
  return p;
}

Polynomial Polynomial::homogeneous_part(unsigned d) const {
  Polynomial p;
  for (const auto& t : terms_)
    if (t.mono.degree() == d) p.terms_.push_back(t);
  return p;
}

Polynomial Polynomial::above(unsigned N) const {
  Polynomial p;
  for (const auto& t : terms_)
    if (t.mono.degree() > N) p.terms_.push_back(t);
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size()) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size()) {
      out.push_back(o.terms_[j++]);
    } else {
      int c = canonical_cmp(terms_[i].mono, o.terms_[j].mono);
      if (c > 0) {
        out.push_back(std::move(terms_[i++]));
      } else if (c < 0) {
        out.push_back(o.terms_[j++]);
      } else {
        Rational s = terms_[i].coeff + o.terms_[j].coeff;
        if (sgn(s) != 0) out.push_back({s, terms_[i].mono});
        ++i;
        ++j;
      }
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial Polynomial::mul_trunc(const Polynomial& a, const Polynomial& b, int N) {
  if (a.is_zero() || b.is_zero()) return {};
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      if (N >= 0 && int(ta.mono.degree() + tb.mono.degree()) > N) continue;
      Monomial m = ta.mono * tb.mono;
      auto [it, fresh] = acc.try_emplace(m, ta.coeff * tb.coeff);
      if (!fresh) it->second += ta.coeff * tb.coeff;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) terms.push_back({c, m});
  std::sort(terms.begin(), terms.end(), canon_less);
  return from_sorted(std::move(terms));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return Polynomial::mul_trunc(a, b, -1); }

Polynomial Polynomial::pow(unsigned k, int N) const {
  Polynomial result(1);
  if (N >= 0) result = result.truncated(N);
  Polynomial base = N >= 0 ? truncated(N) : *this;
  while (k) {
    if (k & 1) result = mul_trunc(result, base, N);
    k >>= 1;
    if (k) base = mul_trunc(base, base, N);
  }
  return result;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (sgn(c) == 0) return {};
  Polynomial p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::times(const Monomial& m, const Rational& c) const {
  if (sgn(c) == 0) return {};
  Polynomial p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.coeff * c, t.mono * m});
  // canonical order is preserved by monomial multiplication
  return p;
}

Polynomial Polynomial::divided_by(const Monomial& m) const {
  Polynomial p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!m.divides(t.mono)) throw std::domain_error("term not divisible by monomial");
    p.terms_.push_back({t.coeff, t.mono / m});
  }
  return p;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.mono[var];
    if (!e) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({t.coeff * e, m});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& p, int N) const {
  return substitute(std::vector<std::pair<std::size_t, Polynomial>>{{var, p}}, N);
}

Polynomial Polynomial::substitute(const std::vector<std::pair<std::size_t, Polynomial>>& subs, int N) const {
  // Powers of each substituted polynomial are cached on demand.
  std::vector<std::vector<Polynomial>> powers(subs.size());
  auto power = [&](std::size_t k, unsigned e) -> const Polynomial& {
    auto& cache = powers[k];
    if (cache.empty()) cache.push_back(Polynomial(1));
    while (cache.size() <= e) cache.push_back(mul_trunc(cache.back(), subs[k].second, N));
    return cache[e];
  };
  Polynomial result;
  std::vector<Term> untouched;
  for (const auto& t : terms_) {
    Monomial rest = t.mono;
    bool hit = false;
    for (const auto& s : subs) {
      if (rest[s.first]) hit = true;
    }
    if (!hit) {
      if (N < 0 || int(t.mono.degree()) <= N) untouched.push_back(t);
      continue;
    }
    for (const auto& s : subs) rest.set(s.first, 0);
    Polynomial piece = Polynomial::monomial(rest, t.coeff);
    for (std::size_t k = 0; k < subs.size(); ++k) {
      unsigned e = t.mono[subs[k].first];
      if (e) piece = mul_trunc(piece, power(k, e), N);
      if (piece.is_zero()) break;
    }
    result += piece;
  }
  result += from_terms(std::move(untouched));
  return result;
}

Rational Polynomial::eval(const std::vector<Rational>& point) const {
  Rational s = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned e = t.mono[i];
      if (!e) continue;
      if (i >= point.size()) throw std::out_of_range("evaluation point too short");
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), point[i].get_num_mpz_t(), e);
      mpz_pow_ui(pw.get_den_mpz_t(), point[i].get_den_mpz_t(), e);
      v *= pw;
    }
    s += v;
  }
  return s;
}

double Polynomial::eval(const std::vector<double>& point) const {
  double s = 0;
  for (const auto& t : terms_) {
    double v = t.coeff.get_d();
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned e = t.mono[i];
      if (!e) continue;
      if (i >= point.size()) throw std::out_of_range("evaluation point too short");
      double b = point[i], r = 1;
      for (unsigned k = 0; k < e; ++k) r *= b;
      v *= r;
    }
    s += v;
  }
  return s;
}

Polynomial Polynomial::monic_lex() const {
  if (is_zero()) return {};
  Rational c = terms_.front().coeff;
  return scaled(1 / c);
}

LeadingData leading_data(const MonomialOrder& o, const Polynomial& f) {
  LeadingData d;
  if (f.is_zero()) return d;
  const Term* best = &f.terms().front();
  for (const auto& t : f.terms())
    if (o.cmp(t.mono, best->mono) > 0) best = &t;
  d.zero = false;
  d.lt = *best;
  return d;
}

Polynomial s_germ(const MonomialOrder& o, const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  LeadingData lf = leading_data(o, f), lg = leading_data(o, g);
  Monomial l = Monomial::lcm(lf.lm(), lg.lm());
  return f.times(l / lf.lm(), 1 / lf.lc()) - g.times(l / lg.lm(), 1 / lg.lc());
}

std::string to_string(const Polynomial& f, const VarNames& names) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    Rational c = t.coeff;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += to_string(c);
    } else {
      if (c != 1) out += to_string(c) + "*";
      out += to_string(t.mono, names);
    }
  }
  return out;
}

Polynomial make_monic(const MonomialOrder& o, const Polynomial& f) {
  if (f.is_zero()) return f;
  return f.scaled(1 / leading_data(o, f).lc());
}

bool equal_up_to_unit(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.size() != b.size()) return false;
  return a.monic_lex() == b.monic_lex();
}

}  // namespace germforge
