#include "germforge/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace germforge {

namespace {

void trim(UniPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

UniPoly rem(UniPoly a, const UniPoly& b) {
  int db = degree(b);
  if (db < 0) throw std::domain_error("division by the zero polynomial");
  while (degree(a) >= db) {
    int da = degree(a);
    Rational q = a[da] / b[db];
    for (int i = 0; i <= db; ++i) a[da - db + i] -= q * b[i];
    trim(a);
  }
  return a;
}

UniPoly quo(UniPoly a, const UniPoly& b) {
  int db = degree(b);
  int da = degree(a);
  if (da < db) return {};
  UniPoly q(da - db + 1, 0);
  while (degree(a) >= db) {
    int d = degree(a);
    Rational c = a[d] / b[db];
    q[d - db] = c;
    for (int i = 0; i <= db; ++i) a[d - db + i] -= c * b[i];
    trim(a);
  }
  return q;
}

// Scaled by a positive constant so the leading coefficient is +-1.
UniPoly normalized(UniPoly p) {
  trim(p);
  if (p.empty()) return p;
  Rational s = abs(p.back());
  for (auto& c : p) c /= s;
  return p;
}

UniPoly gcd(UniPoly a, UniPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UniPoly r = rem(a, b);
    a = std::move(b);
    b = normalized(std::move(r));
  }
  return normalized(a);
}

int sign_at(const UniPoly& p, const Rational& t) { return sgn(eval(p, t)); }

}  // namespace

UniPoly to_unipoly(const Polynomial& p, std::size_t var) {
  UniPoly u;
  for (const auto& t : p.terms()) {
    if (t.mono.degree() != t.mono[var]) throw std::invalid_argument("polynomial is not univariate");
    unsigned e = t.mono[var];
    if (u.size() <= e) u.resize(e + 1, 0);
    u[e] += t.coeff;
  }
  trim(u);
  return u;
}

int degree(const UniPoly& p) {
  for (int i = int(p.size()) - 1; i >= 0; --i)
    if (sgn(p[i]) != 0) return i;
  return -1;
}

Rational eval(const UniPoly& p, const Rational& t) {
  Rational v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * t + *it;
  return v;
}

double eval(const UniPoly& p, double t) {
  long double v = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * t + to_double(*it);
  return double(v);
}

UniPoly derivative(const UniPoly& p) {
  UniPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(long(i)));
  trim(d);
  return d;
}

UniPoly squarefree_part(const UniPoly& p) {
  UniPoly q = p;
  trim(q);
  if (degree(q) <= 0) return normalized(q);
  UniPoly g = gcd(q, derivative(q));
  return normalized(quo(q, g));
}

SturmSequence::SturmSequence(const UniPoly& p) {
  UniPoly s = squarefree_part(p);
  if (s.empty()) throw std::domain_error("Sturm sequence of the zero polynomial");
  seq_.push_back(s);
  UniPoly d = normalized(derivative(s));
  while (!d.empty()) {
    seq_.push_back(d);
    UniPoly r = rem(seq_[seq_.size() - 2], seq_.back());
    for (auto& c : r) c = -c;
    d = normalized(std::move(r));
  }
  int n = degree(s);
  Rational m = 0;
  for (int i = 0; i < n; ++i) m = std::max(m, Rational(abs(s[i] / s[n])));
  bound_ = m + 1;
}

int SturmSequence::variations(const Rational& t) const {
  int v = 0, last = 0;
  for (const auto& p : seq_) {
    int s = sign_at(p, t);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int SturmSequence::variations_at_infinity(int sign) const {
  int v = 0, last = 0;
  for (const auto& p : seq_) {
    int d = degree(p);
    int s = sgn(p[d]) * ((sign < 0 && d % 2 == 1) ? -1 : 1);
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

std::size_t SturmSequence::count(const Rational& a, const Rational& b) const {
  return std::size_t(variations(a) - variations(b));
}

std::size_t SturmSequence::count() const {
  return std::size_t(variations_at_infinity(-1) - variations_at_infinity(1));
}

std::vector<RealRoot> real_roots(const UniPoly& p) {
  std::vector<RealRoot> out;
  if (degree(p) <= 0) return out;
  SturmSequence st(p);
  const UniPoly& f = st.squarefree();
  std::vector<std::pair<Rational, Rational>> stack{{-st.bound(), st.bound()}};
  std::vector<std::pair<Rational, Rational>> isolated;
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    std::size_t n = st.count(a, b);
    if (n == 0) continue;
    if (n == 1) {
      isolated.emplace_back(a, b);
      continue;
    }
    Rational m = (a + b) / 2;
    stack.emplace_back(a, m);
    stack.emplace_back(m, b);
  }
  for (auto [a, b] : isolated) {
    RealRoot r;
    if (sgn(eval(f, b)) == 0) {
      r.lo = r.hi = b;
      r.value = to_double(b);
      out.push_back(r);
      continue;
    }
    // make both endpoints nonzero: a may be a root of a neighbouring interval
    while (sgn(eval(f, a)) == 0 || st.count(a, b) != 1 || sign_at(f, a) == sign_at(f, b)) {
      Rational m = (a + b) / 2;
      if (sgn(eval(f, m)) == 0) {
        a = b = m;
        break;
      }
      if (st.count(m, b) == 1)
        a = m;
      else
        b = m;
    }
    if (a == b) {
      r.lo = r.hi = a;
      r.value = to_double(a);
      out.push_back(r);
      continue;
    }
    int sa = sign_at(f, a);
    Rational target = Rational(1, 1 << 30) / (1 << 22) * (1 + abs(a));
    while (b - a > target) {
      Rational m = (a + b) / 2;
      int sm = sign_at(f, m);
      if (sm == 0) {
        a = b = m;
        break;
      }
      if (sm == sa)
        a = m;
      else
        b = m;
    }
    r.lo = a;
    r.hi = b;
    double lo = to_double(a), hi = to_double(b);
    if (a != b) {
      double fl = eval(f, lo);
      for (int it = 0; it < 200 && hi - lo > 0; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        double fm = eval(f, mid);
        if (fm == 0) {
          lo = hi = mid;
          break;
        }
        if ((fm > 0) == (fl > 0)) {
          lo = mid;
          fl = fm;
        } else {
          hi = mid;
        }
      }
    }
    r.value = 0.5 * (lo + hi);
    out.push_back(r);
  }
  std::sort(out.begin(), out.end(), [](const RealRoot& x, const RealRoot& y) { return x.value < y.value; });
  return out;
}

std::size_t count_real_roots(const UniPoly& p) {
  if (degree(p) <= 0) return 0;
  return SturmSequence(p).count();
}

}  // namespace germforge
