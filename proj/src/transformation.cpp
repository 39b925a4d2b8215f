#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "germforge/singularity.hpp"

namespace germforge {

namespace {

// Polynomials in the unknown coefficients of X and S.
using UMono = std::vector<std::pair<unsigned, unsigned>>;  // (unknown, exponent), sorted
using UPoly = std::map<UMono, Rational>;

UMono umul(const UMono& a, const UMono& b) {
  UMono r;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

void add_to(UPoly& p, const UMono& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = p.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) p.erase(it);
  }
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly r;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) add_to(r, umul(ma, mb), ca * cb);
  return r;
}

unsigned udegree(const UMono& m) {
  unsigned d = 0;
  for (auto [v, e] : m) d += e;
  return d;
}

// Series in x, lambda with UPoly coefficients, truncated at degree d.
using CPoly = std::map<std::pair<unsigned, unsigned>, UPoly>;

CPoly cmul(const CPoly& a, const CPoly& b, unsigned d) {
  CPoly r;
  for (const auto& [ea, ua] : a)
    for (const auto& [eb, ub] : b) {
      if (ea.first + ea.second + eb.first + eb.second > d) continue;
      UPoly prod = ua * ub;
      UPoly& slot = r[{ea.first + eb.first, ea.second + eb.second}];
      for (const auto& [m, c] : prod) add_to(slot, m, c);
    }
  for (auto it = r.begin(); it != r.end();) it = it->second.empty() ? r.erase(it) : std::next(it);
  return r;
}

UPoly constant(const Rational& c) {
  UPoly p;
  add_to(p, {}, c);
  return p;
}

UPoly unknown(unsigned v) { return UPoly{{UMono{{v, 1}}, Rational(1)}}; }

UPoly substitute(const UPoly& p, const std::map<unsigned, Rational>& known) {
  UPoly r;
  for (const auto& [m, c] : p) {
    Rational coef = c;
    UMono rest;
    for (auto [v, e] : m) {
      auto it = known.find(v);
      if (it == known.end()) {
        rest.emplace_back(v, e);
      } else {
        Rational pw = 1;
        for (unsigned k = 0; k < e; ++k) pw *= it->second;
        coef *= pw;
      }
    }
    add_to(r, rest, coef);
  }
  return r;
}

std::set<unsigned> vars_of(const UPoly& p) {
  std::set<unsigned> s;
  for (const auto& [m, c] : p)
    for (auto [v, e] : m) s.insert(v);
  return s;
}

bool is_linear(const UPoly& p) {
  for (const auto& [m, c] : p)
    if (udegree(m) > 1) return false;
  return true;
}

class Solver {
 public:
  Solver(const Polynomial& g, const Polynomial& f, unsigned k) : g_(g), f_(f), k_(k) {
    for (unsigned d = 1; d <= k; ++d)
      for (unsigned j = 0; j <= d; ++j) xvar_[{d - j, j}] = next_++;
    for (unsigned d = 0; d + 1 <= k; ++d)
      for (unsigned j = 0; j <= d; ++j) svar_[{d - j, j}] = next_++;
    a_ = xvar_.at({1, 0});
    s0_ = svar_.at({0, 0});
    for (const auto& [e, v] : xvar_) is_x_.insert(v);
  }

  ContactTransformation run() {
    for (unsigned d = 1; d <= k_; ++d) stage(d);
    ContactTransformation t;
    t.degree = k_;
    std::vector<Term> xt, st;
    for (const auto& [e, v] : xvar_) xt.push_back({value(v), Monomial{e.first, e.second}});
    for (const auto& [e, v] : svar_) st.push_back({value(v), Monomial{e.first, e.second}});
    t.X = Polynomial::from_terms(xt);
    t.S = Polynomial::from_terms(st);
    if (sgn(t.X.coeff(Monomial{1, 0})) <= 0 || sgn(t.S.coeff(Monomial{})) <= 0)
      throw std::domain_error("transformation violates X_x(0,0) > 0 or S(0,0) > 0");
    return t;
  }

 private:
  Rational value(unsigned v) const {
    auto it = known_.find(v);
    if (it != known_.end()) return it->second;
    return (v == a_ || v == s0_) ? Rational(1) : Rational(0);
  }

  UPoly coeff_or_unknown(unsigned v) const {
    auto it = known_.find(v);
    return it != known_.end() ? constant(it->second) : unknown(v);
  }

  std::vector<UPoly> equations(unsigned d) const {
    CPoly Xs, Ss, lam;
    for (const auto& [e, v] : xvar_)
      if (e.first + e.second <= d) Xs[e] = coeff_or_unknown(v);
    for (const auto& [e, v] : svar_)
      if (e.first + e.second + 1 <= d) Ss[e] = coeff_or_unknown(v);
    lam[{0, 1}] = constant(1);
    // g(X, lambda) up to degree d
    unsigned maxp = 0;
    for (const auto& t : g_.terms()) maxp = std::max(maxp, t.mono[0]);
    std::vector<CPoly> xp{CPoly{{{0, 0}, constant(1)}}};
    for (unsigned p = 1; p <= maxp; ++p) xp.push_back(cmul(xp.back(), Xs, d));
    CPoly gx;
    for (const auto& t : g_.terms()) {
      if (t.mono.degree() > d) continue;
      CPoly term = xp[t.mono[0]];
      for (unsigned q = 0; q < t.mono[1]; ++q) term = cmul(term, lam, d);
      for (const auto& [e, u] : term)
        for (const auto& [m, c] : u) add_to(gx[e], m, c * t.coeff);
    }
    CPoly sg = cmul(Ss, gx, d);
    std::map<std::pair<unsigned, unsigned>, UPoly> R;
    for (const auto& t : f_.terms())
      if (t.mono.degree() <= d) add_to(R[{t.mono[0], t.mono[1]}], {}, t.coeff);
    for (const auto& [e, u] : sg)
      for (const auto& [m, c] : u) add_to(R[e], m, -c);
    std::vector<UPoly> out;
    for (auto& [e, u] : R)
      if (!u.empty()) out.push_back(u);
    return out;
  }

  bool solve_univariate(const UPoly& eq, unsigned v) {
    Rational c0 = 0, c1 = 0;
    unsigned top = 0;
    Rational ctop = 0;
    std::size_t nterms = 0;
    for (const auto& [m, c] : eq) {
      unsigned e = udegree(m);
      if (e == 0) c0 = c;
      if (e == 1) c1 = c;
      if (e > top) {
        top = e;
        ctop = c;
      }
      ++nterms;
    }
    if (top == 1) {
      Rational r = -c0 / c1;
      if ((v == a_ || v == s0_) && sgn(r) <= 0)
        throw std::domain_error(v == a_ ? "equivalence needs X_x(0,0) <= 0" : "equivalence needs S(0,0) <= 0");
      known_[v] = r;
      return true;
    }
    bool binomial = nterms == 2 && sgn(c0) != 0;
    if (!binomial) return false;
    Rational r;
    Rational target = -c0 / ctop;
    bool positive_needed = v == a_ || v == s0_;
    if (top % 2 == 0) {
      if (sgn(target) < 0 || !rational_root(target, top, r))
        throw std::domain_error("no rational solution for a transformation coefficient");
      if (!positive_needed && sgn(r) < 0) r = -r;
    } else {
      bool neg = sgn(target) < 0;
      if (!rational_root(neg ? -target : target, top, r))
        throw std::domain_error("no rational solution for a transformation coefficient");
      if (neg) r = -r;
    }
    if (positive_needed && sgn(r) <= 0) throw std::domain_error("transformation needs a non-positive leading coefficient");
    known_[v] = r;
    return true;
  }

  void solve_linear(const std::vector<UPoly>& eqs) {
    // columns: a and S(0,0) first, then S coefficients, then X coefficients
    std::set<unsigned> vs;
    for (const auto& e : eqs)
      for (unsigned v : vars_of(e)) vs.insert(v);
    std::vector<unsigned> cols;
    for (unsigned v : {a_, s0_})
      if (vs.count(v)) cols.push_back(v);
    for (unsigned v : vs)
      if (v != a_ && v != s0_ && !is_x_.count(v)) cols.push_back(v);
    for (unsigned v : vs)
      if (v != a_ && v != s0_ && is_x_.count(v)) cols.push_back(v);
    std::map<unsigned, std::size_t> col;
    for (std::size_t i = 0; i < cols.size(); ++i) col[cols[i]] = i;
    std::size_t n = cols.size();
    std::vector<std::vector<Rational>> rows;
    for (const auto& e : eqs) {
      std::vector<Rational> r(n + 1, 0);
      for (const auto& [m, c] : e) {
        if (m.empty())
          r[n] = -c;
        else
          r[col.at(m.front().first)] = c;
      }
      rows.push_back(r);
    }
    std::vector<std::size_t> pivcol;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
      std::size_t p = rank;
      while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[rank]);
      Rational inv = 1 / rows[rank][c];
      for (auto& x : rows[rank]) x *= inv;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == rank || sgn(rows[r][c]) == 0) continue;
        Rational f = rows[r][c];
        for (std::size_t j = c; j <= n; ++j) rows[r][j] -= f * rows[rank][j];
      }
      pivcol.push_back(c);
      ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r)
      if (sgn(rows[r][n]) != 0) throw std::domain_error("inconsistent transformation equations");
    // free unknowns take their defaults, pivots follow
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivcol) is_pivot[c] = true;
    for (std::size_t c = 0; c < n; ++c)
      if (!is_pivot[c]) known_[cols[c]] = value(cols[c]);
    for (std::size_t r = 0; r < rank; ++r) {
      Rational v = rows[r][n];
      for (std::size_t c = pivcol[r] + 1; c < n; ++c)
        if (!is_pivot[c]) v -= rows[r][c] * known_.at(cols[c]);
      known_[cols[pivcol[r]]] = v;
    }
  }

  // Two equations c * a^p * S0^q = r in the positive scalings a = X_x(0,0), S0 = S(0,0)
  // fix one of them: a^(p1 q2 - p2 q1) = r1^q2 / r2^q1.
  bool solve_scaling_pair(const std::vector<UPoly>& eqs) {
    struct Mono {
      unsigned p, q;
      Rational r;
    };
    std::vector<Mono> ms;
    for (const auto& e : eqs) {
      if (e.size() != 2 || !e.begin()->first.empty()) continue;
      const auto& [m, c] = *std::next(e.begin());
      unsigned p = 0, q = 0;
      bool ok = true;
      for (auto [v, ex] : m) {
        if (v == a_) p = ex;
        else if (v == s0_) q = ex;
        else ok = false;
      }
      Rational r = -e.begin()->second / c;
      if (ok && p > 0 && q > 0 && sgn(r) > 0) ms.push_back({p, q, r});
    }
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = i + 1; j < ms.size(); ++j) {
        long D = long(ms[i].p) * ms[j].q - long(ms[j].p) * ms[i].q;
        if (D == 0) continue;
        Rational R = 1;
        for (unsigned t = 0; t < ms[j].q; ++t) R *= ms[i].r;
        for (unsigned t = 0; t < ms[i].q; ++t) R /= ms[j].r;
        if (D < 0) {
          R = 1 / R;
          D = -D;
        }
        Rational a;
        if (!rational_root(R, unsigned(D), a))
          throw std::domain_error("no rational solution for a transformation coefficient");
        if (sgn(a) < 0) a = -a;
        known_[a_] = a;
        return true;
      }
    return false;
  }

  void stage(unsigned d) {
    for (int guard = 0; guard < 1000; ++guard) {
      std::vector<UPoly> eqs;
      for (const auto& e : equations(d)) {
        UPoly s = substitute(e, known_);
        if (s.empty()) continue;
        if (s.size() == 1 && s.begin()->first.empty())
          throw std::domain_error("germs are not strongly equivalent up to degree " + std::to_string(d));
        eqs.push_back(s);
      }
      if (eqs.empty()) return;
      bool progress = false;
      for (const auto& e : eqs) {
        auto vs = vars_of(e);
        if (vs.size() == 1 && solve_univariate(e, *vs.begin())) {
          progress = true;
          break;
        }
      }
      if (progress) continue;
      bool linear = std::all_of(eqs.begin(), eqs.end(), is_linear);
      if (linear) {
        solve_linear(eqs);
        continue;
      }
      if (solve_scaling_pair(eqs)) continue;
      // nonlinear leftovers wait for higher degrees
      if (d < k_) return;
      std::optional<unsigned> pick;
      for (const auto& e : eqs)
        for (const auto& [m, c] : e)
          if (udegree(m) > 1)
            for (auto [v, ex] : m)
              if (is_x_.count(v) && v != a_ && (!pick || v > *pick)) pick = v;
      if (!pick)
        for (unsigned v : {s0_, a_})
          if (!known_.count(v)) {
            pick = v;
            break;
          }
      if (!pick) throw std::domain_error("nonlinear transformation equations at degree " + std::to_string(d));
      known_[*pick] = value(*pick);
    }
    throw std::domain_error("transformation solver did not converge");
  }

  Polynomial g_, f_;
  unsigned k_;
  unsigned next_ = 0;
  std::map<std::pair<unsigned, unsigned>, unsigned> xvar_, svar_;
  std::set<unsigned> is_x_;
  unsigned a_ = 0, s0_ = 0;
  std::map<unsigned, Rational> known_;
};

}  // namespace

Polynomial transformation_residual(const Polynomial& g, const Polynomial& f, const ContactTransformation& t) {
  int k = int(t.degree);
  Polynomial gX = g.truncated(t.degree).substitute(0, t.X, k);
  return (f.truncated(t.degree) - Polynomial::mul_trunc(t.S, gX, k)).truncated(t.degree);
}

ContactTransformation transformation_solve(const Polynomial& g, const Polynomial& f, unsigned k) {
  if (k == 0) throw std::invalid_argument("transformation degree must be positive");
  Solver s(g.truncated(k), f.truncated(k), k);
  ContactTransformation t = s.run();
  if (!transformation_residual(g, f, t).is_zero()) throw std::domain_error("transformation residual is not zero");
  return t;
}

ContactTransformation transformation_solve(const SingularGerm& g, const Polynomial& f, unsigned k) {
  return transformation_solve(taylor_jet(g.expr, k).poly, f, k);
}

}  // namespace germforge
