#include "germforge/transition.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "germforge/ideal.hpp"
#include "germforge/roots.hpp"

namespace germforge {

namespace {

// (P(x1) - P(x2)) / (x1 - x2) where x1 is variable a and x2 variable b.
Polynomial divided_difference(const Polynomial& P, std::size_t a, std::size_t b) {
  std::vector<Term> out;
  for (const auto& t : P.terms()) {
    unsigned e = t.mono[a];
    Monomial rest = t.mono;
    rest.set(a, 0);
    for (unsigned i = 0; i < e; ++i) {
      Monomial m = rest;
      m.set(a, i);
      m.set(b, rest[b] + e - 1 - i);
      out.push_back({t.coeff, m});
    }
  }
  return Polynomial::from_terms(out);
}

// Renumbers variable i to map[i].
Polynomial renumber(const Polynomial& p, const std::vector<std::size_t>& map) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < map.size(); ++i)
      if (t.mono[i]) m.set(map[i], t.mono[i]);
    out.push_back({t.coeff, m});
  }
  return Polynomial::from_terms(out);
}

bool degree_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  if (a.size() != b.size()) return a.size() < b.size();
  return to_string(a) < to_string(b);
}

struct Compiled {
  std::vector<Polynomial> f;
  std::vector<std::vector<Polynomial>> df;  // df[i][j] = d f_i / d w_j
};

Compiled compile(const WitnessSystem& sys) {
  Compiled c;
  c.f = sys.eqs;
  for (const auto& e : sys.eqs) {
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < sys.nw; ++j) row.push_back(e.derivative(j));
    c.df.push_back(row);
  }
  return c;
}

// Solves the n x n system A d = b in place, n <= 4.
bool solve_small(std::vector<std::vector<double>> A, std::vector<double> b, std::vector<double>& d) {
  std::size_t n = b.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::fabs(A[r][c]) > std::fabs(A[p][c])) p = r;
    if (std::fabs(A[p][c]) < 1e-300) return false;
    std::swap(A[p], A[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      double f = A[r][c] / A[c][c];
      for (std::size_t j = c; j < n; ++j) A[r][j] -= f * A[c][j];
      b[r] -= f * b[c];
    }
  }
  d.assign(n, 0);
  for (std::size_t c = n; c-- > 0;) {
    double s = b[c];
    for (std::size_t j = c + 1; j < n; ++j) s -= A[c][j] * d[j];
    d[c] = s / A[c][c];
  }
  return true;
}

double norm2(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return s;
}

}  // namespace

Polynomial primitive(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer den = 1, num = 0;
  for (const auto& t : p.terms()) den = lcm(den, Integer(t.coeff.get_den()));
  for (const auto& t : p.terms()) num = gcd(num, Integer(t.coeff.get_num()));
  Rational s = Rational(den) / Rational(num);
  if (sgn(p.terms().front().coeff) < 0) s = -s;
  return p.scaled(s);
}

std::vector<Polynomial> eliminate(std::vector<Polynomial> F, std::size_t n_elim, std::size_t n_keep) {
  // variables of the eliminated block occurring as c*v + (terms free of v)
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i < F.size() && !again; ++i)
      for (std::size_t v = 0; v < n_elim && !again; ++v) {
        Polynomial d = F[i].derivative(v);
        if (d.is_zero() || d.degree() != 0) continue;
        Polynomial r = F[i] - Polynomial::var(v) * d;
        if (r.uses_var(v)) continue;
        Polynomial sub = r.scaled(-1 / d.terms().front().coeff);
        std::vector<Polynomial> next;
        for (std::size_t j = 0; j < F.size(); ++j)
          if (j != i) {
            Polynomial q = F[j].substitute(v, sub);
            if (!q.is_zero()) next.push_back(q);
          }
        F = std::move(next);
        again = true;
      }
  }
  F.erase(std::remove_if(F.begin(), F.end(), [](const Polynomial& p) { return p.is_zero(); }), F.end());
  if (F.empty()) return {};
  std::size_t n = n_elim + n_keep;
  MonomialOrder o = n_keep == 0 ? MonomialOrder::degrevlex(n) : MonomialOrder::block({n_elim, n_keep});
  IdealBasis R = reduce_basis(groebner_basis(IdealBasis::poly(F, o)));
  std::vector<std::size_t> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = i < n_elim ? 0 : i - n_elim;
  std::vector<Polynomial> out;
  for (const auto& g : R.gens()) {
    bool kept = true;
    for (std::size_t v = 0; v < n_elim; ++v) kept = kept && !g.uses_var(v);
    if (kept) out.push_back(primitive(renumber(g, map)));
  }
  std::sort(out.begin(), out.end(), degree_less);
  return out;
}

std::string SideCondition::text(const std::vector<std::string>& params) const {
  std::ostringstream s;
  switch (kind) {
    case Kind::AllReal:
      s << "realized at every sample";
      break;
    case Kind::EmptyReal:
      s << "empty-real";
      break;
    case Kind::Sign:
      s << params.at(param) << (sign < 0 ? " <= 0" : " >= 0");
      break;
    case Kind::Mixed:
      s << "mixed";
      break;
    case Kind::Undetermined:
      s << "undetermined";
      break;
  }
  s << " (" << realized << "/" << sampled << " samples realized)";
  return s.str();
}

bool find_witness(const WitnessSystem& sys, const std::vector<double>& alpha, const WitnessOptions& opt,
                  std::vector<double>* out) {
  static thread_local const WitnessSystem* cached_sys = nullptr;
  static thread_local Compiled cached;
  if (cached_sys != &sys || cached.f.size() != sys.eqs.size() || cached.f != sys.eqs) {
    cached = compile(sys);
    cached_sys = &sys;
  }
  const Compiled& c = cached;
  std::size_t n = sys.nw, m = c.f.size();
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> U(-opt.radius, opt.radius);
  std::vector<double> pt(n + alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) pt[n + i] = alpha[i];
  auto residual = [&](const std::vector<double>& w, std::vector<double>& F) {
    for (std::size_t j = 0; j < n; ++j) pt[j] = w[j];
    F.resize(m);
    for (std::size_t i = 0; i < m; ++i) F[i] = c.f[i].eval(pt);
    return norm2(F);
  };
  for (unsigned s = 0; s < opt.starts; ++s) {
    std::vector<double> w(n);
    for (auto& x : w) x = U(rng);
    if (sys.distinct && w[sys.i1] > w[sys.i2]) std::swap(w[sys.i1], w[sys.i2]);
    std::vector<double> F;
    double r = residual(w, F);
    double mu = 1e-3;
    for (unsigned it = 0; it < opt.iterations && r > opt.tol * opt.tol; ++it) {
      std::vector<std::vector<double>> J(m, std::vector<double>(n));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) J[i][j] = c.df[i][j].eval(pt);
      std::vector<std::vector<double>> A(n, std::vector<double>(n, 0));
      std::vector<double> g(n, 0);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          g[j] -= J[i][j] * F[i];
          for (std::size_t k = 0; k < n; ++k) A[j][k] += J[i][j] * J[i][k];
        }
      bool improved = false;
      for (int tries = 0; tries < 8 && !improved; ++tries) {
        auto Am = A;
        for (std::size_t j = 0; j < n; ++j) Am[j][j] += mu * (1 + A[j][j]);
        std::vector<double> d;
        if (!solve_small(Am, g, d)) {
          mu *= 10;
          continue;
        }
        std::vector<double> w2(n);
        for (std::size_t j = 0; j < n; ++j) w2[j] = w[j] + d[j];
        std::vector<double> F2;
        double r2 = residual(w2, F2);
        if (r2 < r) {
          w = w2;
          F = F2;
          r = r2;
          mu = std::max(mu / 10, 1e-12);
          improved = true;
        } else {
          mu *= 10;
        }
      }
      residual(w, F);
      if (!improved) break;
    }
    bool finite = true;
    for (double x : w) finite = finite && std::isfinite(x) && std::fabs(x) < 1e3;
    if (!finite || r > opt.tol * opt.tol) continue;
    if (sys.distinct && std::fabs(w[sys.i1] - w[sys.i2]) < 1e-5 * (1 + std::fabs(w[sys.i1]))) continue;
    if (out) *out = w;
    return true;
  }
  return false;
}

std::vector<SideCondition> real_filter(const WitnessSystem& sys, const std::vector<Polynomial>& variety,
                                       std::size_t nparams, const TransitionOptions& opt) {
  SideCondition und;
  if (variety.size() != 1 || nparams == 0) return {und};
  const Polynomial& sigma = variety.front();
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<long> coord(-1024, 1024);
  std::vector<std::size_t> axes;
  for (std::size_t j = 0; j < nparams; ++j)
    if (sigma.uses_var(j)) axes.push_back(j);
  if (axes.empty()) return {und};
  std::vector<std::pair<std::vector<double>, bool>> pts;
  WitnessOptions wo;
  for (unsigned attempt = 0; attempt < opt.samples * 4 && pts.size() < opt.samples; ++attempt) {
    std::size_t j = axes[attempt % axes.size()];
    std::vector<std::pair<std::size_t, Polynomial>> subs;
    std::vector<double> alpha(nparams, 0);
    for (std::size_t i = 0; i < nparams; ++i)
      if (i != j) {
        Rational v = Rational(coord(rng), 1024) * from_double(opt.box);
        alpha[i] = to_double(v);
        subs.emplace_back(i, Polynomial(v));
      }
    Polynomial u = sigma.substitute(subs);
    if (u.is_zero()) continue;
    auto roots = real_roots(to_unipoly(u, j));
    std::vector<double> inside;
    for (const auto& r : roots)
      if (std::fabs(r.value) <= opt.box) inside.push_back(r.value);
    if (inside.empty()) continue;
    alpha[j] = inside[std::uniform_int_distribution<std::size_t>(0, inside.size() - 1)(rng)];
    pts.emplace_back(alpha, find_witness(sys, alpha, wo));
  }
  SideCondition base;
  base.sampled = pts.size();
  for (const auto& p : pts) base.realized += p.second;
  if (base.sampled == 0) return {base};
  if (base.realized == base.sampled) {
    base.kind = SideCondition::Kind::AllReal;
    return {base};
  }
  if (base.realized == 0) {
    base.kind = SideCondition::Kind::EmptyReal;
    return {base};
  }
  std::vector<SideCondition> out;
  const double eps = 1e-9;
  for (std::size_t j = 0; j < nparams; ++j)
    for (int s : {-1, 1}) {
      bool sep = true;
      for (const auto& [a, real] : pts) sep = sep && (real == (s * a[j] >= -eps));
      if (sep) {
        SideCondition c = base;
        c.kind = SideCondition::Kind::Sign;
        c.param = j;
        c.sign = s;
        out.push_back(c);
      }
    }
  if (out.empty()) {
    base.kind = SideCondition::Kind::Mixed;
    out.push_back(base);
  }
  return out;
}

std::vector<Polynomial> TransitionSet::sigma() const {
  std::vector<Polynomial> s;
  for (const auto* c : components())
    if (!c->empty && !c->full)
      for (const auto& g : c->gens)
        if (std::find(s.begin(), s.end(), g) == s.end()) s.push_back(g);
  return s;
}

TransitionSet transition_set(const Unfolding& G, const TransitionOptions& opt) {
  std::size_t k = G.size();
  if (k + 4 > kMaxVars) throw std::invalid_argument("too many parameters for the transition set");
  TransitionSet T;
  T.params = G.parameters;
  const Polynomial& g = G.poly;
  Polynomial gx = g.derivative(0), gl = g.derivative(1), gxx = gx.derivative(0);

  auto finish = [&](TransitionComponent& c, const std::string& name, std::vector<Polynomial> gens) {
    c.name = name;
    c.gens = std::move(gens);
    c.full = c.gens.empty();
    c.empty = c.gens.size() == 1 && c.gens.front().degree() == 0;
    if (opt.filter && !c.empty && !c.full) c.side = real_filter(c.system, c.gens, k, opt);
  };

  T.B.system = {2, {g, gx, gl}};
  finish(T.B, "B", eliminate({g, gx, gl}, 2, k));
  T.H.system = {2, {g, gx, gxx}};
  finish(T.H, "H", eliminate({g, gx, gxx}, 2, k));

  // elimination ring: x1, lambda, x2, zeta, alpha...
  std::vector<std::size_t> up(2 + k);
  up[0] = 0;
  up[1] = 1;
  for (std::size_t i = 0; i < k; ++i) up[2 + i] = 4 + i;
  Polynomial G1 = renumber(g, up), Gx1 = renumber(gx, up);
  Polynomial zeta = Polynomial(1) - Polynomial::var(3) * (Polynomial::var(0) - Polynomial::var(2));
  auto dgens = eliminate({G1, divided_difference(G1, 0, 2), Gx1, divided_difference(Gx1, 0, 2), zeta}, 4, k);

  // witness ring: x1, lambda, x2, alpha...
  std::vector<std::size_t> wmap(2 + k);
  wmap[0] = 0;
  wmap[1] = 1;
  for (std::size_t i = 0; i < k; ++i) wmap[2 + i] = 3 + i;
  Polynomial W1 = renumber(g, wmap), Wx1 = renumber(gx, wmap);
  std::vector<std::size_t> swap(3 + k);
  for (std::size_t i = 0; i < 3 + k; ++i) swap[i] = i;
  swap[0] = 2;
  swap[2] = 0;
  T.D.system = {3, {W1, renumber(W1, swap), Wx1, renumber(Wx1, swap)}, true, 0, 2};
  finish(T.D, "D", dgens);
  return T;
}

}  // namespace germforge
