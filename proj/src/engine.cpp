#include "germforge/engine.hpp"

#include <algorithm>
#include <list>

namespace germforge::engine {

Terms ordered(const Polynomial& p, const MonomialOrder& o, int N) {
  Terms t;
  t.reserve(p.size());
  for (const auto& term : p.terms())
    if (N < 0 || int(term.mono.degree()) <= N) t.push_back(term);
  std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return o.cmp(a.mono, b.mono) > 0; });
  return t;
}

Polynomial to_poly(Terms t) { return Polynomial::from_terms(std::move(t)); }

std::uint64_t sev(const Monomial& m) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = m[i];
    for (unsigned k = 0; k < 4 && k < e; ++k) s |= std::uint64_t(1) << (4 * i + k);
  }
  return s;
}

Divisor make_divisor(Terms t) {
  Divisor d;
  d.t = std::move(t);
  if (!d.t.empty()) d.mask = sev(d.t.front().mono);
  return d;
}

Terms sub_mul(const Terms& p, std::size_t start, const Rational& c, const Monomial& m, const Terms& g,
              const MonomialOrder& o, int N, bool& truncated) {
  Terms out;
  out.reserve(p.size() - start + g.size());
  std::size_t i = start, j = 0;
  Monomial gm;
  bool have = false;
  auto next_g = [&]() {
    while (j < g.size()) {
      if (N >= 0 && int(g[j].mono.degree() + m.degree()) > N) {
        truncated = true;
        ++j;
        continue;
      }
      gm = g[j].mono * m;
      have = true;
      return;
    }
    have = false;
  };
  next_g();
  while (i < p.size() || have) {
    if (!have) {
      out.push_back(p[i++]);
      continue;
    }
    if (i == p.size()) {
      out.push_back({-c * g[j].coeff, gm});
      ++j;
      next_g();
      continue;
    }
    int cmp = o.cmp(p[i].mono, gm);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back({-c * g[j].coeff, gm});
      ++j;
      next_g();
    } else {
      Rational v = p[i].coeff - c * g[j].coeff;
      if (sgn(v) != 0) out.push_back({std::move(v), gm});
      ++i;
      ++j;
      next_g();
    }
  }
  return out;
}

Terms reduce(Terms f, const std::vector<const Divisor*>& divs, const MonomialOrder& o, int N, bool& truncated,
             std::vector<std::vector<Term>>* quotients) {
  Terms rem;
  std::size_t s = 0;
  while (s < f.size()) {
    const Term& lt = f[s];
    std::uint64_t mask = sev(lt.mono);
    std::size_t hit = divs.size();
    for (std::size_t k = 0; k < divs.size(); ++k) {
      const Divisor& d = *divs[k];
      if (d.t.empty() || (d.mask & ~mask)) continue;
      if (d.t.front().mono.divides(lt.mono)) {
        hit = k;
        break;
      }
    }
    if (hit == divs.size()) {
      rem.push_back(lt);
      ++s;
      continue;
    }
    const Terms& g = divs[hit]->t;
    Rational c = lt.coeff / g.front().coeff;
    Monomial m = lt.mono / g.front().mono;
    if (quotients) (*quotients)[hit].push_back({c, m});
    f = sub_mul(f, s, c, m, g, o, N, truncated);
    s = 0;
  }
  return rem;
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

void make_monic(Terms& t) {
  if (t.empty()) return;
  Rational c = t.front().coeff;
  if (c == 1) return;
  for (auto& x : t) x.coeff /= c;
}

}  // namespace

std::vector<Terms> buchberger(const std::vector<Terms>& input, const MonomialOrder& o, int N, bool monic_new) {
  std::vector<Divisor> basis;
  std::vector<unsigned> sugar;
  std::vector<bool> active;
  std::vector<Pair> pairs;
  basis.reserve(input.size() + 64);

  auto lm = [&](std::size_t k) -> const Monomial& { return basis[k].t.front().mono; };

  auto pair_sugar = [&](std::size_t i, std::size_t j, const Monomial& l) {
    return std::max(sugar[i] + l.degree() - lm(i).degree(), sugar[j] + l.degree() - lm(j).degree());
  };

  auto update = [&](std::size_t h) {
    const Monomial lh = lm(h);
    std::vector<Pair> C;
    for (std::size_t g = 0; g < h; ++g)
      if (active[g]) C.push_back({g, h, Monomial::lcm(lm(g), lh), 0});
    std::vector<Pair> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      const Pair& p = C[a];
      bool keep = Monomial::coprime(lm(p.i), lh);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (C[b].lcm.divides(p.lcm)) keep = false;
        for (std::size_t b = 0; b < D.size() && keep; ++b)
          if (D[b].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> next;
    next.reserve(pairs.size() + D.size());
    for (const Pair& p : pairs) {
      if (lh.divides(p.lcm) && Monomial::lcm(lm(p.i), lh) != p.lcm && Monomial::lcm(lm(p.j), lh) != p.lcm)
        continue;
      next.push_back(p);
    }
    for (Pair& p : D) {
      if (Monomial::coprime(lm(p.i), lh)) continue;
      if (N >= 0 && int(p.lcm.degree()) > N) continue;
      p.sugar = pair_sugar(p.i, p.j, p.lcm);
      next.push_back(p);
    }
    pairs = std::move(next);
    for (std::size_t g = 0; g < h; ++g)
      if (active[g] && lh.divides(lm(g))) active[g] = false;
  };

  auto add = [&](Terms t, unsigned s) {
    basis.push_back(make_divisor(std::move(t)));
    sugar.push_back(s);
    active.push_back(true);
    update(basis.size() - 1);
  };

  for (const Terms& t : input) {
    Terms tt;
    for (const auto& term : t)
      if (N < 0 || int(term.mono.degree()) <= N) tt.push_back(term);
    if (tt.empty()) continue;
    unsigned deg = 0;
    for (const auto& term : tt) deg = std::max(deg, term.mono.degree());
    add(std::move(tt), deg);
  }

  // sugar for local orders, the normal strategy (smallest lcm) for global ones;
  // sugar on lex and block orders blows up the coefficients
  const bool use_sugar = o.is_local();
  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Pair& a = pairs[k];
      const Pair& b = pairs[best];
      bool less = use_sugar && a.sugar != b.sugar ? a.sugar < b.sugar : o.cmp(a.lcm, b.lcm) < 0;
      if (less) best = k;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + std::ptrdiff_t(best));

    const Terms& f = basis[p.i].t;
    const Terms& g = basis[p.j].t;
    bool trunc = false;
    Monomial mf = p.lcm / f.front().mono, mg = p.lcm / g.front().mono;
    Terms s;
    {
      Terms a;
      a.reserve(f.size());
      Rational cf = 1 / f.front().coeff;
      for (const auto& t : f)
        if (N < 0 || int(t.mono.degree() + mf.degree()) <= N) a.push_back({t.coeff * cf, t.mono * mf});
      s = sub_mul(a, 0, 1 / g.front().coeff, mg, g, o, N, trunc);
    }
    std::vector<const Divisor*> divs;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (active[k]) divs.push_back(&basis[k]);
    Terms r = reduce(std::move(s), divs, o, N, trunc);
    if (r.empty()) continue;
    if (monic_new) make_monic(r);
    add(std::move(r), p.sugar);
  }

  std::vector<Terms> out;
  out.reserve(basis.size());
  for (auto& d : basis) out.push_back(std::move(d.t));
  return out;
}

std::vector<Terms> interreduce(std::vector<Terms> basis, const MonomialOrder& o, int N) {
  basis.erase(std::remove_if(basis.begin(), basis.end(), [](const Terms& t) { return t.empty(); }), basis.end());
  std::vector<Terms> minimal;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    const Monomial& la = basis[a].front().mono;
    bool redundant = false;
    for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
      if (a == b) continue;
      const Monomial& lb = basis[b].front().mono;
      if (lb.divides(la) && (lb != la || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[a]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Terms& a, const Terms& b) { return o.cmp(a.front().mono, b.front().mono) < 0; });
  std::vector<Divisor> divs;
  for (auto& t : minimal) divs.push_back(make_divisor(t));
  for (std::size_t a = 0; a < divs.size(); ++a) {
    std::vector<const Divisor*> ptrs;
    for (const auto& d : divs) ptrs.push_back(&d);
    Terms tail(divs[a].t.begin() + 1, divs[a].t.end());
    bool trunc = false;
    Terms r = reduce(std::move(tail), ptrs, o, N, trunc);
    Terms g;
    g.reserve(r.size() + 1);
    g.push_back(divs[a].t.front());
    g.insert(g.end(), r.begin(), r.end());
    make_monic(g);
    divs[a] = make_divisor(std::move(g));
  }
  std::vector<Terms> out;
  for (auto& d : divs) out.push_back(std::move(d.t));
  return out;
}

}  // namespace germforge::engine
