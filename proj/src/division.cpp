#include <algorithm>
#include <stdexcept>

#include "germforge/engine.hpp"
#include "germforge/ideal.hpp"

namespace germforge {

using engine::Terms;

IdealBasis::IdealBasis(std::vector<Polynomial> gens, MonomialOrder order, RingKind ring, unsigned N)
    : order_(std::move(order)), ring_(ring), N_(N) {
  if (ring_ == RingKind::LocalJet && !order_.is_local())
    throw std::invalid_argument("the jet ring needs a local order");
  if (ring_ == RingKind::GlobalPoly && order_.is_local())
    throw std::invalid_argument("the polynomial ring needs a global order");
  for (auto& g : gens) {
    Polynomial h = is_jet() ? g.truncated(N_) : std::move(g);
    if (h.is_zero()) continue;
    for (const auto& t : h.terms())
      if (!order_.covers(t.mono)) throw std::invalid_argument("generator uses a variable outside the order");
    gens_.push_back(std::move(h));
  }
}

IdealBasis IdealBasis::jet(std::vector<Polynomial> gens, unsigned N, MonomialOrder order) {
  return IdealBasis(std::move(gens), std::move(order), RingKind::LocalJet, N);
}

IdealBasis IdealBasis::poly(std::vector<Polynomial> gens, MonomialOrder order) {
  return IdealBasis(std::move(gens), std::move(order), RingKind::GlobalPoly, 0);
}

IdealBasis IdealBasis::with_gens(std::vector<Polynomial> gens) const {
  IdealBasis b(std::move(gens), order_, ring_, N_);
  b.meta = meta;
  return b;
}

namespace {

std::vector<engine::Divisor> divisors(const IdealBasis& B) {
  std::vector<engine::Divisor> d;
  d.reserve(B.size());
  for (const auto& g : B.gens()) d.push_back(engine::make_divisor(engine::ordered(g, B.order(), B.bound())));
  return d;
}

std::vector<const engine::Divisor*> pointers(const std::vector<engine::Divisor>& d) {
  std::vector<const engine::Divisor*> p;
  for (const auto& x : d) p.push_back(&x);
  return p;
}

std::vector<Terms> to_terms(const IdealBasis& B) {
  std::vector<Terms> t;
  for (const auto& g : B.gens()) t.push_back(engine::ordered(g, B.order(), B.bound()));
  return t;
}

std::vector<Polynomial> to_polys(std::vector<Terms> t) {
  std::vector<Polynomial> out;
  for (auto& x : t) out.push_back(engine::to_poly(std::move(x)));
  return out;
}

}  // namespace

DivisionResult divide(const Polynomial& f, const IdealBasis& B) {
  auto d = divisors(B);
  std::vector<std::vector<Term>> q(d.size());
  DivisionResult r;
  Terms rem = engine::reduce(engine::ordered(f, B.order(), B.bound()), pointers(d), B.order(), B.bound(),
                             r.truncated, &q);
  if (B.is_jet() && f.degree() > int(B.degree())) r.truncated = true;
  r.remainder = engine::to_poly(std::move(rem));
  for (auto& qi : q) {
    Polynomial p = Polynomial::from_terms(std::move(qi));
    r.quotients.push_back(B.is_jet() ? p.truncated(B.degree()) : p);
  }
  return r;
}

Polynomial remainder(const Polynomial& f, const IdealBasis& B) {
  auto d = divisors(B);
  bool trunc = false;
  return engine::to_poly(
      engine::reduce(engine::ordered(f, B.order(), B.bound()), pointers(d), B.order(), B.bound(), trunc));
}

bool reduces_to_zero(const Polynomial& f, const IdealBasis& B) { return remainder(f, B).is_zero(); }

IdealBasis standard_basis(const IdealBasis& B) {
  auto out = engine::buchberger(to_terms(B), B.order(), B.bound(), !B.is_jet());
  return B.with_gens(to_polys(std::move(out)));
}

IdealBasis reduce_basis(const IdealBasis& B) {
  auto sb = engine::buchberger(to_terms(B), B.order(), B.bound(), !B.is_jet());
  auto red = engine::interreduce(std::move(sb), B.order(), B.bound());
  return B.with_gens(to_polys(std::move(red)));
}

IdealBasis groebner_basis(const IdealBasis& B) {
  if (B.is_jet()) throw std::invalid_argument("groebner_basis needs the polynomial ring");
  return reduce_basis(B);
}

StandardBasisCheck is_standard_basis(const IdealBasis& B) {
  StandardBasisCheck c;
  const auto& g = B.gens();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      Polynomial s = s_germ(B.order(), g[i], g[j]);
      if (B.is_jet()) s = s.truncated(B.degree());
      Polynomial r = remainder(s, B);
      if (!r.is_zero()) {
        c.ok = false;
        c.failures.push_back({{i, j}, r});
      }
    }
  }
  return c;
}

std::vector<Monomial> leading_monomials(const IdealBasis& B) {
  std::vector<Monomial> out;
  for (const auto& g : B.gens()) out.push_back(leading_data(B.order(), g).lm());
  return out;
}

std::vector<Monomial> lt_ideal(const IdealBasis& B) {
  auto lms = leading_monomials(B);
  std::vector<Monomial> out;
  std::sort(lms.begin(), lms.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return canonical_cmp(a, b) > 0;
  });
  for (const auto& m : lms) {
    bool red = false;
    for (const auto& h : out)
      if (h.divides(m)) red = true;
    if (!red) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return canonical_cmp(a, b) > 0; });
  return out;
}

}  // namespace germforge
