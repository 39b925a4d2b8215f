#include "germforge/ideal_analysis.hpp"

#include <algorithm>
#include <map>

namespace germforge {

std::vector<Monomial> monomials_of_degree(unsigned d) {
  std::vector<Monomial> out;
  for (unsigned b = 0; b <= d; ++b) out.push_back(Monomial{d - b, b});
  return out;
}

std::string to_string(CodimStatus s) {
  switch (s) {
    case CodimStatus::Finite: return "finite";
    case CodimStatus::Infinite: return "infinite";
    case CodimStatus::Uncertified: return "uncertified";
  }
  return "?";
}

namespace {

// Monomials in the given variables with total degree <= maxdeg.
void enumerate(const std::vector<std::size_t>& vars, std::size_t pos, unsigned left, Monomial cur,
               std::vector<Monomial>& out) {
  if (pos == vars.size()) {
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e <= left; ++e) {
    Monomial m = cur;
    m.set(vars[pos], e);
    enumerate(vars, pos + 1, left - e, m, out);
  }
}

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& lts) {
  for (const auto& l : lts)
    if (l.divides(m)) return true;
  return false;
}

std::vector<Monomial> all_up_to(const MonomialOrder& o, unsigned maxdeg) {
  std::vector<Monomial> out;
  enumerate(o.precedence(), 0, maxdeg, Monomial(), out);
  return out;
}

}  // namespace

QuotientBasis normal_set(const IdealBasis& B) {
  QuotientBasis q;
  if (B.is_jet()) {
    auto lts = lt_ideal(standard_basis(B));
    for (const auto& m : all_up_to(B.order(), B.degree())) {
      if (divisible_by_any(m, lts)) continue;
      if (m.degree() == B.degree())
        throw StaircaseError("staircase not finite within degree " + std::to_string(B.degree()));
      q.monomials.push_back(m);
    }
  } else {
    auto lts = lt_ideal(groebner_basis(B));
    unsigned bound = 0;
    for (std::size_t v : B.order().precedence()) {
      unsigned best = 0;
      for (const auto& l : lts)
        if (l.degree() == l[v] && l[v] > 0 && (best == 0 || l[v] < best)) best = l[v];
      if (best == 0) throw StaircaseError("quotient is not finite dimensional");
      bound += best;
    }
    for (const auto& m : all_up_to(B.order(), bound))
      if (!divisible_by_any(m, lts)) q.monomials.push_back(m);
  }
  std::sort(q.monomials.begin(), q.monomials.end(), display_less);
  return q;
}

MultMatrix mult_matrix(const IdealBasis& B, std::size_t var) {
  QuotientBasis q = normal_set(B);
  IdealBasis S = reduce_basis(B);
  std::map<std::vector<unsigned>, std::size_t> index;
  for (std::size_t i = 0; i < q.monomials.size(); ++i) index[q.monomials[i].exponents(kMaxVars)] = i;
  std::size_t n = q.dimension();
  MultMatrix mm;
  mm.var = var;
  mm.matrix.assign(n, std::vector<Rational>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial r = remainder(Polynomial::monomial(q.monomials[j] * Monomial::var(var)), S);
    for (const auto& t : r.terms()) mm.matrix[index.at(t.mono.exponents(kMaxVars))][j] = t.coeff;
  }
  // nilpotency: least p with matrix^p = 0
  auto mul = [n](const std::vector<std::vector<Rational>>& a, const std::vector<std::vector<Rational>>& b) {
    std::vector<std::vector<Rational>> c(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(a[i][k]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
      }
    return c;
  };
  auto is_zero = [](const std::vector<std::vector<Rational>>& a) {
    for (const auto& row : a)
      for (const auto& v : row)
        if (sgn(v) != 0) return false;
    return true;
  };
  auto p = mm.matrix;
  for (unsigned e = 1; e <= n + 1; ++e) {
    if (is_zero(p)) {
      mm.nilpotency = e;
      break;
    }
    p = mul(p, mm.matrix);
  }
  if (n == 0) mm.nilpotency = 1;
  return mm;
}

namespace {

std::optional<unsigned> pure_power(const IdealBasis& S, std::size_t var) {
  for (unsigned p = 1; p <= S.degree(); ++p)
    if (reduces_to_zero(Polynomial::monomial(Monomial::var(var, p)), S)) return p;
  return std::nullopt;
}

bool degree_contained(const IdealBasis& S, unsigned d, unsigned min_lambda = 0) {
  for (const auto& m : monomials_of_degree(d))
    if (m[1] >= min_lambda && !reduces_to_zero(Polynomial::monomial(m), S)) return false;
  return true;
}

}  // namespace

std::optional<unsigned> max_power_in_ideal(const IdealBasis& B) {
  if (!B.is_jet()) {
    IdealBasis G = groebner_basis(B);
    unsigned cap = 64;
    for (unsigned k = 0; k <= cap; ++k)
      if (degree_contained(G, k)) return k;
    return std::nullopt;
  }
  IdealBasis S = standard_basis(B);
  auto nx = pure_power(S, 0), nl = pure_power(S, 1);
  if (!nx || !nl) return std::nullopt;
  if (reduces_to_zero(Polynomial(1), S)) return 0u;
  for (unsigned k = std::max(*nx, *nl); k <= B.degree(); ++k)
    if (degree_contained(S, k)) return k;
  return std::nullopt;
}

bool power_lambda_test(const IdealBasis& B, unsigned i, unsigned j) {
  if (B.is_jet() && i + j > B.degree()) throw std::invalid_argument("power test beyond the truncation degree");
  IdealBasis S = B.is_jet() ? standard_basis(B) : groebner_basis(B);
  return degree_contained(S, i + j, j);
}

IdealBasis ideal_intersection(const IdealBasis& A, const IdealBasis& B) {
  if (A.is_jet() || B.is_jet()) throw std::invalid_argument("intersection needs the polynomial ring");
  std::size_t n = A.order().nvars();
  if (B.order().nvars() != n) throw std::invalid_argument("intersection of ideals over different variables");
  std::size_t t = 0;
  while (t < kMaxVars && (std::find(A.order().precedence().begin(), A.order().precedence().end(), t) !=
                          A.order().precedence().end()))
    ++t;
  if (t >= kMaxVars) throw std::invalid_argument("no room for the auxiliary variable");
  std::vector<std::size_t> prec{t};
  prec.insert(prec.end(), A.order().precedence().begin(), A.order().precedence().end());
  // t first, then the base order itself: the eliminated part is then already a basis for A's order
  std::vector<std::size_t> blocks{1};
  if (A.order().kind() == OrderKind::Block)
    blocks.insert(blocks.end(), A.order().block_sizes().begin(), A.order().block_sizes().end());
  else
    blocks.push_back(n);
  MonomialOrder elim = A.order().kind() == OrderKind::Lex ? MonomialOrder(OrderKind::Lex, prec, {})
                                                          : MonomialOrder(OrderKind::Block, prec, blocks);
  Polynomial tv = Polynomial::var(t);
  // reduced bases as input keep the elimination small
  std::vector<Polynomial> gens;
  for (const auto& a : groebner_basis(A).gens()) gens.push_back(tv * a);
  for (const auto& b : groebner_basis(B).gens()) gens.push_back((Polynomial(1) - tv) * b);
  IdealBasis G = groebner_basis(IdealBasis::poly(gens, elim));
  std::vector<Polynomial> kept;
  for (const auto& g : G.gens())
    if (!g.uses_var(t)) kept.push_back(g);
  return groebner_basis(IdealBasis::poly(kept, A.order()));
}

IdealBasis colon_ideal(const IdealBasis& B, const Monomial& g) {
  if (g.is_one()) return B;
  if (!B.is_jet()) {
    IdealBasis inter = ideal_intersection(B, IdealBasis::poly({Polynomial::monomial(g)}, B.order()));
    std::vector<Polynomial> q;
    for (const auto& h : inter.gens()) q.push_back(h.divided_by(g));
    return groebner_basis(B.with_gens(q));
  }
  // without a power of M the colon of the polynomial jets is used as is
  auto k = max_power_in_ideal(B);
  std::vector<Polynomial> J = B.gens();
  if (k)
    for (const auto& m : monomials_of_degree(*k)) J.push_back(Polynomial::monomial(m));
  MonomialOrder glob = MonomialOrder::degrevlex(2);
  IdealBasis inter = ideal_intersection(IdealBasis::poly(J, glob), IdealBasis::poly({Polynomial::monomial(g)}, glob));
  std::vector<Polynomial> q;
  for (const auto& h : inter.gens()) q.push_back(h.divided_by(g));
  return IdealBasis::jet(q, B.degree(), B.order());
}

bool local_monomial_membership(const std::vector<Polynomial>& gens, const Monomial& m) {
  MonomialOrder glob = MonomialOrder::degrevlex(2);
  IdealBasis I = IdealBasis::poly(gens, glob);
  if (I.size() == 0) return false;
  IdealBasis inter = ideal_intersection(I, IdealBasis::poly({Polynomial::monomial(m)}, glob));
  for (const auto& h : inter.gens()) {
    Polynomial q = h.divided_by(m);
    if (sgn(q.coeff(Monomial())) != 0) return true;
  }
  return false;
}

namespace {

bool in_m_times(const IntrinsicIdeal& S, const Monomial& c) {
  for (auto [k, l] : S.stairs)
    if (c[1] >= l && c.degree() >= k + l + 1) return true;
  return false;
}

bool all_polynomial(const std::vector<Jet>& jets) {
  for (const auto& j : jets)
    if (!j.exact()) return false;
  return true;
}

}  // namespace

TruncationCertificate verify_truncation(const JetFamily& family, unsigned N0, unsigned cap) {
  TruncationCertificate cert;
  IntrinsicIdeal best;
  bool infinite_proven = false;
  unsigned infinite_at = 0;
  for (unsigned N = std::max(N0, 1u); N <= cap; ++N) {
    std::vector<Jet> jets = family(N);
    std::vector<Polynomial> polys;
    for (const auto& j : jets) polys.push_back(j.poly);
    IdealBasis S = standard_basis(IdealBasis::jet(polys, N));
    if (auto k = max_power_in_ideal(S)) {
      cert.status = CodimStatus::Finite;
      cert.N = N;
      cert.k = k;
      cert.advice = RingKind::LocalJet;
      if (all_polynomial(jets)) {
        IdealBasis G = groebner_basis(IdealBasis::poly(polys, MonomialOrder::degrevlex(2)));
        if (degree_contained(G, *k)) cert.advice = RingKind::GlobalPoly;
      }
      cert.note = "M^" + std::to_string(*k) + " lies in the jet ideal at degree " + std::to_string(N);
      return cert;
    }
    bool unknown = false;
    for (const auto& j : jets) unknown = unknown || j.tail.unknown;
    if (unknown) continue;

    // monomial ideal containing every generator, jets and tails together
    std::vector<Monomial> supp;
    for (const auto& j : jets) {
      for (const auto& t : j.poly.terms()) supp.push_back(t.mono);
      supp.insert(supp.end(), j.tail.cone.begin(), j.tail.cone.end());
    }
    supp = minimize_cone(supp);
    bool has_x = false, has_l = false;
    for (const auto& m : supp) {
      has_x = has_x || m[1] == 0;
      has_l = has_l || m[0] == 0;
    }
    if (!has_x || !has_l) {
      if (!infinite_proven) infinite_at = N;
      infinite_proven = true;
    }

    // candidate stairs from the jet ring, confirmed exactly in the polynomial-germ ring
    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (unsigned n = 0; n <= N; ++n) {
      for (unsigned m = 0; m + n <= N; ++m) {
        if (!degree_contained(S, m + n, n)) continue;
        pairs.emplace_back(m, n);
        break;
      }
    }
    IntrinsicIdeal cand = IntrinsicIdeal::from_pairs(pairs);
    std::vector<std::pair<unsigned, unsigned>> confirmed;
    for (auto [m, n] : cand.stairs) {
      bool ok = true;
      for (const auto& mono : monomials_of_degree(m + n))
        if (mono[1] >= n && !local_monomial_membership(polys, mono)) {
          ok = false;
          break;
        }
      if (ok) confirmed.emplace_back(m, n);
    }
    IntrinsicIdeal stairs = IntrinsicIdeal::from_pairs(confirmed);
    bool tails_ok = !stairs.stairs.empty();
    for (const auto& j : jets)
      for (const auto& c : j.tail.cone) tails_ok = tails_ok && in_m_times(stairs, c);
    if (!tails_ok) continue;
    best = stairs;
    bool exact = true;
    for (const auto& j : jets) exact = exact && stairs.contains(j.poly);
    if (exact) {
      cert.status = CodimStatus::Infinite;
      if (stairs.finite_codimension()) cert.status = CodimStatus::Finite;
      cert.N = N;
      cert.staircase = stairs;
      cert.staircase_exact = true;
      cert.note = "ideal equals the certified staircase " + stairs.to_string();
      return cert;
    }
  }
  if (infinite_proven) {
    cert.status = CodimStatus::Infinite;
    cert.N = infinite_at;
    cert.staircase = best;
    cert.note = "every generator lies in a monomial ideal missing a pure power";
    return cert;
  }
  cert.status = CodimStatus::Uncertified;
  cert.N = cap;
  cert.note = "no certificate up to degree " + std::to_string(cap);
  return cert;
}

TruncationCertificate verify_truncation(const std::vector<GermExpression>& gens, unsigned N0, unsigned cap) {
  return verify_truncation(
      [&gens](unsigned N) {
        std::vector<Jet> jets;
        for (const auto& g : gens) jets.push_back(taylor_jet(g, N));
        return jets;
      },
      N0, cap);
}

}  // namespace germforge
