#include "germforge/singularity.hpp"

#include <algorithm>
#include <cstdlib>

namespace germforge {

namespace {

const Polynomial& X() {
  static const Polynomial p = Polynomial::var(0);
  return p;
}
const Polynomial& L() {
  static const Polynomial p = Polynomial::var(1);
  return p;
}

struct GermJets {
  Jet g, gx, gl;  // all at degree N
};

GermJets germ_jets(const GermExpression& e, unsigned N) {
  Jet hi = taylor_jet(e, N + 1);
  return {jet_restrict(hi, N), jet_derivative(hi, 0), jet_derivative(hi, 1)};
}

std::vector<Jet> p_jets(const GermExpression& e, unsigned N) {
  GermJets j = germ_jets(e, N);
  Jet x = jet_of_polynomial(X(), N), l = jet_of_polynomial(L(), N), x2 = jet_of_polynomial(X() * X(), N);
  return {jet_mul(x, j.g), jet_mul(l, j.g), jet_mul(x2, j.gx), jet_mul(l, j.gx)};
}

std::vector<Jet> rt_jets(const GermExpression& e, unsigned N) {
  GermJets j = germ_jets(e, N);
  Jet x = jet_of_polynomial(X(), N), l = jet_of_polynomial(L(), N);
  return {j.g, jet_mul(x, j.gx), jet_mul(l, j.gx)};
}

std::vector<Polynomial> polys(const std::vector<Jet>& jets) {
  std::vector<Polynomial> out;
  for (const auto& j : jets) out.push_back(j.poly);
  return out;
}

bool certified(const TruncationCertificate& c) {
  return c.status == CodimStatus::Finite || (c.status == CodimStatus::Infinite && c.staircase_exact);
}

void require_finite(const TruncationCertificate& c, const char* what) {
  if (c.status == CodimStatus::Infinite) throw InfiniteCodimensionError(std::string(what) + " has infinite codimension");
  if (c.status != CodimStatus::Finite) throw CertificationError(std::string(what) + ": " + c.note);
}

Polynomial strip(const Polynomial& f, const IntrinsicIdeal& I) {
  std::vector<Term> t;
  for (const auto& term : f.terms())
    if (!I.contains(term.mono)) t.push_back(term);
  return Polynomial::from_terms(t);
}

std::size_t count_present(const Polynomial& f, const std::vector<Monomial>& A) {
  std::size_t n = 0;
  for (const auto& m : A) n += sgn(f.coeff(m)) != 0;
  return n;
}

Rational binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

// Coefficient of x^p lambda^q in f(x + b lambda, lambda) as a polynomial in b,
// lowest power first.
std::vector<Rational> shifted_coefficient(const Polynomial& f, const Monomial& m) {
  unsigned p = m[0], q = m[1];
  std::vector<Rational> c(q + 1, 0);
  for (unsigned j = 0; j <= q; ++j) c[j] = f.coeff(Monomial{p + j, q - j}) * binomial(p + j, j);
  while (c.size() > 1 && sgn(c.back()) == 0) c.pop_back();
  return c;
}

// Scales a normal form so that its stair corners get coefficients +-1, using
// x -> a x and an overall factor c with a, c > 0. Returns false if the scaling
// would leave the rationals.
bool normalize_corners(Polynomial& f, const std::vector<Monomial>& corners) {
  if (corners.empty()) return false;
  bool only_corners = true;
  for (const auto& t : f.terms())
    if (std::find(corners.begin(), corners.end(), t.mono) == corners.end()) only_corners = false;
  if (only_corners && corners.size() <= 2) {
    std::vector<Term> t;
    for (const auto& term : f.terms()) t.push_back({Rational(sgn(term.coeff)), term.mono});
    f = Polynomial::from_terms(t);
    return true;
  }
  Rational a = 1;
  if (corners.size() >= 2) {
    const Monomial &m1 = corners.front(), &m2 = corners.back();
    Rational c1 = abs(f.coeff(m1)), c2 = abs(f.coeff(m2));
    int dm = int(m1[0]) - int(m2[0]);
    if (dm == 0) return false;
    Rational ratio = dm > 0 ? c2 / c1 : c1 / c2;
    if (!rational_root(ratio, unsigned(std::abs(dm)), a)) return false;
  }
  Polynomial g = f.substitute(0, X().scaled(a));
  Rational c = 1 / abs(g.coeff(corners.front()));
  g = g.scaled(c);
  for (const auto& m : corners)
    if (abs(g.coeff(m)) != 1) return false;
  f = g;
  return true;
}

}  // namespace

SingularGerm SingularGerm::from_expression(const GermExpression& e, unsigned N0, unsigned cap) {
  Jet j1 = taylor_jet(e, 1);
  if (sgn(j1.poly.coeff(Monomial{})) != 0) throw NotSingularError("g(0,0) is not zero");
  if (sgn(j1.poly.coeff(Monomial{1, 0})) != 0) throw NotSingularError("g_x(0,0) is not zero");
  SingularGerm g;
  g.expr = e;
  g.p_cert = verify_truncation([&e](unsigned N) { return p_jets(e, N); }, N0, cap);
  g.rt_cert = verify_truncation([&e](unsigned N) { return rt_jets(e, N); }, N0, cap);
  g.N = std::max(N0, 1u);
  for (const auto* c : {&g.p_cert, &g.rt_cert})
    if (certified(*c)) g.N = std::max(g.N, c->N);
  g.jet = taylor_jet(e, g.N);
  return g;
}

SingularGerm SingularGerm::from_polynomial(const Polynomial& p, unsigned N0, unsigned cap) {
  return from_expression(GermExpression::from_polynomial(p), N0, cap);
}

SingularGerm SingularGerm::parse(const std::string& text, unsigned N0, unsigned cap) {
  return from_expression(parse_germ(text), N0, cap);
}

std::vector<Polynomial> SingularGerm::p_generators() const { return polys(p_jets(expr, N)); }
std::vector<Polynomial> SingularGerm::rt_generators() const { return polys(rt_jets(expr, N)); }

IntrinsicIdeal high_order_ideal(const SingularGerm& g) {
  require_finite(g.p_cert, "the high order ideal");
  return intrinsic_part(IdealBasis::jet(g.p_generators(), g.N));
}

DerivativeStairs derivative_stairs(const Polynomial& jet) {
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (const auto& t : jet.terms()) pairs.emplace_back(t.mono[0], t.mono[1]);
  DerivativeStairs d;
  d.S = IntrinsicIdeal::from_pairs(pairs);
  for (auto [m, n] : d.S.stairs) d.corners.push_back(Monomial{m, n});
  std::sort(d.corners.begin(), d.corners.end(), display_less);
  if (d.S.finite_codimension()) {
    d.S_perp = d.S.complement();
    std::sort(d.S_perp.begin(), d.S_perp.end(), display_less);
  }
  return d;
}

std::vector<Monomial> intermediate_terms(const SingularGerm& g) {
  IntrinsicIdeal P = high_order_ideal(g);
  DerivativeStairs d = derivative_stairs(g.poly());
  std::vector<Monomial> A;
  for (const auto& m : P.complement())
    if (d.S.contains(m) && std::find(d.corners.begin(), d.corners.end(), m) == d.corners.end()) A.push_back(m);
  std::sort(A.begin(), A.end(), display_less);
  return A;
}

NormalForm normal_form(const SingularGerm& g, const NormalFormOptions& opt) {
  IntrinsicIdeal P = high_order_ideal(g);
  std::vector<Monomial> A = intermediate_terms(g);
  NormalForm out;
  Polynomial f = strip(g.poly(), P);
  const std::vector<Monomial> corners = derivative_stairs(f).corners;

  // greedy x -> x + b lambda, keeping the stair corners
  for (int round = 0; round < 8; ++round) {
    std::size_t current = count_present(f, A);
    if (current == 0) break;
    std::vector<Rational> candidates;
    for (const auto& m : A) {
      if (sgn(f.coeff(m)) == 0) continue;
      auto c = shifted_coefficient(f, m);
      if (c.size() == 2) candidates.push_back(-c[0] / c[1]);
    }
    Polynomial best = f;
    Rational best_b = 0;
    std::size_t best_count = current;
    for (const auto& b : candidates) {
      if (sgn(b) == 0) continue;
      Polynomial h = strip(f.substitute(0, X() + L().scaled(b), int(g.N)), P);
      if (derivative_stairs(h).corners != corners) continue;
      std::size_t n = count_present(h, A);
      if (n < best_count) {
        best = h;
        best_b = b;
        best_count = n;
      }
    }
    if (best_count == current) break;
    f = best;
    out.shift += best_b;
  }
  for (const auto& m : A)
    if (sgn(f.coeff(m)) != 0) out.unremoved.push_back(m);
  if (!out.unremoved.empty()) out.note = "some intermediate order terms could not be removed";

  if (opt.normalize) {
    out.normalized = normalize_corners(f, corners);
    if (!out.normalized) out.note += std::string(out.note.empty() ? "" : "; ") + "corner scaling is not rational";
  }
  out.poly = f;
  return out;
}

RestrictedTangent restricted_tangent(const SingularGerm& g) {
  RestrictedTangent rt;
  rt.cert = g.rt_cert;
  if (g.rt_cert.status == CodimStatus::Finite) {
    auto dec = intrinsic_decomposition(IdealBasis::jet(g.rt_generators(), g.N));
    rt.finite = true;
    rt.itr = dec.itr;
    rt.complement = dec.complement_part;
    return rt;
  }
  if (g.rt_cert.status == CodimStatus::Uncertified) throw CertificationError("restricted tangent space: " + g.rt_cert.note);
  rt.itr = g.rt_cert.staircase;
  if (!g.rt_cert.staircase_exact) rt.complement = reduce_span(g.rt_generators(), rt.itr);
  return rt;
}

TangentSpace tangent_space(const SingularGerm& g) {
  require_finite(g.rt_cert, "the restricted tangent space");
  IdealBasis RT = standard_basis(IdealBasis::jet(g.rt_generators(), g.N));
  auto dec = intrinsic_decomposition(RT);
  GermJets j = germ_jets(g.expr, g.N);

  TangentSpace T;
  T.itr = dec.itr;
  std::vector<Polynomial> lam_gl;
  Polynomial p = j.gl.poly;
  for (unsigned l = 0; l <= g.N; ++l) {
    if (!reduces_to_zero(p, RT)) T.ell = l;
    lam_gl.push_back(p);
    p = (p * L()).truncated(g.N);
  }
  std::vector<Polynomial> vecs = dec.complement_part;
  vecs.push_back(j.gx.poly);
  for (unsigned l = 0; l <= T.ell; ++l) vecs.push_back(lam_gl[l]);
  T.span = reduce_span(vecs, T.itr);

  std::vector<Monomial> pivots;
  for (const auto& v : T.span) pivots.push_back(span_pivot(v));
  for (const auto& m : T.itr.complement())
    if (std::find(pivots.begin(), pivots.end(), m) == pivots.end()) T.et_basis.push_back(m);
  std::sort(T.et_basis.begin(), T.et_basis.end(), display_less);
  return T;
}

std::vector<RecognitionCondition> recognition_conditions(const Polynomial& nf) {
  return recognition_conditions(nf, nf);
}

std::vector<RecognitionCondition> recognition_conditions(const Polynomial& nf, const Polynomial& g) {
  DerivativeStairs d = derivative_stairs(nf);
  if (!d.S.finite_codimension()) throw InfiniteCodimensionError("S(g) has infinite codimension");
  auto value = [&g](const Monomial& m) -> Rational {
    Integer f = 1;
    for (unsigned i = 2; i <= m[0]; ++i) f *= i;
    for (unsigned i = 2; i <= m[1]; ++i) f *= i;
    return g.coeff(m) * Rational(f);
  };
  std::vector<RecognitionCondition> out;
  for (const auto& m : d.S_perp) {
    Rational v = value(m);
    out.push_back({m, true, v, sgn(v) == 0});
  }
  for (const auto& m : d.corners) {
    Rational v = value(m);
    out.push_back({m, false, v, sgn(v) != 0});
  }
  return out;
}

AlgebraicObjects alg_objects(const SingularGerm& g) {
  AlgebraicObjects a;
  a.P = high_order_ideal(g);
  a.RT = restricted_tangent(g);
  a.T = tangent_space(g);
  a.S = derivative_stairs(g.poly());
  return a;
}

}  // namespace germforge
