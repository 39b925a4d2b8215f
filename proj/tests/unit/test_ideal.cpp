#include <random>

#include "oracle.hpp"
#include "printers.hpp"
#include "germforge/ideal_analysis.hpp"
#include "germforge/intrinsic.hpp"

using namespace germforge;

namespace {
Polynomial P(const std::string& s) { return parse_polynomial(s); }
Polynomial mono(unsigned a, unsigned b) { return Polynomial::monomial(Monomial{a, b}); }

std::vector<Polynomial> m15_gens() {
  return {P("x^5+x^3*lambda+lambda^2"), P("5*x^5+3*x^3*lambda"), P("5*x^4*lambda+3*x^2*lambda^2")};
}
std::vector<Polynomial> fcod_gens() {
  return {P("2*lambda^3-3*lambda^2*x+x^5"), P("-3*x*lambda^2+5*x^5"), P("-3*lambda^3+5*x^4*lambda")};
}
// <x g, lambda g, x^2 g_x, lambda g_x> for g = x^5 + lambda x + lambda^2
std::vector<Polynomial> p_gens() {
  Polynomial g = P("x^5+lambda*x+lambda^2"), gx = g.derivative(0);
  return {P("x") * g, P("lambda") * g, P("x^2") * gx, P("lambda") * gx};
}

Polynomial random_poly(std::mt19937& rng, unsigned mindeg, unsigned maxdeg, int nterms) {
  std::uniform_int_distribution<int> c(-3, 3);
  std::uniform_int_distribution<unsigned> e(0, maxdeg);
  std::vector<Term> t;
  for (int k = 0; k < nterms; ++k) {
    unsigned a = e(rng), b = e(rng);
    if (a + b < mindeg) a += mindeg - (a + b);
    t.push_back({c(rng), Monomial{a, b}});
  }
  return Polynomial::from_terms(t);
}
}  // namespace

TEST_CASE("normal sets") {
  auto S = IdealBasis::jet({mono(5, 0), mono(1, 1), mono(0, 2)}, 6);
  auto ns = normal_set(S).monomials;
  std::sort(ns.begin(), ns.end(), display_less);
  CHECK(ns == std::vector<Monomial>{Monomial{0, 0}, Monomial{0, 1}, Monomial{1, 0}, Monomial{2, 0}, Monomial{3, 0},
                                    Monomial{4, 0}});

  CHECK(normal_set(IdealBasis::jet({mono(2, 0), mono(1, 1), mono(0, 2)}, 3)).dimension() == 3);

  // m15 in the jet ring: compare with the span oracle
  unsigned N = 8;
  auto I = IdealBasis::jet(m15_gens(), N);
  auto got = normal_set(I).monomials;
  oracle::JetSpan span(m15_gens(), N);
  CHECK(got.size() == span.codim());
  CHECK(got.size() == 9);
  // the normal set is a basis of the quotient: no nonzero combination lies in I
  oracle::JetSpan with_ns(m15_gens(), N);
  for (const auto& m : got) with_ns.insert(Polynomial::monomial(m));
  CHECK(with_ns.codim() == 0);

  // an ideal with an escaping staircase
  CHECK_THROWS_AS(normal_set(IdealBasis::jet({mono(2, 0)}, 6)), StaircaseError);
}

TEST_CASE("multiplication matrices") {
  auto M2 = IdealBasis::jet({mono(2, 0), mono(1, 1), mono(0, 2)}, 4);
  auto mx = mult_matrix(M2, 0);
  CHECK(mx.nilpotency == 2);
  int nonzero = 0;
  for (const auto& col : mx.matrix)
    for (const auto& v : col) nonzero += sgn(v) != 0;
  CHECK(nonzero == 1);

  auto S = IdealBasis::jet({mono(5, 0), mono(1, 1), mono(0, 2)}, 7);
  CHECK(mult_matrix(S, 1).nilpotency == 2);
  CHECK(mult_matrix(S, 0).nilpotency == 5);
}

TEST_CASE("maximal powers and power tests") {
  CHECK(max_power_in_ideal(IdealBasis::jet(m15_gens(), 9)) == 6u);
  CHECK(max_power_in_ideal(IdealBasis::jet(fcod_gens(), 9)) == 6u);
  CHECK(max_power_in_ideal(IdealBasis::jet({mono(2, 0), mono(1, 1), mono(0, 2)}, 4)) == 2u);
  CHECK_FALSE(max_power_in_ideal(IdealBasis::jet({mono(1, 1)}, 6)).has_value());

  // oracle agreement for M^6
  for (auto gens : {m15_gens(), fcod_gens()}) {
    oracle::JetSpan s(gens, 9);
    CHECK(oracle::stair_inside(s, 6, 0));
    CHECK_FALSE(oracle::stair_inside(s, 5, 0));
  }

  auto Pb = IdealBasis::jet(p_gens(), 9);
  CHECK(power_lambda_test(Pb, 0, 2));
  CHECK_FALSE(power_lambda_test(Pb, 1, 1));
  CHECK(power_lambda_test(Pb, 2, 1));
  CHECK(power_lambda_test(IdealBasis::jet({mono(2, 1), mono(1, 2), mono(0, 3)}, 5), 2, 1));
  CHECK_FALSE(power_lambda_test(IdealBasis::jet({mono(2, 1)}, 5), 2, 1));
  CHECK_THROWS(power_lambda_test(Pb, 5, 5));
}

TEST_CASE("N_x and N_lambda bound the maximal power") {
  std::mt19937 rng(11);
  int checked = 0;
  for (int it = 0; it < 60; ++it) {
    std::vector<Polynomial> gens{random_poly(rng, 2, 5, 3), random_poly(rng, 2, 5, 3), random_poly(rng, 1, 4, 2)};
    gens.push_back(mono(7, 0));
    gens.push_back(mono(0, 7));
    auto B = IdealBasis::jet(gens, 10);
    auto k = max_power_in_ideal(B);
    REQUIRE(k.has_value());
    unsigned nx = mult_matrix(B, 0).nilpotency, nl = mult_matrix(B, 1).nilpotency;
    CHECK(std::max(nx, nl) <= *k);
    CHECK(*k < nx + nl);
    CHECK(normal_set(B).dimension() == oracle::JetSpan(gens, 10).codim());
    ++checked;
  }
  CHECK(checked == 60);
}

TEST_CASE("colon ideals and intersections") {
  auto I = IdealBasis::jet({mono(2, 0), mono(1, 1)}, 6);
  auto C = colon_ideal(I, Monomial{0, 1});
  CHECK(lt_ideal(standard_basis(C)) == std::vector<Monomial>{Monomial{1, 0}});
  auto self = colon_ideal(I, Monomial{});
  CHECK(lt_ideal(standard_basis(self)) == lt_ideal(standard_basis(I)));

  auto Cp = colon_ideal(IdealBasis::jet(p_gens(), 9), Monomial{0, 1});
  CHECK(max_power_in_ideal(Cp) == 2u);

  // completeness against the oracle, for a few monomial divisors
  unsigned N = 9;
  for (auto gens : {m15_gens(), p_gens(), fcod_gens()}) {
    oracle::JetSpan s(gens, N);
    auto B = IdealBasis::jet(gens, N);
    for (Monomial g : {Monomial{0, 1}, Monomial{0, 2}, Monomial{1, 0}}) {
      auto Cg = standard_basis(colon_ideal(B, g));
      for (unsigned d = 0; d + g.degree() <= N && d <= 6; ++d)
        for (const auto& m : monomials_of_degree(d))
          CHECK(reduces_to_zero(Polynomial::monomial(m), Cg) == s.contains(Polynomial::monomial(m * g)));
    }
  }

  auto X = IdealBasis::poly({P("x")}), L = IdealBasis::poly({P("lambda")});
  auto XL = ideal_intersection(X, L);
  for (unsigned d = 0; d <= 4; ++d)
    for (const auto& m : monomials_of_degree(d)) CHECK(reduces_to_zero(Polynomial::monomial(m), XL) == (m[0] > 0 && m[1] > 0));

  auto Pp = IdealBasis::poly(p_gens());
  auto L2 = IdealBasis::poly({P("lambda^2")});
  for (const auto& h : ideal_intersection(Pp, L2).gens()) {
    CHECK(remainder(h, L2).is_zero());
    CHECK(reduces_to_zero(h, groebner_basis(Pp)));
  }
  auto II = ideal_intersection(Pp, Pp);
  CHECK(lt_ideal(groebner_basis(II)) == lt_ideal(groebner_basis(Pp)));
}

TEST_CASE("truncation certificates") {
  auto tri = verify_truncation(
      {parse_germ("sin(lambda^7+x)+exp(x^4)-x-1-lambda^9"), parse_germ("x^5-lambda^2"), parse_germ("cos(x^6)-lambda-1")},
      1);
  CHECK(tri.status == CodimStatus::Finite);
  CHECK(tri.k == 3u);
  CHECK(tri.N >= 3);
  CHECK(tri.advice == RingKind::LocalJet);

  auto lin = verify_truncation({parse_germ("x"), parse_germ("lambda")}, 1);
  CHECK(lin.status == CodimStatus::Finite);
  CHECK(lin.k == 1u);
  CHECK(lin.N == 1);
  CHECK(lin.advice == RingKind::GlobalPoly);

  // restricted tangent generators of lambda^3 sin x
  auto g = parse_germ("lambda^3*sin(x)");
  auto rt = verify_truncation({parse_germ("x*lambda^3*sin(x)"), parse_germ("lambda^4*sin(x)"),
                               parse_germ("x^2*lambda^3*cos(x)"), parse_germ("lambda^4*cos(x)"),
                               parse_germ("lambda^3*cos(x)")},
                              2);
  (void)g;
  CHECK(rt.status == CodimStatus::Infinite);
  CHECK(rt.staircase == IntrinsicIdeal{{{0, 3}}});

  auto bad = verify_truncation({parse_germ("x^2")}, 2, 8);
  CHECK(bad.status == CodimStatus::Infinite);
}

TEST_CASE("monomial membership agrees across rings") {
  std::mt19937 rng(5);
  for (int it = 0; it < 100; ++it) {
    std::vector<Polynomial> gens{random_poly(rng, 1, 4, 3), random_poly(rng, 1, 4, 3)};
    if (it % 2) gens.push_back(mono(6, 0) + mono(0, 6));
    unsigned N = 12;
    auto B = IdealBasis::jet(gens, N);
    std::uniform_int_distribution<unsigned> e(0, 5);
    Monomial m{e(rng), e(rng)};
    bool local = local_monomial_membership(gens, m);
    auto k = max_power_in_ideal(B);
    if (!k) continue;
    // with M^k inside the ideal the jet verdict is exact
    CHECK(local == reduces_to_zero(Polynomial::monomial(m), standard_basis(B)));
    CHECK(local == oracle::JetSpan(gens, N).contains(Polynomial::monomial(m)));
  }
}

TEST_CASE("intrinsic parts") {
  auto Pb = IdealBasis::jet(p_gens(), 10);
  auto itr = intrinsic_part(Pb);
  CHECK(itr.stairs == std::vector<std::pair<unsigned, unsigned>>{{6, 0}, {2, 1}, {0, 2}});
  CHECK(itr.to_string() == "M^6 + M^2<lambda> + <lambda^2>");
  CHECK(intrinsic_membership(itr, P("lambda^2")));
  CHECK_FALSE(intrinsic_membership(itr, P("x*lambda")));
  CHECK(intrinsic_membership(itr, Polynomial()));

  auto M3 = IdealBasis::jet({mono(3, 0), mono(2, 1), mono(1, 2), mono(0, 3)}, 6);
  CHECK(intrinsic_part(M3).stairs == std::vector<std::pair<unsigned, unsigned>>{{3, 0}});

  for (auto gens : {std::vector<Polynomial>{P("x^2+lambda^3"), P("x^3")}, p_gens(), m15_gens(), fcod_gens()}) {
    unsigned N = 10;
    auto B = IdealBasis::jet(gens, N);
    auto it = intrinsic_part(B);
    CHECK(it.well_formed());
    oracle::JetSpan s(gens, N);
    for (unsigned m = 0; m <= 8; ++m)
      for (unsigned n = 0; m + n <= 8; ++n)
        CHECK(oracle::stair_inside(s, m, n) == it.contains(Monomial{m, n}));
  }
}

TEST_CASE("intrinsic decompositions") {
  Polynomial g = P("x^5+lambda*x+lambda^2");
  // T = M^5 + M<lambda> + span{x + 2 lambda, x^4 + lambda/5} arises from the tangent generators
  auto D = intrinsic_decomposition(IdealBasis::jet({mono(5, 0), mono(1, 1), mono(0, 2)}, 7));
  CHECK(D.complement_part.empty());

  IntrinsicIdeal S{{{5, 0}, {1, 1}}};
  auto span = reduce_span({g, g.derivative(1), P("x") * g.derivative(0), g.derivative(0)}, S);
  // g_lambda = x + 2 lambda, g_x = 5x^4 + lambda, and g, x g_x reduce into S
  CHECK(span == std::vector<Polynomial>{P("x+2*lambda"), P("x^4+1/5*lambda")});

  auto gens = std::vector<Polynomial>{P("x^2+lambda^3"), P("x^3")};
  unsigned N = 9;
  auto B = IdealBasis::jet(gens, N);
  auto dec = intrinsic_decomposition(B);
  oracle::JetSpan whole(gens, N);
  std::vector<Polynomial> parts = dec.complement_part;
  for (const auto& m : dec.itr.generators())
    for (unsigned d = 0; d + m.degree() <= N; ++d)
      for (const auto& w : monomials_of_degree(d)) parts.push_back(Polynomial::monomial(m * w));
  oracle::JetSpan rebuilt(parts, N);
  CHECK(rebuilt.rank() == whole.rank());
  for (const auto& p : dec.complement_part) {
    CHECK(whole.contains(p));
    for (const auto& t : p.terms()) CHECK_FALSE(dec.itr.contains(t.mono));
  }
}
