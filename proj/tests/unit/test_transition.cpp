#include <cmath>
#include <random>
#include <set>

#include "printers.hpp"
#include "germforge/transition.hpp"

using namespace germforge;

namespace {
const char* kQuartic = "x^4+lambda+alpha1*x+alpha2*x^2";
const char* kG2 = "x^4+lambda*x+alpha1+alpha2*lambda+alpha3*x^2";

Unfolding U(const char* s, std::size_t k) { return Unfolding::parse(s, default_parameter_names(k)); }

// equal up to a nonzero rational factor
bool same_up_to_unit(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  Rational c = b.terms().front().coeff / a.terms().front().coeff;
  return a * Polynomial(c) == b;
}

std::vector<Rational> Q(std::initializer_list<double> v) {
  std::vector<Rational> out;
  for (double d : v) out.push_back(from_double(d));
  return out;
}
}  // namespace

TEST_CASE("elimination against parametrized varieties") {
  // discriminant of x^3 + a x + b: points (a, b) = (-3t^2, 2t^3)
  VarNames v{"x", "a", "b"};
  auto gens = eliminate({parse_polynomial("x^3+a*x+b", v), parse_polynomial("3*x^2+a", v)}, 1, 2);
  REQUIRE(gens.size() == 1);
  Polynomial disc = primitive(gens.front());
  CHECK(same_up_to_unit(disc, parse_polynomial("4*x^3+27*a^2", {"x", "a"})));
  for (int t = -5; t <= 5; ++t) {
    Rational tt(t, 3);
    CHECK(sgn(disc.eval({Rational(-3) * tt * tt, Rational(2) * tt * tt * tt})) == 0);
  }
  CHECK(sgn(disc.eval({Rational(1), Rational(1)})) != 0);

  // the ideal (1) eliminates to (1)
  auto one = eliminate({parse_polynomial("x", v), parse_polynomial("x-1", v)}, 1, 2);
  REQUIRE(one.size() == 1);
  CHECK(one.front() == Polynomial(1));

  auto p = primitive(parse_polynomial("-3/2*x^2+9*x*lambda"));
  CHECK(p == parse_polynomial("x^2-6*x*lambda"));
}

TEST_CASE("transition set of the quartic") {
  auto T = transition_set(U(kQuartic, 2));
  CHECK(T.B.empty);
  REQUIRE(T.H.gens.size() == 1);
  CHECK(same_up_to_unit(T.H.gens[0], parse_polynomial("8*alpha2^3+27*alpha1^2", T.params)));
  REQUIRE(T.D.gens.size() == 1);
  CHECK(same_up_to_unit(T.D.gens[0], parse_polynomial("alpha1", T.params)));
  REQUIRE(T.D.side.size() == 1);
  CHECK(T.D.side[0].kind == SideCondition::Kind::Sign);
  CHECK(T.D.side[0].param == 1);
  CHECK(T.D.side[0].sign == -1);
  CHECK(T.H.side[0].kind == SideCondition::Kind::AllReal);

  // hysteresis points: g = g_x = g_xx = 0 at x = t gives (8t^3, -6t^2)
  for (int t = -4; t <= 4; ++t) {
    Rational tt(t, 5);
    CHECK(sgn(T.H.gens[0].eval({Rational(8) * tt * tt * tt, Rational(-6) * tt * tt})) == 0);
  }
  auto sigma = T.sigma();
  CHECK(sigma.size() == 2);
}

TEST_CASE("transition set of the x^4 + lambda x unfolding") {
  auto T = transition_set(U(kG2, 3));
  REQUIRE(T.B.gens.size() == 1);
  REQUIRE(T.H.gens.size() == 1);
  REQUIRE(T.D.gens.size() == 1);
  CHECK(same_up_to_unit(T.B.gens[0], parse_polynomial("alpha2^4+alpha2^2*alpha3+alpha1", T.params)));
  CHECK(same_up_to_unit(T.H.gens[0], parse_polynomial("128*alpha2^2*alpha3^3+3*alpha3^4+72*alpha1*alpha3^2+432*alpha1^2",
                                                       T.params)));
  CHECK(same_up_to_unit(T.D.gens[0], parse_polynomial("alpha3^2-4*alpha1", T.params)));
  REQUIRE(T.D.side.size() == 1);
  CHECK(T.D.side[0].kind == SideCondition::Kind::Sign);
  CHECK(T.D.side[0].param == 2);
  CHECK(T.D.side[0].sign == -1);

  // double limit points x2 = -x1 = s: lambda = 0, alpha3 = -2 s^2, alpha1 = s^4, alpha2 free
  for (int s = 1; s <= 4; ++s)
    for (int a2 = -2; a2 <= 2; ++a2) {
      Rational ss(s, 4);
      CHECK(sgn(T.D.gens[0].eval({ss * ss * ss * ss, Rational(a2, 3), Rational(-2) * ss * ss})) == 0);
    }
  // and each such point has a real witness with distinct x1, x2
  std::vector<double> w;
  CHECK(find_witness(T.D.system, {1.0 / 16, 0.2, -0.5}, {}, &w));
  REQUIRE(w.size() == 3);
  CHECK(std::fabs(w[0] - w[2]) > 1e-3);
  // the other branch alpha3 > 0 has only complex witnesses
  CHECK_FALSE(find_witness(T.D.system, {1.0 / 16, 0.2, 0.5}, {}));
}

TEST_CASE("real filter kinds") {
  VarNames v{"w", "a"};
  Polynomial a_half = parse_polynomial("a-1/2", {"a"});
  WitnessSystem none{1, {parse_polynomial("w^2+1+a^2", v)}};
  auto r = real_filter(none, {a_half}, 1);
  REQUIRE(r.size() == 1);
  CHECK(r[0].kind == SideCondition::Kind::EmptyReal);
  CHECK(r[0].realized == 0);
  CHECK(r[0].sampled > 0);

  WitnessSystem all{1, {parse_polynomial("w^2-a", v)}};
  r = real_filter(all, {a_half}, 1);
  REQUIRE(r.size() == 1);
  CHECK(r[0].kind == SideCondition::Kind::AllReal);

  // a transition variety with no real witnesses drops out of the transition set
  auto T = transition_set(U("x^3+lambda+alpha1*x", 1));
  CHECK(T.B.empty);
  CHECK(T.D.empty);
  REQUIRE(T.H.gens.size() == 1);
  CHECK(same_up_to_unit(T.H.gens[0], parse_polynomial("alpha1", T.params)));
}

TEST_CASE("regions of the quartic") {
  auto G = U(kQuartic, 2);
  auto T = transition_set(G);
  auto R = region_decompose(T);
  CHECK(R.grid == 200);
  REQUIRE(R.regions.size() == 3);
  std::set<std::string> sigs;
  for (const auto& r : R.regions) {
    std::string s = diagram_signature(G, r.point);
    sigs.insert(s);
    CHECK(r.samples.size() >= 5);
    for (const auto& p : r.samples) CHECK(diagram_signature(G, p) == s);
  }
  CHECK(sigs.size() == 3);
  CHECK(sigs.count("2 f0L 0"));
}

TEST_CASE("trivial transition sets give one region") {
  auto G = universal_unfolding(SingularGerm::parse("x^2+lambda"));
  auto T = transition_set(G);
  auto R = region_decompose(T);
  REQUIRE(R.regions.size() == 1);
  auto P = persistent_diagrams(G, T);
  REQUIRE(P.diagrams.size() == 1);
  CHECK(P.diagrams[0].diagram.signature == "2 f0L 0");

  // one parameter, Sigma = {0}
  auto G1 = U("x^3+lambda+alpha1*x", 1);
  auto R1 = region_decompose(transition_set(G1));
  REQUIRE(R1.regions.size() == 2);
}

TEST_CASE("bifurcation diagrams") {
  auto G = U("x^3+lambda+alpha1*x", 1);
  auto d = diagram_trace(G, Q({-1}));
  CHECK(d.signature == "1 f0R 3 f1L 1");
  REQUIRE(d.folds.size() == 2);
  // folds of x^3 - x + lambda at lambda = -+2/(3 sqrt 3)
  double f = 2 / (3 * std::sqrt(3.0));
  CHECK(std::fabs(d.folds[0].lambda + f) < 1e-9);
  CHECK(std::fabs(d.folds[1].lambda - f) < 1e-9);
  CHECK(std::fabs(d.folds[0].x + 1 / std::sqrt(3.0)) < 1e-3);
  CHECK(d.max_residual <= 1e-9);
  CHECK(d.dropped == 0);
  for (std::size_t i = 0; i < d.lambdas.size(); ++i) {
    double t = d.lambdas[i];
    std::size_t expect = std::fabs(t) < f ? 3 : 1;
    if (std::fabs(std::fabs(t) - f) > 1e-6) CHECK(d.roots[i].size() == expect);
    for (double x : d.roots[i]) CHECK(std::fabs(x * x * x - x + t) <= 1e-9);
  }
  CHECK(diagram_signature(G, Q({1})) == "1");

  // persistent diagrams of the quartic: one per region, short list of three
  auto Gq = U(kQuartic, 2);
  auto P = persistent_diagrams(Gq, transition_set(Gq));
  CHECK(P.diagrams.size() == 3);
  CHECK(P.short_list.size() == 3);
  for (const auto& pd : P.diagrams) CHECK(pd.diagram.max_residual <= 1e-9);
}
