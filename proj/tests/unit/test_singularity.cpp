#include <algorithm>

#include "oracle.hpp"
#include "printers.hpp"
#include "germforge/errors.hpp"
#include "germforge/singularity.hpp"

using namespace germforge;

namespace {
Polynomial P(const std::string& s) { return parse_polynomial(s); }
const char* kExmp = "exp(x^2)+2*cos(x)-3+sin(lambda)";

std::vector<Monomial> monos(std::initializer_list<std::pair<unsigned, unsigned>> l) {
  std::vector<Monomial> v;
  for (auto [a, b] : l) v.push_back(Monomial{a, b});
  return v;
}

// f - S * g(X, lambda) by plain expansion, truncated at k
Polynomial contact_defect(const Polynomial& g, const Polynomial& f, const Polynomial& X, const Polynomial& S,
                          unsigned k) {
  Polynomial gX;
  for (const auto& t : g.terms()) {
    Polynomial m(t.coeff);
    for (unsigned i = 0; i < t.mono[0]; ++i) m = (m * X).truncated(k);
    for (unsigned i = 0; i < t.mono[1]; ++i) m = (m * Polynomial::var(1)).truncated(k);
    gX += m;
  }
  return (f - S * gX).truncated(k);
}

std::size_t oracle_codim(const std::vector<Polynomial>& gens, unsigned N, const std::vector<Polynomial>& extra = {}) {
  oracle::JetSpan s(gens, N);
  for (const auto& e : extra) s.insert(e.truncated(N));
  return s.codim();
}
}  // namespace

TEST_CASE("singular germs and certified degrees") {
  auto g = SingularGerm::parse(kExmp);
  CHECK(g.N == 5);
  CHECK(g.poly() == P("lambda + 7/12*x^4 - 1/6*lambda^3 + 1/120*lambda^5"));
  CHECK(g.finitely_determined());
  CHECK(g.p_generators().size() == 4);
  CHECK(g.rt_generators().size() == 3);

  CHECK_THROWS_AS(SingularGerm::parse("x + lambda"), NotSingularError);
  CHECK_THROWS_AS(SingularGerm::parse("1 + x^2"), NotSingularError);

  auto d = SingularGerm::parse("x^2");
  CHECK_FALSE(d.finitely_determined());
  CHECK_THROWS_AS(high_order_ideal(d), InfiniteCodimensionError);
}

TEST_CASE("high order ideals") {
  CHECK(high_order_ideal(SingularGerm::parse(kExmp)).to_string() == "M^5 + M<lambda>");
  auto g = SingularGerm::parse("x^5+lambda*x+lambda^2");
  auto Pg = high_order_ideal(g);
  CHECK(Pg.to_string() == "M^6 + M^2<lambda> + <lambda^2>");
  CHECK(Pg.contains(Monomial{0, 2}));
  CHECK(high_order_ideal(SingularGerm::parse("x^2-lambda^2")).to_string() == "M^3");
  CHECK(high_order_ideal(SingularGerm::parse("x^5+x^3*lambda+lambda^2")).to_string() == "M^6 + M^4<lambda> + M<lambda^2>");

  for (const char* s : {kExmp, "x^5+lambda*x+lambda^2", "x^3-lambda*x", "x^5+x^3*lambda+lambda^2", "x^2-lambda^2"}) {
    auto h = SingularGerm::parse(s);
    auto I = high_order_ideal(h);
    CHECK(I.complement().size() >= oracle_codim(h.p_generators(), h.N));
    oracle::JetSpan span(h.p_generators(), h.N);
    for (unsigned m = 0; m <= h.N; ++m)
      for (unsigned n = 0; m + n <= h.N; ++n) {
        bool in = true;
        for (unsigned k = 0; k <= m; ++k) in = in && I.contains(Monomial{m - k, n + k});
        CHECK(in == oracle::stair_inside(span, m, n));
      }
  }
}

TEST_CASE("derivative stairs and intermediate terms") {
  auto st = derivative_stairs(P("x^5+x^3*lambda+lambda^2"));
  CHECK(st.S.to_string() == "M^5 + M^3<lambda> + <lambda^2>");
  CHECK(st.corners == monos({{0, 2}, {3, 1}, {5, 0}}));
  CHECK(st.S_perp.size() == 8);

  CHECK(intermediate_terms(SingularGerm::parse(kExmp)).empty());
  CHECK(intermediate_terms(SingularGerm::parse("x^5+lambda*x+lambda^2")).empty());
  auto it = intermediate_terms(SingularGerm::parse("x^2-lambda^2"));
  std::sort(it.begin(), it.end(), display_less);
  auto expect = monos({{1, 1}, {0, 2}});
  std::sort(expect.begin(), expect.end(), display_less);
  CHECK(it == expect);
  CHECK(derivative_stairs(P("lambda")).S_perp.empty());
}

TEST_CASE("normal forms") {
  auto g = SingularGerm::parse(kExmp);
  auto nf = normal_form(g);
  CHECK(nf.poly == P("7/12*x^4 + lambda"));
  CHECK(nf.unremoved.empty());
  CHECK(normal_form(g, {true}).poly == P("x^4 + lambda"));
  CHECK(normal_form(g, {true}).normalized);

  auto h = SingularGerm::parse("x^5+lambda*x+lambda^2");
  CHECK(normal_form(h).poly == P("x^5 + x*lambda"));

  // idempotent
  for (const char* s : {kExmp, "x^5+lambda*x+lambda^2", "x^3+x^2*lambda+lambda^2", "(x+lambda)^2+lambda^3"}) {
    auto f = normal_form(SingularGerm::parse(s)).poly;
    CHECK(normal_form(SingularGerm::from_polynomial(f)).poly == f);
  }

  auto s = normal_form(SingularGerm::parse("(x+lambda)^2+lambda^3"));
  CHECK(s.shift == Rational(-1));
  CHECK(s.poly == P("x^2 + lambda^3"));

  auto w = normal_form(SingularGerm::parse("x^2-lambda^2"));
  CHECK_FALSE(w.unremoved.empty());
  CHECK_FALSE(w.note.empty());
}

TEST_CASE("restricted tangent spaces") {
  auto rt = restricted_tangent(SingularGerm::parse("x^5+lambda*x+lambda^2"));
  CHECK(rt.finite);
  CHECK(rt.itr.to_string() == "M^5 + M<lambda>");
  CHECK(rt.complement.empty());

  auto q = restricted_tangent(SingularGerm::parse("x^5+x^3*lambda+lambda^2"));
  CHECK(q.itr.to_string() == "M^6 + M^4<lambda> + M<lambda^2>");
  CHECK(q.complement == std::vector<Polynomial>{P("x^3*lambda + 5/2*lambda^2"), P("x^5 - 3/2*lambda^2")});

  auto inf = restricted_tangent(SingularGerm::parse("lambda^3*sin(x)"));
  CHECK_FALSE(inf.finite);
  CHECK(inf.itr.to_string() == "M<lambda^3>");
  CHECK_FALSE(restricted_tangent(SingularGerm::parse("x^2")).finite);

  for (const char* s : {kExmp, "x^5+lambda*x+lambda^2", "x^3-lambda*x", "x^5+x^3*lambda+lambda^2"}) {
    auto h = SingularGerm::parse(s);
    auto r = restricted_tangent(h);
    CHECK(r.itr.complement().size() - r.complement.size() == oracle_codim(h.rt_generators(), h.N));
    oracle::JetSpan span(h.rt_generators(), h.N);
    for (const auto& v : r.complement) CHECK(span.contains(v));
  }
}

TEST_CASE("tangent spaces and codimension") {
  auto T = tangent_space(SingularGerm::parse("x^5+lambda*x+lambda^2"));
  CHECK(T.span == std::vector<Polynomial>{P("x + 2*lambda"), P("x^4 + 1/5*lambda")});
  CHECK(T.et_basis == monos({{0, 0}, {0, 1}, {2, 0}, {3, 0}}));

  CHECK(tangent_space(SingularGerm::parse(kExmp)).et_basis == monos({{1, 0}, {2, 0}}));
  CHECK(tangent_space(SingularGerm::parse("x^4+lambda*x")).codimension() == 3);
  CHECK(tangent_space(SingularGerm::parse("x^2+lambda")).codimension() == 0);
  CHECK(tangent_space(SingularGerm::parse("x^3+lambda")).codimension() == 1);
  CHECK(tangent_space(SingularGerm::parse("x^3-lambda*x")).codimension() == 2);
  CHECK(tangent_space(SingularGerm::parse("x^5+x^3*lambda+lambda^2")).ell == 1);

  // oracle: T = RT + span{g_x, lambda^l g_lambda}
  for (const char* s : {kExmp, "x^5+lambda*x+lambda^2", "x^4+lambda*x", "x^3-lambda*x", "x^5+x^3*lambda+lambda^2",
                        "x^3+x^2*lambda+lambda^2"}) {
    auto h = SingularGerm::parse(s);
    unsigned N = h.N;
    auto jet = taylor_jet(h.expr, N + 1).poly;
    std::vector<Polynomial> extra{jet.derivative(0).truncated(N)};
    Polynomial gl = jet.derivative(1).truncated(N);
    for (unsigned l = 0; l <= N; ++l) extra.push_back(gl.times(Monomial{0, l}).truncated(N));
    auto ts = tangent_space(h);
    CHECK(ts.codimension() == oracle_codim(h.rt_generators(), N, extra));
    oracle::JetSpan span(h.rt_generators(), N);
    for (const auto& e : extra) span.insert(e);
    for (const auto& m : ts.et_basis) span.insert(Polynomial::monomial(m));
    CHECK(span.codim() == 0);
  }
}

TEST_CASE("recognition conditions") {
  auto rc = recognition_conditions(P("7/12*x^4 + lambda"));
  REQUIRE(rc.size() == 6);
  for (const auto& c : rc) CHECK(c.holds);
  auto find = [&rc](Monomial m) {
    return *std::find_if(rc.begin(), rc.end(), [&](const RecognitionCondition& c) { return c.mono == m; });
  };
  CHECK(find(Monomial{4, 0}).value == Rational(14));
  CHECK_FALSE(find(Monomial{4, 0}).must_vanish);
  CHECK(find(Monomial{0, 1}).value == Rational(1));

  CHECK(recognition_conditions(P("x^5+lambda*x")).size() == 8);
  auto bad = recognition_conditions(P("x^4 + lambda"), P("x^4 + x^2 + lambda"));
  CHECK(std::any_of(bad.begin(), bad.end(), [](const RecognitionCondition& c) { return !c.holds; }));
  auto good = recognition_conditions(P("x^4 + lambda"), taylor_jet(parse_germ(kExmp), 5).poly);
  CHECK(std::all_of(good.begin(), good.end(), [](const RecognitionCondition& c) { return c.holds; }));
  CHECK_THROWS_AS(recognition_conditions(P("lambda")), InfiniteCodimensionError);
}

TEST_CASE("contact transformations") {
  auto g = SingularGerm::parse(kExmp);
  Polynomial f = P("7/12*x^4 + lambda");
  Polynomial g5 = taylor_jet(g.expr, 5).poly;

  // the published pair
  ContactTransformation pub{P("lambda + x + lambda^2 + lambda*x"),
                            P("1 + 1/6*lambda^2 - 7/12*lambda^3 - 7/3*lambda^2*x - 7/2*lambda*x^2 - 7/3*x^3 - "
                              "833/360*lambda^4 - 28/3*lambda^3*x - 14*lambda^2*x^2 - 28/3*lambda*x^3 - 7/3*x^4"),
                            5};
  CHECK(transformation_residual(g5, f, pub).is_zero());
  CHECK(contact_defect(g5, f, pub.X, pub.S, 5).is_zero());

  auto t = transformation_solve(g, f, 5);
  CHECK(contact_defect(g5, f, t.X, t.S, 5).is_zero());
  CHECK(t.X.coeff(Monomial{1, 0}) > 0);
  CHECK(t.S.coeff(Monomial{}) > 0);
  CHECK(t.X.coeff(Monomial{}) == 0);

  auto h = P("x^5+lambda*x+lambda^2");
  auto th = transformation_solve(h, P("x^5+lambda*x"), 6);
  CHECK(contact_defect(h, P("x^5+lambda*x"), th.X, th.S, 6).is_zero());

  auto id = transformation_solve(P("x^4+lambda"), P("x^4+lambda"), 5);
  CHECK(id.X == P("x"));
  CHECK(id.S == P("1"));
  auto sc = transformation_solve(P("x^4+lambda"), P("48*x^4+3*lambda"), 5);
  CHECK(sc.X == P("2*x"));
  CHECK(sc.S == P("3"));
  auto pf = transformation_solve(P("x^3-x*lambda"), P("8*x^3-2*x*lambda"), 5);
  CHECK(contact_defect(P("x^3-x*lambda"), P("8*x^3-2*x*lambda"), pf.X, pf.S, 5).is_zero());

  CHECK_THROWS_AS(transformation_solve(P("x^4+lambda"), P("x^4-lambda"), 5), std::domain_error);
  CHECK_THROWS_AS(transformation_solve(P("x^4+lambda"), P("2*x^4+3*lambda"), 5), std::domain_error);
  CHECK_THROWS_AS(transformation_solve(P("x^3+lambda"), P("x^4+lambda"), 5), std::domain_error);
}
