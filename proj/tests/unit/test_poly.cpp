#include <random>

#include "printers.hpp"
#include "germforge/germ_expr.hpp"
#include "germforge/polynomial.hpp"

using namespace germforge;

namespace {
Polynomial P(const std::string& s) { return parse_polynomial(s); }
const Monomial X{1, 0}, L{0, 1};
}  // namespace

TEST_CASE("alex order basics") {
  auto o = MonomialOrder::alex();
  CHECK(order_compare(o, Monomial{2, 0}, X) == Cmp::Less);
  CHECK(order_compare(o, X, L) == Cmp::Greater);
  CHECK(order_compare(o, Monomial{}, X) == Cmp::Greater);
  auto lex = MonomialOrder::lex();
  CHECK(order_compare(lex, Monomial{0, 4}, Monomial{0, 3}) == Cmp::Greater);
  CHECK(order_compare(lex, X, Monomial{0, 9}) == Cmp::Greater);
}

TEST_CASE("order rejects variables outside its list") {
  auto o = MonomialOrder::alex(2);
  CHECK_THROWS_AS(o.compare(Monomial{0, 0, 1}, X), std::invalid_argument);
}

TEST_CASE("orders are total and multiplicative on random monomials") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<unsigned> e(0, 4);
  std::vector<MonomialOrder> orders{MonomialOrder::alex(3), MonomialOrder::lex(3), MonomialOrder::degrevlex(3),
                                    MonomialOrder::block({1, 2})};
  for (const auto& o : orders) {
    for (int it = 0; it < 400; ++it) {
      Monomial a{e(rng), e(rng), e(rng)}, b{e(rng), e(rng), e(rng)}, c{e(rng), e(rng), e(rng)};
      int ab = o.cmp(a, b), ba = o.cmp(b, a);
      CHECK(ab == -ba);
      CHECK((ab == 0) == (a == b));
      if (ab > 0) CHECK(o.cmp(a * c, b * c) > 0);
      if (ab > 0 && o.cmp(b, c) > 0) CHECK(o.cmp(a, c) > 0);
    }
  }
}

TEST_CASE("leading data") {
  auto o = MonomialOrder::alex();
  Polynomial f = P("lambda - lambda*x - lambda*x^2");
  auto d = leading_data(o, f);
  // oracle: the term that beats every other term pairwise
  for (const auto& t : f.terms()) CHECK(o.cmp(d.lm(), t.mono) >= 0);
  CHECK(d.lm() == L);
  CHECK(leading_data(o, P("1 - x")).lm() == Monomial{});
  CHECK(leading_data(o, Polynomial()).zero);
}

TEST_CASE("leading terms are multiplicative") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> c(-3, 3);
  std::uniform_int_distribution<unsigned> e(0, 4);
  auto o = MonomialOrder::alex();
  for (int it = 0; it < 200; ++it) {
    std::vector<Term> ta, tb;
    for (int k = 0; k < 4; ++k) {
      ta.push_back({c(rng), Monomial{e(rng), e(rng)}});
      tb.push_back({c(rng), Monomial{e(rng), e(rng)}});
    }
    Polynomial a = Polynomial::from_terms(ta), b = Polynomial::from_terms(tb);
    if (a.is_zero() || b.is_zero()) continue;
    auto la = leading_data(o, a), lb = leading_data(o, b), lab = leading_data(o, a * b);
    CHECK(lab.lm() == la.lm() * lb.lm());
    CHECK(lab.lc() == la.lc() * lb.lc());
  }
}

TEST_CASE("s-germ of the worked example") {
  auto o = MonomialOrder::alex();
  Polynomial f = P("x*lambda - x^2*lambda^2 - x^4");
  Polynomial g = P("lambda - x*lambda - x*lambda^2 - x^3");
  CHECK(s_germ(o, f, g) == P("x^2*lambda"));
  CHECK(s_germ(o, f, f).is_zero());
  CHECK(s_germ(o, f, Polynomial()).is_zero());
  // the S-germ drops below the lcm of the leading monomials
  auto s = s_germ(o, f, g);
  CHECK(o.cmp(leading_data(o, s).lm(), Monomial::lcm(X * L, L)) < 0);
}

TEST_CASE("arithmetic and calculus") {
  CHECK(P("x^5+lambda*x+lambda^2").derivative(0) == P("5*x^4+lambda"));
  CHECK(P("(x+lambda)*(x-lambda)") == P("x^2-lambda^2"));
  Polynomial f = P("x^3 + 2*x*lambda - 1/3");
  CHECK(f.substitute(0, Polynomial::var(0)) == f);
  CHECK(f.substitute(0, P("x+lambda")) == P("(x+lambda)^3 + 2*(x+lambda)*lambda - 1/3"));
  CHECK(f.substitute(0, P("x+lambda"), 2) == P("2*x*lambda + 2*lambda^2 - 1/3"));
  CHECK(to_string(P("lambda + 7/12*x^4")) == "7/12*x^4 + lambda");
  CHECK(to_string(P("-x^2 + 3")) == "-x^2 + 3");
  CHECK(P("x^2*lambda").coeff(Monomial{2, 1}) == 1);
  CHECK(P("x/2") == P("1/2*x"));
}

TEST_CASE("parser") {
  auto e = parse_germ("exp(x^2)+2*cos(x)-3+sin(lambda)");
  REQUIRE(e.root()->kind == ExprKind::Sum);
  CHECK(e.root()->kids.size() == 4);
  CHECK(parse_germ("x").root()->kind == ExprKind::Var);
  CHECK(parse_germ("x^5 - lambda^2").is_polynomial());
  CHECK(parse_germ("λ^2").to_polynomial() == P("lambda^2"));
  CHECK_THROWS_AS(parse_germ("x + "), ParseError);
  CHECK_THROWS_AS(parse_germ("tan(x)"), ParseError);
  CHECK_THROWS_AS(parse_germ("1.5*x"), ParseError);
  CHECK_THROWS_AS(parse_germ("x*/2"), ParseError);
  try {
    parse_germ("x + y");
    FAIL("expected error");
  } catch (const ParseError& err) {
    CHECK(err.position() == 4);
  }
}

TEST_CASE("taylor jets") {
  auto j = taylor_jet(parse_germ("exp(x^2)+2*cos(x)-3+sin(lambda)"), 5);
  // exp(x^2) = 1 + x^2 + x^4/2, 2cos(x) = 2 - x^2 + x^4/12, sin(l) = l - l^3/6 + l^5/120
  CHECK(j.poly == P("lambda + 7/12*x^4 - 1/6*lambda^3 + 1/120*lambda^5"));
  auto jx = taylor_jet(parse_germ("x"), 3);
  CHECK(jx.poly == P("x"));
  CHECK(jx.tail.empty());
  CHECK_THROWS_AS(taylor_jet(parse_germ("exp(1+x)"), 3), CompositionError);
  CHECK(taylor_jet(parse_germ("ln1p(x)"), 4).poly == P("x - x^2/2 + x^3/3 - x^4/4"));
  CHECK(taylor_jet(parse_germ("sin(x)^2 + cos(x)^2"), 8).poly == P("1"));
}

TEST_CASE("tail supports") {
  auto e = parse_germ("lambda^3*sin(x)");
  auto j6 = taylor_jet(e, 6);
  CHECK(j6.poly == P("lambda^3*x - 1/6*lambda^3*x^3"));
  CHECK(j6.tail.cone == std::vector<Monomial>{Monomial{5, 3}});
  auto j4 = taylor_jet(e, 4);
  CHECK(j4.poly == P("lambda^3*x"));
  CHECK(j4.tail.cone == std::vector<Monomial>{Monomial{3, 3}});
  CHECK(tail_support(parse_germ("exp(x)+exp(lambda)"), 3).cone == std::vector<Monomial>{Monomial{4, 0}, Monomial{0, 4}});
  CHECK(tail_support(parse_germ("x^3 - lambda"), 2).cone == std::vector<Monomial>{Monomial{3, 0}});
  CHECK(tail_support(parse_germ("x^3 - lambda"), 3).empty());
}

TEST_CASE("jet consistency, multiplicativity and tail soundness") {
  const char* exprs[] = {"exp(x^2)+2*cos(x)-3+sin(lambda)", "lambda^3*sin(x)", "exp(x*lambda)-1",
                         "ln1p(x+lambda^2)*cos(lambda)", "sin(sin(x)+lambda)", "exp(x)*sin(lambda^2+x^3)",
                         "cos(x^6)-lambda-1", "sin(lambda^7+x)+exp(x^4)-x-1-lambda^9"};
  for (const char* s : exprs) {
    CAPTURE(s);
    auto e = parse_germ(s);
    for (unsigned n1 = 0; n1 <= 7; ++n1) {
      auto j1 = taylor_jet(e, n1);
      auto j2 = taylor_jet(e, 12);
      CHECK(j2.poly.truncated(n1) == j1.poly);
      REQUIRE(!j1.tail.unknown);
      for (const auto& t : j2.poly.terms())
        if (t.mono.degree() > n1) CHECK(j1.tail.covers(t.mono));
    }
  }
  auto a = parse_germ("exp(x)+sin(lambda)"), b = parse_germ("cos(x*lambda)+ln1p(x)");
  auto ab = parse_germ("(exp(x)+sin(lambda))*(cos(x*lambda)+ln1p(x))");
  for (unsigned N = 0; N < 7; ++N)
    CHECK(taylor_jet(ab, N).poly == Polynomial::mul_trunc(taylor_jet(a, N).poly, taylor_jet(b, N).poly, int(N)));
}

TEST_CASE("jet derivatives keep sound tails") {
  auto e = parse_germ("lambda^3*sin(x) + exp(lambda*x^2)");
  auto j = taylor_jet(e, 8);
  auto hi = taylor_jet(e, 14);
  for (std::size_t v : {0u, 1u}) {
    auto d = jet_derivative(j, v);
    auto dh = hi.poly.derivative(v);
    CHECK(d.degree == 7);
    CHECK(dh.truncated(7) == d.poly);
    for (const auto& t : dh.terms())
      if (t.mono.degree() > 7 && t.mono.degree() <= 13) CHECK(d.tail.covers(t.mono));
  }
}
