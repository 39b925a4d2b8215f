#include <random>

#include "printers.hpp"
#include "germforge/cli.hpp"
#include "germforge/json_io.hpp"
#include "germforge/svg.hpp"

using namespace germforge;
using json_io::json;

namespace {
CommandResult run(const std::string& cmd, std::vector<std::string> args, bool js = false) {
  CommandRequest r;
  r.command = cmd;
  r.args = std::move(args);
  r.json = js;
  return run_command(r);
}

Polynomial random_poly(std::mt19937& rng, std::size_t nvars) {
  std::uniform_int_distribution<int> e(0, 6), c(-50, 50), d(1, 9), n(0, 6);
  std::vector<Term> t;
  int terms = n(rng);
  for (int i = 0; i < terms; ++i) {
    std::vector<unsigned> ex(nvars);
    for (auto& x : ex) x = unsigned(e(rng));
    t.push_back({Rational(c(rng), d(rng)), Monomial(ex)});
  }
  for (auto& x : t) x.coeff.canonicalize();
  return Polynomial::from_terms(t);
}
}  // namespace

TEST_CASE("json round trips") {
  std::mt19937 rng(9);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 2 + std::size_t(i % 3);
    Polynomial p = random_poly(rng, n);
    json j = json_io::to_json(p, n);
    CHECK(json_io::polynomial_from_json(json::parse(j.dump())) == p);
  }
  Rational huge(Integer("123456789012345678901234567890"), Integer("11"));
  huge.canonicalize();
  CHECK(json_io::rational_from_json(json::parse(json_io::to_json(huge).dump())) == huge);
  Polynomial big = Polynomial::monomial(Monomial{3, 1}, huge) + Polynomial(Rational(-1, 3));
  CHECK(json_io::polynomial_from_json(json_io::to_json(big, 2)) == big);

  IntrinsicIdeal I{{{6, 0}, {2, 1}, {0, 2}}};
  CHECK(json_io::intrinsic_from_json(json::parse(json_io::to_json(I).dump())) == I);

  std::vector<Monomial> ms{Monomial{1, 0}, Monomial{0, 3}, Monomial{}};
  CHECK(json_io::monomials_from_json(json_io::to_json(ms, 2)) == ms);

  // transition data, regions and diagrams re-serialize to the same text
  auto G = Unfolding::parse("x^4+lambda+alpha1*x+alpha2*x^2", default_parameter_names(2));
  auto T = transition_set(G);
  for (const auto* c : T.components()) {
    json j = json_io::to_json(*c, 2);
    auto back = json_io::component_from_json(json::parse(j.dump()));
    CHECK(back.gens == c->gens);
    CHECK(json_io::to_json(back, 2).dump() == j.dump());
  }
  auto P = persistent_diagrams(G, T);
  for (const auto& pd : P.diagrams) {
    json r = json_io::to_json(pd.region), d = json_io::to_json(pd.diagram);
    auto rb = json_io::region_from_json(json::parse(r.dump()));
    auto db = json_io::diagram_from_json(json::parse(d.dump()));
    CHECK(rb.point == pd.region.point);
    CHECK(db.roots == pd.diagram.roots);
    CHECK(db.lambdas == pd.diagram.lambdas);
    CHECK(json_io::to_json(rb).dump() == r.dump());
    CHECK(json_io::to_json(db).dump() == d.dump());
  }
}

TEST_CASE("command outputs") {
  auto nf = run("normal-form", {"exp(x^2)+2*cos(x)-3+sin(lambda)"});
  CHECK(nf.code == kExitOk);
  CHECK(nf.out == "7/12*x^4 + lambda\n");

  auto sb = run("standard-basis", {"x", "lambda"});
  CHECK(sb.out.find("basis: {x, lambda}\n") != std::string::npos);

  auto ao = run("alg-objects", {"x^5+lambda*x+lambda^2"}, true);
  REQUIRE(ao.code == kExitOk);
  json j = json::parse(ao.out);
  CHECK(j["schema"] == 1);
  CHECK(json_io::intrinsic_from_json(j["P"]) == IntrinsicIdeal{{{6, 0}, {2, 1}, {0, 2}}});
  CHECK(json_io::intrinsic_from_json(j["RT"]["intrinsic"]) == IntrinsicIdeal{{{5, 0}, {1, 1}}});
  CHECK(json_io::polynomials_from_json(j["T"]["span"]) ==
        std::vector<Polynomial>{parse_polynomial("x+2*lambda"), parse_polynomial("x^4+1/5*lambda")});
  CHECK(json_io::monomials_from_json(j["E/T"]) ==
        std::vector<Monomial>{Monomial{0, 0}, Monomial{0, 1}, Monomial{2, 0}, Monomial{3, 0}});
  CHECK(json_io::monomials_from_json(j["corners"]) == std::vector<Monomial>{Monomial{1, 1}, Monomial{5, 0}});

  auto uu = run("universal-unfolding", {"x^5+lambda*x"}, true);
  json u = json::parse(uu.out);
  CHECK(u["codimension"] == 4);
  CHECK(json_io::polynomial_from_json(u["unfolding"]) ==
        parse_polynomial("x^5+lambda*x+alpha1+alpha2*lambda+alpha3*x^2+alpha4*x^3", {"x", "lambda", "alpha1", "alpha2",
                                                                                    "alpha3", "alpha4"}));

  CommandRequest dv;
  dv.command = "division";
  dv.args = {"x^2*lambda", "x*lambda-x^2*lambda^2-x^4"};
  dv.degree = 6;
  auto dr = run_command(dv);
  CHECK(dr.code == kExitOk);
  // without a degree the single generator has infinite codimension
  CHECK(run("division", {"x^2*lambda", "x*lambda-x^2*lambda^2-x^4"}).code == kExitInfinite);
  auto tr = run("transformation", {"exp(x^2)+2*cos(x)-3+sin(lambda)", "7/12*x^4+lambda"}, true);
  REQUIRE(tr.code == kExitOk);
  CHECK(json_io::polynomial_from_json(json::parse(tr.out)["residual"]).is_zero());

  auto rc = run("recognition", {"x^4+lambda", "exp(x^2)+2*cos(x)-3+sin(lambda)"});
  CHECK(rc.out.find("recognized") == rc.out.size() - std::string("recognized\n").size());
}

TEST_CASE("exit codes") {
  CHECK(run("normal-form", {"x^^2"}).code == kExitParse);
  CHECK(run("normal-form", {"x^2+lambda+1"}).code == kExitParse);
  CHECK(run("no-such-command", {"x"}).code == kExitParse);
  CommandRequest v;
  v.command = "verify";
  v.args = {"x^2"};
  v.degree = 30;
  CHECK(run_command(v).code == kExitCertification);
  CHECK(run("normal-form", {"exp(x^2)-1"}).code == kExitInfinite);
  CHECK(run("normal-set", {"x^2"}).code == kExitInfinite);
  CommandRequest big;
  big.command = "persistent-diagrams";
  big.args = {"x^3+lambda+alpha1*x"};
  big.grid = 10000000;
  CHECK(run_command(big).code == kExitNumeric);
  CHECK(run("transformation", {"x^4+lambda", "x^4-lambda"}).code == kExitNoSolution);

  CommandRequest svg;
  svg.command = "transition-set";
  svg.args = {"x^4+lambda*x+alpha1+alpha2*lambda+alpha3*x^2"};
  svg.svg = "unused.svg";
  auto r = run_command(svg);
  CHECK(r.code == kExitParse);
  CHECK(r.files.empty());

  auto e = run("alg-objects", {"lambda^3*sin(x)"}, true);
  CHECK(e.code == kExitInfinite);
  CHECK(json::parse(e.out)["error"]["code"] == kExitInfinite);
}

TEST_CASE("deterministic output") {
  for (const char* cmd : {"transition-set", "persistent-diagrams"}) {
    CommandRequest r;
    r.command = cmd;
    r.args = {"x^4+lambda+alpha1*x+alpha2*x^2"};
    r.json = true;
    r.svg = "plot";
    auto a = run_command(r), b = run_command(r);
    CHECK(a.out == b.out);
    REQUIRE(a.files.size() == b.files.size());
    for (std::size_t i = 0; i < a.files.size(); ++i) CHECK(a.files[i] == b.files[i]);
  }
}

TEST_CASE("svg plots") {
  // fold x^2 + lambda = 0: every root lies left of lambda = 0
  auto G = universal_unfolding(SingularGerm::parse("x^2+lambda"));
  auto d = diagram_trace(G, {});
  for (std::size_t i = 0; i < d.lambdas.size(); ++i) CHECK((d.roots[i].empty() || d.lambdas[i] <= 0));
  std::string s = diagram_svg(d);
  CHECK(s.find("<svg") != std::string::npos);
  CHECK(s.find(">lambda</text>") != std::string::npos);
  CHECK(s.find("rotate(-90") != std::string::npos);
  CHECK(s.find("<circle") != std::string::npos);

  // empty transition set: axes only
  auto empty = transition_svg(transition_set(G));
  CHECK(empty.find("<circle") == std::string::npos);
  CHECK(empty.find("stroke-width=\"1.5\"") == std::string::npos);

  auto Gq = Unfolding::parse("x^4+lambda+alpha1*x+alpha2*x^2", default_parameter_names(2));
  auto q = transition_svg(transition_set(Gq));
  CHECK(q.find("#2a9d3a") != std::string::npos);  // hysteresis curve
  CHECK(q.find("#c0392b") != std::string::npos);  // double limit half-line
}
