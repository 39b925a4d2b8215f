#include "germforge/json_io.hpp"

#include <stdexcept>

namespace germforge::json_io {

namespace {

json integer(const Integer& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

Integer integer_from(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

const char* kind_name(SideCondition::Kind k) {
  switch (k) {
    case SideCondition::Kind::AllReal: return "all-real";
    case SideCondition::Kind::EmptyReal: return "empty-real";
    case SideCondition::Kind::Sign: return "sign";
    case SideCondition::Kind::Mixed: return "mixed";
    case SideCondition::Kind::Undetermined: return "undetermined";
  }
  return "undetermined";
}

SideCondition::Kind kind_from(const std::string& s) {
  for (auto k : {SideCondition::Kind::AllReal, SideCondition::Kind::EmptyReal, SideCondition::Kind::Sign,
                 SideCondition::Kind::Mixed, SideCondition::Kind::Undetermined})
    if (s == kind_name(k)) return k;
  throw std::invalid_argument("unknown side condition kind " + s);
}

std::vector<Rational> rationals_from(const json& j) {
  std::vector<Rational> v;
  for (const auto& e : j) v.push_back(rational_from_json(e));
  return v;
}

json rationals(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_json(q));
  return a;
}

}  // namespace

json to_json(const Rational& q) { return json::array({integer(q.get_num()), integer(q.get_den())}); }

Rational rational_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("a rational is [num, den]");
  Rational q(integer_from(j[0]), integer_from(j[1]));
  q.canonicalize();
  return q;
}

json to_json(const Monomial& m, std::size_t nvars) { return json(m.exponents(nvars)); }

Monomial monomial_from_json(const json& j) { return Monomial(j.get<std::vector<unsigned>>()); }

json to_json(const std::vector<Monomial>& ms, std::size_t nvars) {
  json a = json::array();
  for (const auto& m : ms) a.push_back(to_json(m, nvars));
  return a;
}

std::vector<Monomial> monomials_from_json(const json& j) {
  std::vector<Monomial> v;
  for (const auto& e : j) v.push_back(monomial_from_json(e));
  return v;
}

json to_json(const Polynomial& p, std::size_t nvars) {
  json a = json::array();
  for (const auto& t : p.terms())
    a.push_back(json::array({integer(t.coeff.get_num()), integer(t.coeff.get_den()), t.mono.exponents(nvars)}));
  return a;
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("a polynomial is a list of terms");
  std::vector<Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("a term is [num, den, exponents]");
    Rational c(integer_from(t[0]), integer_from(t[1]));
    c.canonicalize();
    terms.push_back({c, monomial_from_json(t[2])});
  }
  return Polynomial::from_terms(std::move(terms));
}

json to_json(const std::vector<Polynomial>& ps, std::size_t nvars) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(to_json(p, nvars));
  return a;
}

std::vector<Polynomial> polynomials_from_json(const json& j) {
  std::vector<Polynomial> v;
  for (const auto& e : j) v.push_back(polynomial_from_json(e));
  return v;
}

json to_json(const IntrinsicIdeal& I) {
  json a = json::array();
  for (auto [m, n] : I.stairs) a.push_back(json::array({m, n}));
  return a;
}

IntrinsicIdeal intrinsic_from_json(const json& j) {
  IntrinsicIdeal I;
  for (const auto& e : j) I.stairs.emplace_back(e.at(0).get<unsigned>(), e.at(1).get<unsigned>());
  return I;
}

json to_json(const SideCondition& s) {
  json o;
  o["kind"] = kind_name(s.kind);
  o["param"] = s.param;
  o["sign"] = s.sign;
  o["sampled"] = s.sampled;
  o["realized"] = s.realized;
  return o;
}

SideCondition side_condition_from_json(const json& j) {
  SideCondition s;
  s.kind = kind_from(j.at("kind").get<std::string>());
  s.param = j.at("param").get<std::size_t>();
  s.sign = j.at("sign").get<int>();
  s.sampled = j.at("sampled").get<std::size_t>();
  s.realized = j.at("realized").get<std::size_t>();
  return s;
}

json to_json(const TransitionComponent& c, std::size_t nparams) {
  json o;
  o["name"] = c.name;
  o["empty"] = c.empty;
  o["full"] = c.full;
  o["generators"] = to_json(c.gens, nparams);
  json side = json::array();
  for (const auto& s : c.side) side.push_back(to_json(s));
  o["side"] = side;
  return o;
}

TransitionComponent component_from_json(const json& j) {
  TransitionComponent c;
  c.name = j.at("name").get<std::string>();
  c.empty = j.at("empty").get<bool>();
  c.full = j.at("full").get<bool>();
  c.gens = polynomials_from_json(j.at("generators"));
  for (const auto& s : j.at("side")) c.side.push_back(side_condition_from_json(s));
  return c;
}

json to_json(const ParameterRegion& r) {
  json o;
  o["id"] = r.id;
  o["point"] = rationals(r.point);
  o["signs"] = r.signs;
  o["cells"] = r.cells;
  json s = json::array();
  for (const auto& p : r.samples) s.push_back(rationals(p));
  o["samples"] = s;
  return o;
}

ParameterRegion region_from_json(const json& j) {
  ParameterRegion r;
  r.id = j.at("id").get<std::size_t>();
  r.point = rationals_from(j.at("point"));
  r.signs = j.at("signs").get<std::vector<int>>();
  r.cells = j.at("cells").get<std::size_t>();
  for (const auto& p : j.at("samples")) r.samples.push_back(rationals_from(p));
  return r;
}

json to_json(const BifurcationDiagram& d) {
  json o;
  o["alpha"] = rationals(d.alpha);
  o["signature"] = d.signature;
  o["counts"] = d.counts;
  json folds = json::array();
  for (const auto& f : d.folds)
    folds.push_back({{"lambda", f.lambda}, {"x", f.x}, {"pair", f.pair}, {"opens_right", f.opens_right}});
  o["folds"] = folds;
  o["lambdas"] = d.lambdas;
  o["roots"] = d.roots;
  o["dropped"] = d.dropped;
  o["max_residual"] = d.max_residual;
  return o;
}

BifurcationDiagram diagram_from_json(const json& j) {
  BifurcationDiagram d;
  d.alpha = rationals_from(j.at("alpha"));
  d.signature = j.at("signature").get<std::string>();
  d.counts = j.at("counts").get<std::vector<std::size_t>>();
  for (const auto& f : j.at("folds")) {
    Fold x;
    x.lambda = f.at("lambda").get<double>();
    x.x = f.at("x").get<double>();
    x.pair = f.at("pair").get<std::size_t>();
    x.opens_right = f.at("opens_right").get<bool>();
    d.folds.push_back(x);
  }
  d.lambdas = j.at("lambdas").get<std::vector<double>>();
  d.roots = j.at("roots").get<std::vector<std::vector<double>>>();
  d.dropped = j.at("dropped").get<std::size_t>();
  d.max_residual = j.at("max_residual").get<double>();
  return d;
}

}  // namespace germforge::json_io
