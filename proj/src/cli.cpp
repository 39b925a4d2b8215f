#include "germforge/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "germforge/errors.hpp"
#include "germforge/json_io.hpp"
#include "germforge/svg.hpp"

namespace germforge {

namespace {

using json_io::json;
using json_io::to_json;

struct Usage : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Out {
  const CommandRequest& req;
  std::ostringstream text;
  json result = json::object();
  std::vector<std::pair<std::string, std::string>> files;
  int code = kExitOk;
};

void need_args(const CommandRequest& req, std::size_t lo, std::size_t hi = std::size_t(-1)) {
  if (req.args.size() < lo || req.args.size() > hi)
    throw Usage(req.command + ": expected " + std::to_string(lo) +
                (hi == lo ? "" : hi == std::size_t(-1) ? " or more" : " to " + std::to_string(hi)) + " operand(s)");
}

const char* status_name(CodimStatus s) {
  switch (s) {
    case CodimStatus::Finite: return "finite";
    case CodimStatus::Infinite: return "infinite";
    case CodimStatus::Uncertified: return "uncertified";
  }
  return "uncertified";
}

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::string list(const std::vector<Polynomial>& ps, const VarNames& names) {
  std::vector<std::string> v;
  for (const auto& p : ps) v.push_back(to_string(p, names));
  return "{" + join(v) + "}";
}

std::string list(const std::vector<Monomial>& ms, const VarNames& names) {
  std::vector<std::string> v;
  for (const auto& m : ms) v.push_back(to_string(m, names));
  return "{" + join(v) + "}";
}

// ---- ideals -----------------------------------------------------------------

MonomialOrder order_for(const CommandRequest& req, std::size_t n) {
  std::string o = req.order;
  if (o.empty()) o = req.ring == "poly" ? "lex" : "alex";
  if (o == "alex") {
    if (req.ring == "poly") throw Usage("the local order alex needs --ring jet");
    return MonomialOrder::alex(n);
  }
  if (req.ring != "poly") throw Usage("order " + o + " is global; use --ring poly");
  if (o == "lex") return MonomialOrder::lex(n);
  if (o == "degrevlex") return MonomialOrder::degrevlex(n);
  throw Usage("unknown order " + o);
}

struct Ring {
  VarNames names;
  IdealBasis basis;
  std::string summary;
};

std::vector<GermExpression> expressions(const std::vector<std::string>& texts, const VarNames& names) {
  std::vector<GermExpression> v;
  for (const auto& t : texts) v.push_back(parse_expression(t, names));
  return v;
}

unsigned jet_degree(const CommandRequest& req, const std::vector<GermExpression>& gens) {
  if (req.degree) return *req.degree;
  if (req.vars.size() != 2) throw Usage("--degree is required with more than two variables");
  auto cert = verify_truncation(gens, 1);
  if (cert.status == CodimStatus::Infinite)
    throw InfiniteCodimensionError("the ideal has infinite codimension (" + cert.staircase.to_string() +
                                   " is its intrinsic part); pass --degree to work in a fixed jet ring");
  if (cert.status != CodimStatus::Finite) throw CertificationError("no truncation degree certified: " + cert.note);
  return cert.N;
}

Ring make_ring(const CommandRequest& req, const std::vector<std::string>& texts) {
  if (req.ring != "jet" && req.ring != "poly") throw Usage("--ring must be jet or poly");
  VarNames names = req.vars;
  auto exprs = expressions(texts, names);
  MonomialOrder o = order_for(req, names.size());
  std::vector<Polynomial> gens;
  if (req.ring == "poly") {
    for (const auto& e : exprs) {
      if (!e.is_polynomial()) throw Usage("the polynomial ring needs polynomial generators: " + e.to_string());
      gens.push_back(e.to_polynomial());
    }
    return {names, IdealBasis::poly(gens, o), "ring K[" + join(names) + "], order " + o.describe()};
  }
  unsigned N = jet_degree(req, exprs);
  for (const auto& e : exprs) gens.push_back(taylor_jet(e, N).poly);
  return {names, IdealBasis::jet(gens, N, o),
          "ring K[" + join(names) + "]/M^" + std::to_string(N + 1) + ", order " + o.describe()};
}

// Reduced basis listed by decreasing leading monomial.
IdealBasis reduced(const IdealBasis& B) {
  IdealBasis R = B.is_jet() ? reduce_basis(standard_basis(B)) : reduce_basis(groebner_basis(B));
  std::vector<Polynomial> g = R.gens();
  const MonomialOrder& o = R.order();
  std::stable_sort(g.begin(), g.end(), [&o](const Polynomial& a, const Polynomial& b) {
    return o.cmp(leading_data(o, a).lm(), leading_data(o, b).lm()) > 0;
  });
  return R.with_gens(g);
}

void ring_info(Out& o, const Ring& R) {
  o.text << R.summary << "\n";
  o.result["ring"] = R.basis.is_jet() ? "jet" : "poly";
  if (R.basis.is_jet()) o.result["degree"] = R.basis.degree();
}

void cmd_verify(Out& o) {
  need_args(o.req, 1);
  auto exprs = expressions(o.req.args, o.req.vars);
  auto c = verify_truncation(exprs, o.req.degree.value_or(1));
  o.text << "status: " << status_name(c.status) << "\nN: " << c.N << "\n";
  if (c.k) o.text << "M^" << *c.k << " lies in the ideal\n";
  o.text << "ring: " << (c.advice == RingKind::GlobalPoly ? "poly" : "jet") << "\n";
  o.text << "intrinsic part: " << c.staircase.to_string() << (c.staircase_exact ? "" : " (lower bound)") << "\n";
  if (!c.note.empty()) o.text << "note: " << c.note << "\n";
  o.result["status"] = status_name(c.status);
  o.result["N"] = c.N;
  o.result["k"] = c.k ? json(*c.k) : json(nullptr);
  o.result["advice"] = c.advice == RingKind::GlobalPoly ? "poly" : "jet";
  o.result["staircase"] = to_json(c.staircase);
  o.result["staircase_exact"] = c.staircase_exact;
  o.result["note"] = c.note;
  if (c.status == CodimStatus::Uncertified) o.code = kExitCertification;
}

void cmd_standard_basis(Out& o) {
  need_args(o.req, 1);
  Ring R = make_ring(o.req, o.req.args);
  IdealBasis S = reduced(R.basis);
  std::size_t n = R.names.size();
  ring_info(o, R);
  o.text << "basis: " << list(S.gens(), R.names) << "\nleading ideal: " << list(lt_ideal(S), R.names) << "\n";
  o.result["basis"] = to_json(S.gens(), n);
  o.result["leading"] = to_json(lt_ideal(S), n);
}

void cmd_division(Out& o) {
  need_args(o.req, 2);
  Ring R = make_ring(o.req, {o.req.args.begin() + 1, o.req.args.end()});
  auto e = parse_expression(o.req.args[0], R.names);
  if (!R.basis.is_jet() && !e.is_polynomial()) throw Usage("the polynomial ring needs a polynomial dividend");
  Polynomial f = R.basis.is_jet() ? taylor_jet(e, R.basis.degree()).poly : e.to_polynomial();
  const auto& divisors = R.basis.gens();
  auto d = divide(f, R.basis.with_gens(divisors));
  std::size_t n = R.names.size();
  ring_info(o, R);
  o.text << "remainder: " << to_string(d.remainder, R.names) << "\nquotients: " << list(d.quotients, R.names) << "\n";
  if (d.truncated) o.text << "terms above the jet degree were dropped\n";
  o.result["remainder"] = to_json(d.remainder, n);
  o.result["quotients"] = to_json(d.quotients, n);
  o.result["truncated"] = d.truncated;
}

Monomial parse_monomial(const std::string& text, const VarNames& names) {
  Polynomial p = parse_polynomial(text, names);
  if (!p.is_monomial() || p.terms().front().coeff != 1) throw Usage("expected a monomial: " + text);
  return p.terms().front().mono;
}

void cmd_colon(Out& o) {
  need_args(o.req, 2);
  Monomial g = parse_monomial(o.req.args[0], o.req.vars);
  Ring R = make_ring(o.req, {o.req.args.begin() + 1, o.req.args.end()});
  IdealBasis C = reduced(colon_ideal(reduced(R.basis), g));
  ring_info(o, R);
  o.text << "colon ideal: " << list(C.gens(), R.names) << "\n";
  o.result["basis"] = to_json(C.gens(), R.names.size());
  o.result["leading"] = to_json(lt_ideal(C), R.names.size());
}

void cmd_mult_matrix(Out& o) {
  need_args(o.req, 2);
  const auto& names = o.req.vars;
  auto it = std::find(names.begin(), names.end(), o.req.args[0]);
  if (it == names.end()) throw Usage("unknown variable " + o.req.args[0]);
  std::size_t var = std::size_t(it - names.begin());
  Ring R = make_ring(o.req, {o.req.args.begin() + 1, o.req.args.end()});
  IdealBasis S = reduced(R.basis);
  auto basis = normal_set(S).monomials;
  auto M = mult_matrix(S, var);
  ring_info(o, R);
  o.text << "basis: " << list(basis, R.names) << "\n";
  json rows = json::array();
  for (const auto& row : M.matrix) {
    std::vector<std::string> cells;
    json r = json::array();
    for (const auto& c : row) {
      cells.push_back(to_string(c));
      r.push_back(to_json(c));
    }
    o.text << "[" << join(cells, " ") << "]\n";
    rows.push_back(r);
  }
  o.text << "nilpotency: " << M.nilpotency << "\n";
  o.result["variable"] = names[var];
  o.result["basis"] = to_json(basis, R.names.size());
  o.result["matrix"] = rows;
  o.result["nilpotency"] = M.nilpotency;
}

void cmd_normal_set(Out& o) {
  need_args(o.req, 1);
  Ring R = make_ring(o.req, o.req.args);
  auto ns = normal_set(reduced(R.basis)).monomials;
  ring_info(o, R);
  o.text << "normal set: " << list(ns, R.names) << "\ndimension: " << ns.size() << "\n";
  o.result["normal_set"] = to_json(ns, R.names.size());
  o.result["dimension"] = ns.size();
}

void cmd_intrinsic(Out& o) {
  need_args(o.req, 1);
  if (o.req.ring != "jet") throw Usage("intrinsic works in the jet ring");
  if (o.req.vars.size() != 2) throw Usage("intrinsic needs the variables x, lambda");
  Ring R = make_ring(o.req, o.req.args);
  auto D = intrinsic_decomposition(reduced(R.basis));
  ring_info(o, R);
  o.text << "intrinsic part: " << D.itr.to_string() << "\ncomplement part: " << list(D.complement_part, R.names)
         << "\n";
  o.result["intrinsic"] = to_json(D.itr);
  o.result["complement"] = to_json(D.complement_part, 2);
}

// ---- singularities ----------------------------------------------------------

SingularGerm germ(const CommandRequest& req, const std::string& text) {
  if (req.vars != germ_vars()) throw Usage("germ commands use the variables x, lambda");
  return SingularGerm::parse(text, req.degree.value_or(1));
}

void cmd_alg_objects(Out& o) {
  need_args(o.req, 1, 1);
  auto g = germ(o.req, o.req.args[0]);
  auto A = alg_objects(g);
  VarNames v = germ_vars();
  o.text << "P: " << A.P.to_string() << "\n";
  o.text << "RT: " << A.RT.itr.to_string();
  if (!A.RT.complement.empty()) o.text << " + R" << list(A.RT.complement, v);
  o.text << "\nT: " << A.T.itr.to_string();
  if (!A.T.span.empty()) o.text << " + R" << list(A.T.span, v);
  o.text << "\nE/T: " << list(A.T.et_basis, v) << "\n";
  o.text << "S: " << A.S.S.to_string() << "\nS_perp: " << list(A.S.S_perp, v) << "\ncorners: " << list(A.S.corners, v)
         << "\n";
  o.result["P"] = to_json(A.P);
  o.result["RT"] = {{"intrinsic", to_json(A.RT.itr)}, {"span", to_json(A.RT.complement, 2)}};
  o.result["T"] = {{"intrinsic", to_json(A.T.itr)}, {"span", to_json(A.T.span, 2)}, {"ell", A.T.ell}};
  o.result["E/T"] = to_json(A.T.et_basis, 2);
  o.result["S"] = to_json(A.S.S);
  o.result["S_perp"] = to_json(A.S.S_perp, 2);
  o.result["corners"] = to_json(A.S.corners, 2);
}

void cmd_normal_form(Out& o) {
  need_args(o.req, 1, 1);
  auto g = germ(o.req, o.req.args[0]);
  NormalFormOptions opt;
  opt.normalize = o.req.normalize;
  auto nf = normal_form(g, opt);
  o.text << to_string(nf.poly) << "\n";
  if (sgn(nf.shift) != 0) o.text << "shift: x -> x + " << to_string(nf.shift) << "*lambda\n";
  if (!nf.note.empty()) o.text << "note: " << nf.note << "\n";
  o.result["normal_form"] = to_json(nf.poly, 2);
  o.result["shift"] = to_json(nf.shift);
  o.result["normalized"] = nf.normalized;
  o.result["unremoved"] = to_json(nf.unremoved, 2);
  o.result["note"] = nf.note;
}

void cmd_universal_unfolding(Out& o) {
  need_args(o.req, 1, 1);
  auto g = germ(o.req, o.req.args[0]);
  Unfolding G = universal_unfolding(g);
  if (!o.req.params.empty()) {
    if (o.req.params.size() != G.size())
      throw Usage("the unfolding has " + std::to_string(G.size()) + " parameters, " +
                  std::to_string(o.req.params.size()) + " names were given");
    G.parameters = o.req.params;
  }
  o.text << to_string(G.poly, G.names()) << "\ncodimension: " << G.size() << "\n";
  o.result["vars"] = G.names();
  o.result["unfolding"] = to_json(G.poly, 2 + G.size());
  o.result["directions"] = to_json(G.directions, 2);
  o.result["codimension"] = G.size();
}

void cmd_recognition(Out& o) {
  need_args(o.req, 1, 2);
  if (o.req.vars != germ_vars()) throw Usage("recognition uses the variables x, lambda");
  Polynomial nf = parse_polynomial(o.req.args[0]);
  std::vector<RecognitionCondition> rc;
  if (o.req.args.size() == 2) {
    auto g = germ(o.req, o.req.args[1]);
    rc = recognition_conditions(nf, taylor_jet(g.expr, g.N).poly);
  } else {
    rc = recognition_conditions(nf);
  }
  json a = json::array();
  bool all = true;
  for (const auto& c : rc) {
    std::string d = "d(" + to_string(c.mono, germ_vars()) + ")";
    o.text << d << (c.must_vanish ? " = 0" : " != 0") << "  value " << to_string(c.value)
           << (c.holds ? "  holds" : "  fails") << "\n";
    a.push_back({{"monomial", to_json(c.mono, 2)},
                 {"must_vanish", c.must_vanish},
                 {"value", to_json(c.value)},
                 {"holds", c.holds}});
    all = all && c.holds;
  }
  o.text << (all ? "recognized\n" : "not recognized\n");
  o.result["conditions"] = a;
  o.result["recognized"] = all;
}

void cmd_transformation(Out& o) {
  need_args(o.req, 2, 2);
  unsigned k = o.req.degree.value_or(5);
  CommandRequest r = o.req;
  r.degree.reset();
  auto g = germ(r, o.req.args[0]);
  Polynomial f = taylor_jet(parse_germ(o.req.args[1]), k).poly;
  auto t = transformation_solve(g, f, k);
  Polynomial res = transformation_residual(taylor_jet(g.expr, k).poly, f, t);
  o.text << "X: " << to_string(t.X) << "\nS: " << to_string(t.S) << "\nresidual to degree " << k << ": "
         << to_string(res) << "\n";
  o.result["X"] = to_json(t.X, 2);
  o.result["S"] = to_json(t.S, 2);
  o.result["degree"] = k;
  o.result["residual"] = to_json(res, 2);
}

// ---- transition sets --------------------------------------------------------

Unfolding unfolding(const CommandRequest& req, const std::string& text) {
  if (req.vars != germ_vars()) throw Usage("unfolding commands use the variables x, lambda");
  std::vector<std::string> params = req.params;
  if (params.empty()) {
    static const std::regex alpha(R"(alpha([0-9]+))");
    unsigned k = 0;
    for (std::sregex_iterator it(text.begin(), text.end(), alpha), end; it != end; ++it)
      k = std::max(k, unsigned(std::stoul((*it)[1].str())));
    params = default_parameter_names(k);
  }
  if (params.empty()) return universal_unfolding(SingularGerm::parse(text));
  return Unfolding::parse(text, params);
}

json transition_json(const TransitionSet& T) {
  json comps = json::array();
  for (const auto* c : T.components()) comps.push_back(to_json(*c, T.params.size()));
  return comps;
}

void print_transition(Out& o, const TransitionSet& T) {
  for (const auto* c : T.components()) {
    o.text << c->name << ": ";
    if (c->empty)
      o.text << "empty";
    else if (c->full)
      o.text << "everything";
    else
      o.text << list(c->gens, T.params);
    for (const auto& s : c->side) o.text << "; " << s.text(T.params);
    o.text << "\n";
  }
}

void cmd_transition_set(Out& o) {
  need_args(o.req, 1, 1);
  Unfolding G = unfolding(o.req, o.req.args[0]);
  TransitionOptions opt;
  opt.box = o.req.box;
  auto T = transition_set(G, opt);
  o.text << "G = " << to_string(G.poly, G.names()) << "\n";
  print_transition(o, T);
  o.result["vars"] = G.names();
  o.result["unfolding"] = to_json(G.poly, 2 + G.size());
  o.result["params"] = T.params;
  o.result["components"] = transition_json(T);
  if (!o.req.svg.empty()) o.files.emplace_back(o.req.svg, transition_svg(T, o.req.box));
}

void cmd_persistent(Out& o) {
  need_args(o.req, 1, 1);
  Unfolding G = unfolding(o.req, o.req.args[0]);
  TransitionOptions topt;
  topt.box = o.req.box;
  auto T = transition_set(G, topt);
  RegionOptions ropt;
  ropt.box = o.req.box;
  ropt.grid = o.req.grid;
  auto P = persistent_diagrams(G, T, ropt);
  o.text << "G = " << to_string(G.poly, G.names()) << "\n";
  print_transition(o, T);
  std::set<std::size_t> shortl(P.short_list.begin(), P.short_list.end());
  json regions = json::array();
  std::size_t dropped = 0;
  for (std::size_t i = 0; i < P.diagrams.size(); ++i) {
    const auto& pd = P.diagrams[i];
    dropped += pd.diagram.dropped;
    if (o.req.short_list && !shortl.count(i)) continue;
    std::vector<std::string> pt;
    for (const auto& a : pd.region.point) pt.push_back(to_string(a));
    o.text << "region " << pd.region.id + 1 << " at (" << join(pt) << "), " << pd.region.cells
           << " cells: " << pd.diagram.signature << "\n";
    regions.push_back({{"region", to_json(pd.region)}, {"diagram", to_json(pd.diagram)}});
    if (!o.req.svg.empty())
      o.files.emplace_back(o.req.svg + "-region" + std::to_string(pd.region.id + 1) + ".svg",
                           diagram_svg(pd.diagram, "region " + std::to_string(pd.region.id + 1) + ": " +
                                                       pd.diagram.signature));
  }
  o.text << P.diagrams.size() << " regions, " << P.short_list.size() << " distinct diagrams\n";
  for (const auto& w : P.warnings) o.text << "warning: " << w << "\n";
  o.result["vars"] = G.names();
  o.result["unfolding"] = to_json(G.poly, 2 + G.size());
  o.result["params"] = T.params;
  o.result["components"] = transition_json(T);
  o.result["regions"] = regions;
  o.result["short_list"] = P.short_list;
  o.result["warnings"] = P.warnings;
  if (!o.req.svg.empty() && T.params.size() <= 2) {
    std::vector<ParameterRegion> rs;
    for (const auto& pd : P.diagrams) rs.push_back(pd.region);
    o.files.emplace_back(o.req.svg + "-transition.svg", transition_svg(T, o.req.box, rs));
  }
  if (dropped) {
    o.text << "error: " << dropped << " traced points failed the residual check\n";
    o.code = kExitNumeric;
  }
}

const std::map<std::string, std::function<void(Out&)>>& table() {
  static const std::map<std::string, std::function<void(Out&)>> t{
      {"verify", cmd_verify},
      {"standard-basis", cmd_standard_basis},
      {"division", cmd_division},
      {"colon-ideal", cmd_colon},
      {"mult-matrix", cmd_mult_matrix},
      {"normal-set", cmd_normal_set},
      {"intrinsic", cmd_intrinsic},
      {"alg-objects", cmd_alg_objects},
      {"normal-form", cmd_normal_form},
      {"universal-unfolding", cmd_universal_unfolding},
      {"recognition", cmd_recognition},
      {"transformation", cmd_transformation},
      {"transition-set", cmd_transition_set},
      {"persistent-diagrams", cmd_persistent},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"verify",         "standard-basis",      "division",
                                              "colon-ideal",    "mult-matrix",         "normal-set",
                                              "intrinsic",      "alg-objects",         "normal-form",
                                              "universal-unfolding", "recognition",    "transformation",
                                              "transition-set", "persistent-diagrams"};
  return names;
}

CommandResult run_command(const CommandRequest& req) {
  CommandResult res;
  auto it = table().find(req.command);
  if (it == table().end()) {
    res.code = kExitParse;
    res.err = "unknown command " + req.command + "\n";
    return res;
  }
  Out o{req};
  auto fail = [&](int code, const std::string& kind, const std::string& what) {
    res.code = code;
    res.err = req.command + ": " + kind + ": " + what + "\n";
    if (req.json) {
      json j;
      j["schema"] = json_io::kSchema;
      j["command"] = req.command;
      j["error"] = {{"code", code}, {"kind", kind}, {"message", what}};
      res.out = j.dump(2) + "\n";
    }
  };
  try {
    it->second(o);
  } catch (const ParseError& e) {
    fail(kExitParse, "parse error", e.what());
    return res;
  } catch (const CertificationError& e) {
    fail(kExitCertification, "certification failure", e.what());
    return res;
  } catch (const InfiniteCodimensionError& e) {
    fail(kExitInfinite, "infinite codimension", e.what());
    return res;
  } catch (const StaircaseError& e) {
    fail(kExitInfinite, "infinite codimension", e.what());
    return res;
  } catch (const NumericBudgetError& e) {
    fail(kExitNumeric, "numeric budget", e.what());
    return res;
  } catch (const std::domain_error& e) {
    fail(kExitNoSolution, "no solution", e.what());
    return res;
  } catch (const std::invalid_argument& e) {
    fail(kExitParse, "invalid input", e.what());
    return res;
  } catch (const CompositionError& e) {
    fail(kExitParse, "invalid input", e.what());
    return res;
  }
  res.code = o.code;
  res.files = std::move(o.files);
  if (req.json) {
    json j;
    j["schema"] = json_io::kSchema;
    j["command"] = req.command;
    j["input"] = req.args;
    if (!o.result.contains("vars")) j["vars"] = req.vars;
    for (auto& [k, v] : o.result.items()) j[k] = v;
    res.out = j.dump(2) + "\n";
  } else {
    res.out = o.text.str();
  }
  return res;
}

}  // namespace germforge
