#include "germforge/germ_expr.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace germforge {

namespace {

ExprPtr make(ExprKind k, std::size_t pos, std::vector<ExprPtr> kids = {}) {
  auto n = std::make_shared<ExprNode>();
  n->kind = k;
  n->pos = pos;
  n->kids = std::move(kids);
  return n;
}

ExprPtr make_const(const Rational& v, std::size_t pos) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprKind::Const;
  n->value = v;
  n->pos = pos;
  return n;
}

class Parser {
 public:
  Parser(const std::string& text, const VarNames& names) : s_(text), names_(names) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip();
    if (p_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[p_]) + "'", p_);
    return e;
  }

 private:
  void skip() {
    while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
  }
  bool eat(char c) {
    skip();
    if (p_ < s_.size() && s_[p_] == c) {
      ++p_;
      return true;
    }
    return false;
  }

  ExprPtr expr() {
    skip();
    std::size_t start = p_;
    std::vector<ExprPtr> parts{term()};
    for (;;) {
      skip();
      if (eat('+')) {
        parts.push_back(term());
      } else if (p_ < s_.size() && s_[p_] == '-') {
        std::size_t at = p_++;
        parts.push_back(make(ExprKind::Neg, at, {term()}));
      } else {
        break;
      }
    }
    if (parts.size() == 1) return parts[0];
    return make(ExprKind::Sum, start, std::move(parts));
  }

  ExprPtr term() {
    skip();
    std::size_t start = p_;
    std::vector<ExprPtr> parts{factor()};
    for (;;) {
      skip();
      if (eat('*')) {
        parts.push_back(factor());
      } else if (p_ < s_.size() && s_[p_] == '/') {
        std::size_t at = p_++;
        ExprPtr d = factor();
        if (d->kind != ExprKind::Const) throw ParseError("division by a non-constant", at);
        if (sgn(d->value) == 0) throw ParseError("division by zero", at);
        parts.push_back(make_const(1 / d->value, at));
      } else {
        break;
      }
    }
    if (parts.size() == 1) return parts[0];
    // fold a leading constant chain like 7/12 into one literal
    if (parts.size() == 2 && parts[0]->kind == ExprKind::Const && parts[1]->kind == ExprKind::Const)
      return make_const(parts[0]->value * parts[1]->value, start);
    return make(ExprKind::Product, start, std::move(parts));
  }

  ExprPtr factor() {
    skip();
    std::size_t start = p_;
    if (eat('-')) return make(ExprKind::Neg, start, {factor()});
    if (eat('+')) return factor();
    ExprPtr b = base();
    skip();
    if (eat('^')) {
      skip();
      std::size_t at = p_;
      if (p_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[p_])))
        throw ParseError("expected a nonnegative integer exponent", at);
      unsigned long e = 0;
      while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) {
        e = e * 10 + unsigned(s_[p_++] - '0');
        if (e > 100000) throw ParseError("exponent too large", at);
      }
      if (p_ < s_.size() && s_[p_] == '.') throw ParseError("non-integer exponent", at);
      auto n = std::make_shared<ExprNode>();
      n->kind = ExprKind::Power;
      n->pos = start;
      n->exponent = unsigned(e);
      n->kids = {b};
      return n;
    }
    return b;
  }

  ExprPtr base() {
    skip();
    std::size_t start = p_;
    if (p_ >= s_.size()) throw ParseError("unexpected end of input", p_);
    char c = s_[p_];
    if (c == '(') {
      ++p_;
      ExprPtr e = expr();
      if (!eat(')')) throw ParseError("expected ')'", p_);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) digits += s_[p_++];
      if (p_ < s_.size() && (s_[p_] == '.' || s_[p_] == 'e' || s_[p_] == 'E'))
        throw ParseError("non-rational literal", start);
      return make_const(Rational(Integer(digits)), start);
    }
    std::string id;
    if (s_.compare(p_, 2, "\xCE\xBB") == 0) {
      p_ += 2;
      id = "lambda";
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (p_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[p_])) || s_[p_] == '_')) id += s_[p_++];
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "'", p_);
    }
    skip();
    if (p_ < s_.size() && s_[p_] == '(') {
      ExprKind k;
      if (id == "exp") k = ExprKind::Exp;
      else if (id == "sin") k = ExprKind::Sin;
      else if (id == "cos") k = ExprKind::Cos;
      else if (id == "ln1p") k = ExprKind::Ln1p;
      else throw ParseError("unknown function '" + id + "'", start);
      ++p_;
      ExprPtr arg = expr();
      if (!eat(')')) throw ParseError("expected ')'", p_);
      return make(k, start, {arg});
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == id) {
        auto n = std::make_shared<ExprNode>();
        n->kind = ExprKind::Var;
        n->var = i;
        n->pos = start;
        return n;
      }
    }
    throw ParseError("unknown identifier '" + id + "'", start);
  }

  const std::string& s_;
  const VarNames& names_;
  std::size_t p_ = 0;
};

bool transcendental(ExprKind k) {
  return k == ExprKind::Exp || k == ExprKind::Sin || k == ExprKind::Cos || k == ExprKind::Ln1p;
}

bool node_is_poly(const ExprNode& n) {
  if (transcendental(n.kind)) return false;
  for (const auto& k : n.kids)
    if (!node_is_poly(*k)) return false;
  return true;
}

std::string node_str(const ExprNode& n, const VarNames& names) {
  auto kid = [&](std::size_t i) { return node_str(*n.kids[i], names); };
  switch (n.kind) {
    case ExprKind::Var: return n.var < names.size() ? names[n.var] : "v" + std::to_string(n.var);
    case ExprKind::Const: return sgn(n.value) < 0 || n.value.get_den() != 1 ? "(" + to_string(n.value) + ")" : to_string(n.value);
    case ExprKind::Neg: return "(-" + kid(0) + ")";
    case ExprKind::Sum: {
      std::string s = "(";
      for (std::size_t i = 0; i < n.kids.size(); ++i) s += (i ? " + " : "") + kid(i);
      return s + ")";
    }
    case ExprKind::Product: {
      std::string s;
      for (std::size_t i = 0; i < n.kids.size(); ++i) s += (i ? "*" : "") + kid(i);
      return s;
    }
    case ExprKind::Power: return "(" + kid(0) + ")^" + std::to_string(n.exponent);
    case ExprKind::Exp: return "exp(" + kid(0) + ")";
    case ExprKind::Sin: return "sin(" + kid(0) + ")";
    case ExprKind::Cos: return "cos(" + kid(0) + ")";
    case ExprKind::Ln1p: return "ln1p(" + kid(0) + ")";
  }
  return "?";
}

Polynomial node_poly(const ExprNode& n) {
  switch (n.kind) {
    case ExprKind::Var: return Polynomial::var(n.var);
    case ExprKind::Const: return Polynomial(n.value);
    case ExprKind::Neg: return -node_poly(*n.kids[0]);
    case ExprKind::Sum: {
      Polynomial s;
      for (const auto& k : n.kids) s += node_poly(*k);
      return s;
    }
    case ExprKind::Product: {
      Polynomial s(1);
      for (const auto& k : n.kids) s = s * node_poly(*k);
      return s;
    }
    case ExprKind::Power: return node_poly(*n.kids[0]).pow(n.exponent);
    default: throw std::invalid_argument("expression is not polynomial");
  }
}

std::vector<Monomial> monomials_of(const Polynomial& p) {
  std::vector<Monomial> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back(t.mono);
  return out;
}

std::vector<Monomial> cone_product(const std::vector<Monomial>& a, const std::vector<Monomial>& b) {
  std::vector<Monomial> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return minimize_cone(std::move(out));
}

std::vector<Monomial> support_of(const Jet& j) {
  auto s = monomials_of(j.poly);
  s.insert(s.end(), j.tail.cone.begin(), j.tail.cone.end());
  return minimize_cone(std::move(s));
}

// Coefficient of u^k in the series of the given function.
Rational series_coeff(ExprKind k, unsigned n) {
  Rational fact = 1;
  for (unsigned i = 2; i <= n; ++i) fact *= i;
  switch (k) {
    case ExprKind::Exp: return 1 / fact;
    case ExprKind::Sin:
      if (n % 2 == 0) return 0;
      return ((n / 2) % 2 ? -1 : 1) / fact;
    case ExprKind::Cos:
      if (n % 2 == 1) return 0;
      return ((n / 2) % 2 ? -1 : 1) / fact;
    case ExprKind::Ln1p:
      if (n == 0) return 0;
      return Rational(n % 2 ? 1 : -1, n);
    default: return 0;
  }
}

Jet jet_node(const ExprNode& n, unsigned N, const VarNames& names) {
  switch (n.kind) {
    case ExprKind::Var: return jet_of_polynomial(Polynomial::var(n.var), N);
    case ExprKind::Const: return jet_of_polynomial(Polynomial(n.value), N);
    case ExprKind::Neg: return jet_scale(jet_node(*n.kids[0], N, names), -1);
    case ExprKind::Sum: {
      Jet s = jet_of_polynomial({}, N);
      for (const auto& k : n.kids) s = jet_add(s, jet_node(*k, N, names));
      return s;
    }
    case ExprKind::Product: {
      Jet s = jet_of_polynomial(Polynomial(1), N);
      for (const auto& k : n.kids) s = jet_mul(s, jet_node(*k, N, names));
      return s;
    }
    case ExprKind::Power: {
      Jet base = jet_node(*n.kids[0], N, names);
      Jet r = jet_of_polynomial(Polynomial(1), N);
      unsigned e = n.exponent;
      while (e) {
        if (e & 1) r = jet_mul(r, base);
        e >>= 1;
        if (e) base = jet_mul(base, base);
      }
      return r;
    }
    default: break;
  }
  Jet u = jet_node(*n.kids[0], N, names);
  if (sgn(u.poly.coeff(Monomial())) != 0)
    throw CompositionError("argument of " + node_str(n, names) + " (position " + std::to_string(n.pos) +
                           ") has a nonzero constant term");
  std::vector<Monomial> supp = support_of(u);
  if (supp.empty()) return jet_of_polynomial(Polynomial(series_coeff(n.kind, 0)), N);
  unsigned d = supp.front().degree();
  for (const auto& m : supp) d = std::min(d, m.degree());
  // d >= 1: the jet carries the exact low-degree terms and the tail lies above N.
  unsigned kmin = 0;
  for (unsigned k = 0;; ++k) {
    if (sgn(series_coeff(n.kind, k)) != 0 && k * d > N) {
      kmin = k;
      break;
    }
  }
  Jet result = jet_of_polynomial({}, N);
  Jet power = jet_of_polynomial(Polynomial(1), N);
  for (unsigned k = 0; k < kmin; ++k) {
    if (k > 0) power = jet_mul(power, u);
    Rational c = series_coeff(n.kind, k);
    if (sgn(c) != 0) result = jet_add(result, jet_scale(power, c));
  }
  std::vector<Monomial> high = supp;
  for (unsigned k = 1; k < kmin; ++k) high = cone_product(high, supp);
  std::vector<Monomial> cone = result.tail.cone;
  cone.insert(cone.end(), high.begin(), high.end());
  result.tail.cone = minimize_cone(std::move(cone));
  result.tail.unknown = result.tail.unknown || u.tail.unknown;
  return result;
}

}  // namespace

GermExpression GermExpression::from_polynomial(const Polynomial& p, VarNames names) {
  std::vector<ExprPtr> parts;
  for (const auto& t : p.terms()) {
    std::vector<ExprPtr> f{make_const(t.coeff, 0)};
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (!t.mono[i]) continue;
      auto v = std::make_shared<ExprNode>();
      v->kind = ExprKind::Var;
      v->var = i;
      if (t.mono[i] == 1) {
        f.push_back(v);
      } else {
        auto pw = std::make_shared<ExprNode>();
        pw->kind = ExprKind::Power;
        pw->exponent = t.mono[i];
        pw->kids = {v};
        f.push_back(pw);
      }
    }
    parts.push_back(f.size() == 1 ? f[0] : make(ExprKind::Product, 0, f));
  }
  if (parts.empty()) return GermExpression(make_const(0, 0), std::move(names));
  if (parts.size() == 1) return GermExpression(parts[0], std::move(names));
  return GermExpression(make(ExprKind::Sum, 0, parts), std::move(names));
}

bool GermExpression::is_polynomial() const { return root_ && node_is_poly(*root_); }

Polynomial GermExpression::to_polynomial() const {
  if (!root_) return {};
  return node_poly(*root_);
}

std::string GermExpression::to_string() const { return root_ ? node_str(*root_, names_) : "0"; }

GermExpression parse_expression(const std::string& text, const VarNames& names) {
  Parser p(text, names);
  return GermExpression(p.parse(), names);
}

GermExpression parse_germ(const std::string& text) { return parse_expression(text, germ_vars()); }

Polynomial parse_polynomial(const std::string& text, const VarNames& names) {
  GermExpression e = parse_expression(text, names);
  if (!e.is_polynomial()) throw ParseError("transcendental function in polynomial input", 0);
  return e.to_polynomial();
}

bool TailSupport::covers(const Monomial& m) const {
  if (unknown) return false;
  for (const auto& c : cone)
    if (c.divides(m)) return true;
  return false;
}

std::vector<Monomial> minimize_cone(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return canonical_cmp(a, b) > 0;
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return canonical_cmp(a, b) > 0; });
  return out;
}

Jet jet_of_polynomial(const Polynomial& p, unsigned N) {
  Jet j;
  j.degree = N;
  j.poly = p.truncated(N);
  j.tail.cone = minimize_cone(monomials_of(p.above(N)));
  return j;
}

Jet jet_restrict(const Jet& a, unsigned N) {
  if (N >= a.degree) return a;
  Jet j;
  j.degree = N;
  j.poly = a.poly.truncated(N);
  auto cone = monomials_of(a.poly.above(N));
  cone.insert(cone.end(), a.tail.cone.begin(), a.tail.cone.end());
  j.tail.cone = minimize_cone(std::move(cone));
  j.tail.unknown = a.tail.unknown;
  return j;
}

Jet jet_add(const Jet& a0, const Jet& b0) {
  unsigned N = std::min(a0.degree, b0.degree);
  Jet a = jet_restrict(a0, N), b = jet_restrict(b0, N);
  Jet j;
  j.degree = N;
  j.poly = a.poly + b.poly;
  auto cone = a.tail.cone;
  cone.insert(cone.end(), b.tail.cone.begin(), b.tail.cone.end());
  j.tail.cone = minimize_cone(std::move(cone));
  j.tail.unknown = a.tail.unknown || b.tail.unknown;
  return j;
}

Jet jet_scale(const Jet& a, const Rational& c) {
  Jet j = a;
  j.poly = a.poly.scaled(c);
  if (sgn(c) == 0) j.tail = {};
  return j;
}

Jet jet_mul(const Jet& a0, const Jet& b0) {
  unsigned N = std::min(a0.degree, b0.degree);
  Jet a = jet_restrict(a0, N), b = jet_restrict(b0, N);
  Jet j;
  j.degree = N;
  Polynomial full = a.poly * b.poly;
  j.poly = full.truncated(N);
  auto cone = monomials_of(full.above(N));
  if (!b.tail.cone.empty()) {
    auto t = cone_product(support_of(a), b.tail.cone);
    cone.insert(cone.end(), t.begin(), t.end());
  }
  if (!a.tail.cone.empty()) {
    auto t = cone_product(a.tail.cone, support_of(b));
    cone.insert(cone.end(), t.begin(), t.end());
  }
  j.tail.cone = minimize_cone(std::move(cone));
  j.tail.unknown = a.tail.unknown || b.tail.unknown;
  return j;
}

Jet jet_derivative(const Jet& a, std::size_t var) {
  if (a.degree == 0) throw std::invalid_argument("cannot differentiate a degree-0 jet");
  Jet j;
  j.degree = a.degree - 1;
  j.poly = a.poly.derivative(var);
  std::vector<Monomial> cone;
  for (Monomial m : a.tail.cone) {
    if (m[var]) m.set(var, m[var] - 1);
    cone.push_back(m);
  }
  j.tail.cone = minimize_cone(std::move(cone));
  j.tail.unknown = a.tail.unknown;
  return j;
}

Jet taylor_jet(const GermExpression& e, unsigned N) {
  if (!e.root()) return jet_of_polynomial({}, N);
  return jet_node(*e.root(), N, e.names());
}

TailSupport tail_support(const GermExpression& e, unsigned N) { return taylor_jet(e, N).tail; }

}  // namespace germforge
