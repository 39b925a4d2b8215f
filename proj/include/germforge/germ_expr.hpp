#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "germforge/polynomial.hpp"

namespace germforge {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Raised when a transcendental function is applied to an argument whose jet
// has a nonzero constant term.
class CompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ExprKind { Var, Const, Neg, Sum, Product, Power, Exp, Sin, Cos, Ln1p };

struct ExprNode {
  ExprKind kind;
  std::size_t var = 0;        // Var
  Rational value;             // Const
  unsigned exponent = 0;      // Power
  std::vector<std::shared_ptr<const ExprNode>> kids;
  std::size_t pos = 0;        // source offset, for diagnostics
};

using ExprPtr = std::shared_ptr<const ExprNode>;

class GermExpression {
 public:
  GermExpression() = default;
  GermExpression(ExprPtr root, VarNames names) : root_(std::move(root)), names_(std::move(names)) {}
  static GermExpression from_polynomial(const Polynomial& p, VarNames names = germ_vars());

  const ExprPtr& root() const { return root_; }
  const VarNames& names() const { return names_; }

  bool is_polynomial() const;
  // Throws if the expression contains a transcendental node.
  Polynomial to_polynomial() const;
  std::string to_string() const;

 private:
  ExprPtr root_;
  VarNames names_;
};

// Germ grammar over x and lambda ("λ" is accepted as an alias).
GermExpression parse_germ(const std::string& text);
// Same grammar over an arbitrary variable list.
GermExpression parse_expression(const std::string& text, const VarNames& names);
// Parses and converts; rejects transcendental functions.
Polynomial parse_polynomial(const std::string& text, const VarNames& names = germ_vars());

// Monomial cone: every tail term is divisible by some element; or unknown.
struct TailSupport {
  bool unknown = false;
  std::vector<Monomial> cone;  // pairwise non-divisible, sorted canonically

  bool empty() const { return !unknown && cone.empty(); }
  bool covers(const Monomial& m) const;
  bool operator==(const TailSupport& o) const { return unknown == o.unknown && cone == o.cone; }
};

// Removes elements divisible by other elements and sorts canonically.
std::vector<Monomial> minimize_cone(std::vector<Monomial> gens);

struct Jet {
  Polynomial poly;
  unsigned degree = 0;
  TailSupport tail;

  bool exact() const { return tail.empty(); }
};

Jet jet_of_polynomial(const Polynomial& p, unsigned N);
Jet jet_add(const Jet& a, const Jet& b);
Jet jet_mul(const Jet& a, const Jet& b);
Jet jet_scale(const Jet& a, const Rational& c);
// Derivative in variable var; the result has degree N-1 (N must be >= 1).
Jet jet_derivative(const Jet& a, std::size_t var);
// Restriction to a lower truncation degree.
Jet jet_restrict(const Jet& a, unsigned N);

Jet taylor_jet(const GermExpression& e, unsigned N);
TailSupport tail_support(const GermExpression& e, unsigned N);

}  // namespace germforge
