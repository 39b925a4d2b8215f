#pragma once

#include <string>
#include <vector>

#include "germforge/germ_expr.hpp"
#include "germforge/ideal_analysis.hpp"
#include "germforge/intrinsic.hpp"

namespace germforge {

// Raised when the input is not singular at the origin (g(0,0) or g_x(0,0) nonzero).
class NotSingularError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A singular germ g(x, lambda) together with a truncation degree that certifies
// both <x g, lambda g, x^2 g_x, lambda g_x> and <g, x g_x, lambda g_x>.
struct SingularGerm {
  GermExpression expr;
  unsigned N = 0;
  Jet jet;
  TruncationCertificate p_cert;
  TruncationCertificate rt_cert;

  static SingularGerm from_expression(const GermExpression& e, unsigned N0 = 1, unsigned cap = 24);
  static SingularGerm from_polynomial(const Polynomial& p, unsigned N0 = 1, unsigned cap = 24);
  static SingularGerm parse(const std::string& text, unsigned N0 = 1, unsigned cap = 24);

  const Polynomial& poly() const { return jet.poly; }
  bool finitely_determined() const { return p_cert.status == CodimStatus::Finite; }
  // Jets at degree N of the four high order generators and of the three
  // restricted tangent generators.
  std::vector<Polynomial> p_generators() const;
  std::vector<Polynomial> rt_generators() const;
};

IntrinsicIdeal high_order_ideal(const SingularGerm& g);

struct DerivativeStairs {
  IntrinsicIdeal S;
  std::vector<Monomial> S_perp;   // empty when S has infinite codimension
  std::vector<Monomial> corners;  // intrinsic generators x^m lambda^n
};

DerivativeStairs derivative_stairs(const Polynomial& jet);

// Monomials of P(g)^perp outside S^perp and the corners of S.
std::vector<Monomial> intermediate_terms(const SingularGerm& g);

struct NormalFormOptions {
  bool normalize = false;  // scale stair-corner coefficients to +-1
};

struct NormalForm {
  Polynomial poly;
  Rational shift = 0;  // x -> x + shift * lambda was applied
  bool normalized = false;
  std::vector<Monomial> unremoved;  // intermediate terms still present
  std::string note;
};

NormalForm normal_form(const SingularGerm& g, const NormalFormOptions& opt = {});

struct RestrictedTangent {
  bool finite = false;
  IntrinsicIdeal itr;
  std::vector<Polynomial> complement;
  TruncationCertificate cert;
};

RestrictedTangent restricted_tangent(const SingularGerm& g);

struct TangentSpace {
  IntrinsicIdeal itr;
  std::vector<Polynomial> span;     // reduced modulo itr, pivots monic
  unsigned ell = 0;                 // lambda^l g_lambda lies in RT for l > ell
  std::vector<Monomial> et_basis;   // monomial basis of E/T
  std::size_t codimension() const { return et_basis.size(); }
};

TangentSpace tangent_space(const SingularGerm& g);

struct RecognitionCondition {
  Monomial mono;
  bool must_vanish = true;  // false: must be nonzero
  Rational value;           // the derivative at the origin
  bool holds = false;
};

std::vector<RecognitionCondition> recognition_conditions(const Polynomial& nf);
// The conditions of nf evaluated on the jet of another germ g.
std::vector<RecognitionCondition> recognition_conditions(const Polynomial& nf, const Polynomial& g);

struct AlgebraicObjects {
  IntrinsicIdeal P;
  RestrictedTangent RT;
  TangentSpace T;
  DerivativeStairs S;
};

AlgebraicObjects alg_objects(const SingularGerm& g);

struct ContactTransformation {
  Polynomial X;
  Polynomial S;
  unsigned degree = 0;
};

// Jets X, S with J^k(f - S * g(X, lambda)) = 0 and X(0,0) = 0, X_x(0,0) > 0, S(0,0) > 0.
// Throws std::domain_error when the degree-by-degree system is inconsistent.
ContactTransformation transformation_solve(const Polynomial& g, const Polynomial& f, unsigned k);
ContactTransformation transformation_solve(const SingularGerm& g, const Polynomial& f, unsigned k);
Polynomial transformation_residual(const Polynomial& g, const Polynomial& f, const ContactTransformation& t);

}  // namespace germforge
