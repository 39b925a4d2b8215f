#pragma once

#include <optional>
#include <string>
#include <vector>

#include "germforge/monomial.hpp"
#include "germforge/order.hpp"
#include "germforge/rational.hpp"

namespace germforge {

struct Term {
  Rational coeff;
  Monomial mono;
  bool operator==(const Term& o) const { return mono == o.mono && coeff == o.coeff; }
};

// Sparse polynomial with exact rational coefficients. Terms are kept in a
// canonical order (higher total degree first, then lex with index 0 most
// significant), so equal polynomials have equal term vectors.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(implicit constant)
  Polynomial(long c) : Polynomial(Rational(c)) {}
  Polynomial(int c) : Polynomial(Rational(c)) {}

  static Polynomial monomial(const Monomial& m, const Rational& c = 1);
  static Polynomial var(std::size_t i);
  // Merges duplicates and drops zero coefficients.
  static Polynomial from_terms(std::vector<Term> terms);
  // Terms must already be canonical: sorted, distinct, nonzero.
  static Polynomial from_sorted(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() == 1; }

  Rational coeff(const Monomial& m) const;
  int degree() const;  // -1 for zero
  int order() const;   // lowest total degree, -1 for zero
  std::size_t span() const;
  bool uses_var(std::size_t i) const;

  Polynomial truncated(unsigned N) const;
  Polynomial homogeneous_part(unsigned d) const;
  Polynomial above(unsigned N) const;  // terms of degree > N

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  Polynomial scaled(const Rational& c) const;
  Polynomial times(const Monomial& m, const Rational& c = 1) const;
  // Exact division of every term by m. Throws if some term is not divisible.
  Polynomial divided_by(const Monomial& m) const;

  // Product truncated to total degree <= N.
  static Polynomial mul_trunc(const Polynomial& a, const Polynomial& b, int N);
  Polynomial pow(unsigned k, int N = -1) const;

  Polynomial derivative(std::size_t var) const;
  // Replaces variable var by p; if N >= 0 the result is truncated to degree N.
  Polynomial substitute(std::size_t var, const Polynomial& p, int N = -1) const;
  // Simultaneous substitution of several variables.
  Polynomial substitute(const std::vector<std::pair<std::size_t, Polynomial>>& subs, int N = -1) const;

  Rational eval(const std::vector<Rational>& point) const;
  double eval(const std::vector<double>& point) const;

  Polynomial monic_lex() const;  // divided by the coefficient of its first canonical term

 private:
  std::vector<Term> terms_;
};

// Canonical comparison used for storage: >0 if a comes first.
int canonical_cmp(const Monomial& a, const Monomial& b);

struct LeadingData {
  bool zero = true;
  Term lt;
  const Monomial& lm() const { return lt.mono; }
  const Rational& lc() const { return lt.coeff; }
};

LeadingData leading_data(const MonomialOrder& o, const Polynomial& f);

Polynomial s_germ(const MonomialOrder& o, const Polynomial& f, const Polynomial& g);

std::string to_string(const Polynomial& f, const VarNames& names = germ_vars());

// Polynomial scaled so that its leading coefficient under o is 1.
Polynomial make_monic(const MonomialOrder& o, const Polynomial& f);

// True when a == c*b for a nonzero rational c.
bool equal_up_to_unit(const Polynomial& a, const Polynomial& b);

}  // namespace germforge
