#pragma once

#include <vector>

#include "germforge/polynomial.hpp"

namespace germforge {

// Dense univariate polynomial, coefficient i belongs to t^i.
using UniPoly = std::vector<Rational>;

// Coefficients of p in variable var; p must not involve other variables.
UniPoly to_unipoly(const Polynomial& p, std::size_t var);
int degree(const UniPoly& p);
Rational eval(const UniPoly& p, const Rational& t);
double eval(const UniPoly& p, double t);
UniPoly derivative(const UniPoly& p);
UniPoly squarefree_part(const UniPoly& p);

struct RealRoot {
  Rational lo, hi;  // isolating interval, lo < root < hi unless lo == hi
  double value = 0;
};

// Sturm sequence of the square-free part.
class SturmSequence {
 public:
  explicit SturmSequence(const UniPoly& p);
  // Distinct real roots in (a, b].
  std::size_t count(const Rational& a, const Rational& b) const;
  std::size_t count() const;  // all distinct real roots
  const UniPoly& squarefree() const { return seq_.front(); }
  Rational bound() const { return bound_; }

 private:
  int variations(const Rational& t) const;
  int variations_at_infinity(int sign) const;
  std::vector<UniPoly> seq_;
  Rational bound_;
};

// Distinct real roots, increasing. Intervals are isolated with exact Sturm
// counts, refined exactly to about 2^-52 relative width, then by bisection in
// doubles.
std::vector<RealRoot> real_roots(const UniPoly& p);
std::size_t count_real_roots(const UniPoly& p);

}  // namespace germforge
