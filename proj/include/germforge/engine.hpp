#pragma once

// Internal term-vector kernels shared by the division and ideal modules.

#include <cstdint>
#include <vector>

#include "germforge/order.hpp"
#include "germforge/polynomial.hpp"

namespace germforge::engine {

// Terms sorted in decreasing order under some MonomialOrder; [0] leads.
using Terms = std::vector<Term>;

Terms ordered(const Polynomial& p, const MonomialOrder& o, int N = -1);
Polynomial to_poly(Terms t);

// Divisibility filter: a | b implies (sev(a) & ~sev(b)) == 0.
std::uint64_t sev(const Monomial& m);

struct Divisor {
  Terms t;
  std::uint64_t mask = 0;
  Monomial lm() const { return t.front().mono; }
};

Divisor make_divisor(Terms t);

// p[start..] - c*m*g, truncated to degree N when N >= 0.
Terms sub_mul(const Terms& p, std::size_t start, const Rational& c, const Monomial& m, const Terms& g,
              const MonomialOrder& o, int N, bool& truncated);

// Full reduction of f by the divisors. Quotient terms are appended to
// quotients[i] when quotients is non-null.
Terms reduce(Terms f, const std::vector<const Divisor*>& divs, const MonomialOrder& o, int N, bool& truncated,
             std::vector<std::vector<Term>>* quotients = nullptr);

// Buchberger with Gebauer-Moeller pair pruning. Returns the input generators
// (truncated, nonzero, in order) followed by the added elements.
std::vector<Terms> buchberger(const std::vector<Terms>& input, const MonomialOrder& o, int N, bool monic_new);

// Minimal, fully reduced, monic basis from a standard/Groebner basis.
std::vector<Terms> interreduce(std::vector<Terms> basis, const MonomialOrder& o, int N);

}  // namespace germforge::engine
