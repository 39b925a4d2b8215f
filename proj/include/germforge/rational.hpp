#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace germforge {

using Rational = mpq_class;
using Integer = mpz_class;

// "7/12", "-3"
std::string to_string(const Rational& q);

// Accepts "a" or "a/b" with an optional leading sign. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

double to_double(const Rational& q);

// Exact conversion of a finite double.
Rational from_double(double v);

// Rational r with r^k == q, if one exists.
bool rational_root(const Rational& q, unsigned k, Rational& out);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace germforge
