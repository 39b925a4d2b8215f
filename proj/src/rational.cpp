#include "germforge/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace germforge {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') i = 1;
  bool seen_slash = false;
  bool digit_before = false, digit_after = false;
  for (std::size_t j = i; j < text.size(); ++j) {
    char c = text[j];
    if (c == '/') {
      if (seen_slash) throw std::invalid_argument("bad rational literal: " + text);
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw std::invalid_argument("bad rational literal: " + text);
    }
  }
  if (!digit_before || (seen_slash && !digit_after))
    throw std::invalid_argument("bad rational literal: " + text);
  std::string body = text[0] == '+' ? text.substr(1) : text;
  Rational q;
  if (q.set_str(body, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

double to_double(const Rational& q) { return q.get_d(); }

Rational from_double(double v) {
  if (!std::isfinite(v)) throw std::invalid_argument("non-finite value");
  Rational q(v);
  q.canonicalize();
  return q;
}

bool rational_root(const Rational& q, unsigned k, Rational& out) {
  if (k == 0) return false;
  if (k == 1) {
    out = q;
    return true;
  }
  if (sgn(q) < 0 && k % 2 == 0) return false;
  Integer num = abs(q.get_num());
  Integer den = q.get_den();
  Integer rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k)) return false;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k)) return false;
  out = Rational(rn, rd);
  if (sgn(q) < 0) out = -out;
  out.canonicalize();
  return true;
}

}  // namespace germforge
