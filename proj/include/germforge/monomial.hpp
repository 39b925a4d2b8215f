#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace germforge {

inline constexpr std::size_t kMaxVars = 16;

// Exponent vector over at most kMaxVars variables. Index 0 is x, index 1 is
// lambda in every germ context; further indices are parameters or auxiliary
// variables chosen by the caller.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<unsigned> exps);
  explicit Monomial(const std::vector<unsigned>& exps);

  static Monomial var(std::size_t i, unsigned e = 1);
  static Monomial xl(unsigned a, unsigned b) { return Monomial{a, b}; }

  unsigned operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, unsigned e);
  unsigned degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  // Number of leading slots that can be nonzero (1 + highest index used).
  std::size_t span() const;

  bool divides(const Monomial& o) const;
  Monomial operator*(const Monomial& o) const;
  // Requires divides(o, *this).
  Monomial operator/(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  // True when a and b share no variable.
  static bool coprime(const Monomial& a, const Monomial& b);

  std::vector<unsigned> exponents(std::size_t nvars) const;

  bool operator==(const Monomial& o) const { return deg_ == o.deg_ && e_ == o.e_; }

  std::size_t hash() const;

  const std::array<std::uint16_t, kMaxVars>& raw() const { return e_; }

 private:
  std::array<std::uint16_t, kMaxVars> e_{};
  unsigned deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Variable names used for printing and parsing; index i names variable i.
using VarNames = std::vector<std::string>;

VarNames germ_vars();  // {"x", "lambda"}

std::string to_string(const Monomial& m, const VarNames& names);

}  // namespace germforge
