#pragma once

// Independent linear-algebra oracle for ideals in the jet ring K[x,l]/M^{N+1}:
// the ideal is the span of all monomial multiples of its generators.

#include <map>
#include <vector>

#include "germforge/polynomial.hpp"

namespace oracle {

using germforge::Monomial;
using germforge::Polynomial;
using germforge::Rational;

class JetSpan {
 public:
  JetSpan(const std::vector<Polynomial>& gens, unsigned N) : N_(N) {
    for (unsigned d = 0; d <= N; ++d)
      for (unsigned b = 0; b <= d; ++b) col_[key(Monomial{d - b, b})] = ncols_++;
    for (const auto& g : gens)
      for (unsigned d = 0; d <= N; ++d)
        for (unsigned b = 0; b <= d; ++b) insert(g.times(Monomial{d - b, b}).truncated(N));
  }

  bool contains(const Polynomial& f) const {
    auto v = vec(f.truncated(N_));
    reduce(v);
    for (const auto& x : v)
      if (sgn(x) != 0) return false;
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t codim() const { return ncols_ - rows_.size(); }

  void insert(const Polynomial& f) {
    auto v = vec(f);
    reduce(v);
    std::size_t p = 0;
    while (p < v.size() && sgn(v[p]) == 0) ++p;
    if (p == v.size()) return;
    Rational c = v[p];
    for (auto& x : v) x /= c;
    rows_[p] = v;
  }

 private:
  static std::pair<unsigned, unsigned> key(const Monomial& m) { return {m[0], m[1]}; }
  std::vector<Rational> vec(const Polynomial& f) const {
    std::vector<Rational> v(ncols_, 0);
    for (const auto& t : f.terms()) v[col_.at(key(t.mono))] = t.coeff;
    return v;
  }
  void reduce(std::vector<Rational>& v) const {
    for (const auto& [p, row] : rows_) {
      if (sgn(v[p]) == 0) continue;
      Rational c = v[p];
      for (std::size_t j = p; j < v.size(); ++j)
        if (sgn(row[j]) != 0) v[j] -= c * row[j];
    }
  }

  unsigned N_;
  std::size_t ncols_ = 0;
  std::map<std::pair<unsigned, unsigned>, std::size_t> col_;
  std::map<std::size_t, std::vector<Rational>> rows_;
};

// M^m <l^n> inside the span, tested on every generator monomial.
inline bool stair_inside(const JetSpan& s, unsigned m, unsigned n) {
  for (unsigned k = 0; k <= m; ++k)
    if (!s.contains(Polynomial::monomial(Monomial{m - k, n + k}))) return false;
  return true;
}

}  // namespace oracle
