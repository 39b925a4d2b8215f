#include "germforge/intrinsic.hpp"

#include <algorithm>
#include <climits>

#include "germforge/errors.hpp"
#include "germforge/ideal_analysis.hpp"

namespace germforge {

bool display_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = kMaxVars; i-- > 0;)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

bool IntrinsicIdeal::contains(const Monomial& m) const {
  for (auto [mi, ni] : stairs)
    if (m[1] >= ni && m.degree() >= mi + ni) return true;
  return false;
}

bool IntrinsicIdeal::contains(const Polynomial& f) const {
  for (const auto& t : f.terms())
    if (!contains(t.mono)) return false;
  return true;
}

std::vector<Monomial> IntrinsicIdeal::generators() const {
  std::vector<Monomial> g;
  for (auto [m, n] : stairs)
    for (unsigned s = 0; s <= m; ++s) g.push_back(Monomial{m - s, n + s});
  g = minimize_cone(g);
  std::sort(g.begin(), g.end(), display_less);
  return g;
}

bool IntrinsicIdeal::finite_codimension() const {
  for (auto [m, n] : stairs)
    if (n == 0) return true;
  return false;
}

std::vector<Monomial> IntrinsicIdeal::complement() const {
  if (!finite_codimension()) throw InfiniteCodimensionError("complement of " + to_string() + " is infinite");
  unsigned top = 0;
  for (auto [m, n] : stairs)
    if (n == 0) top = m;
  std::vector<Monomial> out;
  for (unsigned d = 0; d < top; ++d)
    for (const auto& mono : monomials_of_degree(d))
      if (!contains(mono)) out.push_back(mono);
  std::sort(out.begin(), out.end(), display_less);
  return out;
}

bool IntrinsicIdeal::well_formed() const {
  for (std::size_t i = 1; i < stairs.size(); ++i) {
    if (stairs[i].second <= stairs[i - 1].second) return false;
    if (stairs[i].first + stairs[i].second >= stairs[i - 1].first + stairs[i - 1].second) return false;
  }
  return true;
}

IntrinsicIdeal IntrinsicIdeal::from_pairs(std::vector<std::pair<unsigned, unsigned>> pairs) {
  std::sort(pairs.begin(), pairs.end(), [](auto a, auto b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
  IntrinsicIdeal r;
  unsigned best = UINT_MAX;
  for (auto [m, n] : pairs) {
    if (m + n < best) {
      // an earlier stair with the same n is dominated by this one
      if (!r.stairs.empty() && r.stairs.back().second == n) r.stairs.pop_back();
      r.stairs.emplace_back(m, n);
      best = m + n;
    }
  }
  return r;
}

std::string IntrinsicIdeal::to_string() const {
  if (stairs.empty()) return "0";
  std::string s;
  for (auto [m, n] : stairs) {
    if (!s.empty()) s += " + ";
    std::string part;
    if (m == 1) part = "M";
    if (m > 1) part = "M^" + std::to_string(m);
    if (n > 0) part += "<lambda" + (n > 1 ? "^" + std::to_string(n) : std::string()) + ">";
    if (part.empty()) part = "<1>";
    s += part;
  }
  return s;
}

IntrinsicIdeal intrinsic_part(const IdealBasis& B) {
  if (!B.is_jet()) throw std::invalid_argument("intrinsic_part works in the jet ring");
  auto k = max_power_in_ideal(B);
  if (!k) throw InfiniteCodimensionError("intrinsic part needs a finite codimension ideal");
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned n = 0; n <= *k; ++n) {
    IdealBasis C = colon_ideal(B, Monomial{0, n});
    auto m = max_power_in_ideal(C);
    if (!m) throw InfiniteCodimensionError("colon ideal lost finite codimension");
    pairs.emplace_back(*m, n);
    if (*m == 0) break;
  }
  IntrinsicIdeal r = IntrinsicIdeal::from_pairs(pairs);
  return r;
}

bool intrinsic_membership(const IntrinsicIdeal& itr, const Polynomial& f) { return itr.contains(f); }

namespace {
// x-exponent first, then lambda; >0 when a is further left in the reduction order.
int lex_cmp(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

Polynomial strip(const Polynomial& f, const IntrinsicIdeal& itr) {
  std::vector<Term> t;
  for (const auto& term : f.terms())
    if (!itr.contains(term.mono)) t.push_back(term);
  return Polynomial::from_terms(t);
}

}  // namespace

Monomial span_pivot(const Polynomial& f) {
  Monomial best = f.terms().front().mono;
  for (const auto& t : f.terms())
    if (lex_cmp(t.mono, best) > 0) best = t.mono;
  return best;
}

std::vector<Polynomial> reduce_span(const std::vector<Polynomial>& vectors, const IntrinsicIdeal& itr) {
  std::vector<Polynomial> rows;
  for (const auto& v : vectors) {
    Polynomial r = strip(v, itr);
    // eliminate existing pivots
    for (const auto& row : rows) {
      Monomial p = span_pivot(row);
      Rational c = r.coeff(p);
      if (sgn(c) != 0) r -= row.scaled(c);
    }
    if (r.is_zero()) continue;
    Monomial p = span_pivot(r);
    r = r.scaled(1 / r.coeff(p));
    for (auto& row : rows) {
      Rational c = row.coeff(p);
      if (sgn(c) != 0) row -= r.scaled(c);
    }
    rows.push_back(r);
  }
  std::sort(rows.begin(), rows.end(),
            [](const Polynomial& a, const Polynomial& b) { return display_less(span_pivot(a), span_pivot(b)); });
  return rows;
}

IntrinsicDecomposition intrinsic_decomposition(const IdealBasis& B) {
  IntrinsicDecomposition d;
  d.itr = intrinsic_part(B);
  IdealBasis S = reduce_basis(B);
  std::vector<Polynomial> vecs;
  for (const auto& g : S.gens()) {
    for (unsigned deg = 0; deg <= B.degree(); ++deg)
      for (const auto& w : monomials_of_degree(deg)) {
        if (int(deg) + g.order() > int(B.degree())) continue;
        vecs.push_back(g.times(w).truncated(B.degree()));
      }
  }
  d.complement_part = reduce_span(vecs, d.itr);
  return d;
}

}  // namespace germforge
