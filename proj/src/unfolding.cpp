#include "germforge/unfolding.hpp"

#include <algorithm>
#include <stdexcept>

#include "germforge/germ_expr.hpp"

namespace germforge {

std::vector<std::string> default_parameter_names(std::size_t k) {
  std::vector<std::string> v;
  for (std::size_t i = 1; i <= k; ++i) v.push_back("alpha" + std::to_string(i));
  return v;
}

VarNames Unfolding::names() const {
  VarNames n = germ_vars();
  n.insert(n.end(), parameters.begin(), parameters.end());
  return n;
}

Unfolding Unfolding::make(SingularGerm base, std::vector<Polynomial> directions) {
  if (directions.size() + 2 > kMaxVars) throw std::invalid_argument("too many unfolding parameters");
  Unfolding u{std::move(base), std::move(directions), {}, {}};
  u.parameters = default_parameter_names(u.directions.size());
  u.poly = u.base.poly();
  for (std::size_t i = 0; i < u.directions.size(); ++i) u.poly += u.directions[i] * Polynomial::var(2 + i);
  return u;
}

Unfolding Unfolding::parse(const std::string& text, const std::vector<std::string>& params) {
  if (params.size() + 2 > kMaxVars) throw std::invalid_argument("too many unfolding parameters");
  VarNames names = germ_vars();
  names.insert(names.end(), params.begin(), params.end());
  Polynomial G = parse_polynomial(text, names);
  std::vector<std::pair<std::size_t, Polynomial>> zero;
  for (std::size_t i = 0; i < params.size(); ++i) zero.emplace_back(2 + i, Polynomial());
  std::vector<Polynomial> dirs;
  for (std::size_t i = 0; i < params.size(); ++i) dirs.push_back(G.derivative(2 + i).substitute(zero));
  Unfolding u{SingularGerm::from_polynomial(G.substitute(zero)), std::move(dirs), params, G};
  return u;
}

std::size_t codimension(const SingularGerm& g) { return tangent_space(g).codimension(); }

Unfolding universal_unfolding(const SingularGerm& g) {
  NormalForm nf = normal_form(g, {true});
  SingularGerm base = SingularGerm::from_polynomial(nf.poly);
  TangentSpace T = tangent_space(base);
  std::vector<Polynomial> dirs;
  for (const auto& m : T.et_basis) dirs.push_back(Polynomial::monomial(m));
  return Unfolding::make(std::move(base), std::move(dirs));
}

UniversalityCheck is_universal_unfolding(const Unfolding& G) {
  TangentSpace T = tangent_space(G.base);
  std::vector<Polynomial> vecs = T.span;
  for (const auto& d : G.directions) vecs.push_back(d);
  auto red = reduce_span(vecs, T.itr);
  std::vector<Monomial> pivots;
  for (const auto& r : red) pivots.push_back(span_pivot(r));
  UniversalityCheck c;
  // reduce_span is echelon in the pivot order, so a complement monomial is
  // reached exactly when it is a pivot
  for (const auto& m : T.itr.complement())
    if (std::find(pivots.begin(), pivots.end(), m) == pivots.end()) c.missing.push_back(m);
  c.universal = c.missing.empty();
  return c;
}

}  // namespace germforge
