#pragma once

// JSON encoding, schema 1. Rationals are [num, den]; polynomials are lists of
// [num, den, exponents]; staircases are lists of [m, n]. Integers that do not
// fit in 64 bits are written as decimal strings.

#include "json.hpp"

#include "germforge/intrinsic.hpp"
#include "germforge/transition.hpp"

namespace germforge::json_io {

using json = nlohmann::ordered_json;

inline constexpr int kSchema = 1;

json to_json(const Rational& q);
Rational rational_from_json(const json& j);

json to_json(const Monomial& m, std::size_t nvars);
Monomial monomial_from_json(const json& j);
json to_json(const std::vector<Monomial>& ms, std::size_t nvars);
std::vector<Monomial> monomials_from_json(const json& j);

json to_json(const Polynomial& p, std::size_t nvars);
Polynomial polynomial_from_json(const json& j);
json to_json(const std::vector<Polynomial>& ps, std::size_t nvars);
std::vector<Polynomial> polynomials_from_json(const json& j);

json to_json(const IntrinsicIdeal& I);
IntrinsicIdeal intrinsic_from_json(const json& j);

json to_json(const SideCondition& s);
SideCondition side_condition_from_json(const json& j);

// name, gens, empty, full and side conditions; the witness system is not stored
json to_json(const TransitionComponent& c, std::size_t nparams);
TransitionComponent component_from_json(const json& j);

json to_json(const ParameterRegion& r);
ParameterRegion region_from_json(const json& j);

json to_json(const BifurcationDiagram& d);
BifurcationDiagram diagram_from_json(const json& j);

}  // namespace germforge::json_io
