#pragma once

#include <string>
#include <vector>

#include "germforge/singularity.hpp"

namespace germforge {

// G(x, lambda, alpha) = g(x, lambda) + sum alpha_i p_i(x, lambda), with alpha_i
// stored as variable 2 + i.
struct Unfolding {
  SingularGerm base;
  std::vector<Polynomial> directions;
  std::vector<std::string> parameters;  // alpha1, alpha2, ...
  Polynomial poly;

  std::size_t size() const { return directions.size(); }
  VarNames names() const;  // x, lambda, parameters...
  static Unfolding make(SingularGerm base, std::vector<Polynomial> directions);
  // Parses a polynomial in x, lambda and the given parameter names; the base
  // germ is G at alpha = 0, the directions are dG/dalpha_i at alpha = 0.
  static Unfolding parse(const std::string& text, const std::vector<std::string>& params);
};

std::vector<std::string> default_parameter_names(std::size_t k);

Unfolding universal_unfolding(const SingularGerm& g);
std::size_t codimension(const SingularGerm& g);

struct UniversalityCheck {
  bool universal = false;
  std::vector<Monomial> missing;  // E/T directions not reached by the unfolding
};

UniversalityCheck is_universal_unfolding(const Unfolding& G);

}  // namespace germforge
