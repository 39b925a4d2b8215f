#pragma once

#include <string>
#include <utility>
#include <vector>

#include "germforge/ideal.hpp"

namespace germforge {

// Sum of M^{m_i}<lambda^{n_i}> over the stairs, n_i increasing and m_i + n_i
// decreasing. Variables are x (index 0) and lambda (index 1).
struct IntrinsicIdeal {
  std::vector<std::pair<unsigned, unsigned>> stairs;

  bool contains(const Monomial& m) const;
  bool contains(const Polynomial& f) const;
  // Minimal monomial generators.
  std::vector<Monomial> generators() const;
  // Monomials outside the ideal; throws if the complement is infinite.
  std::vector<Monomial> complement() const;
  bool finite_codimension() const;
  bool well_formed() const;
  // Normalizes a list of (m, n) containments into the unique presentation.
  static IntrinsicIdeal from_pairs(std::vector<std::pair<unsigned, unsigned>> pairs);
  std::string to_string() const;
  bool operator==(const IntrinsicIdeal& o) const { return stairs == o.stairs; }
};

struct IntrinsicDecomposition {
  IntrinsicIdeal itr;
  std::vector<Polynomial> complement_part;
};

IntrinsicIdeal intrinsic_part(const IdealBasis& B);
bool intrinsic_membership(const IntrinsicIdeal& itr, const Polynomial& f);
IntrinsicDecomposition intrinsic_decomposition(const IdealBasis& B);

// Row-reduces vectors after deleting their terms inside itr. Pivots are the
// lex-leading monomials (x before lambda) and are made monic.
std::vector<Polynomial> reduce_span(const std::vector<Polynomial>& vectors, const IntrinsicIdeal& itr);

// Pivot of a reduced span vector: its lex-leading monomial (x before lambda).
Monomial span_pivot(const Polynomial& f);

// Display order for monomial lists: lower degree first, then lambda-heavier first.
bool display_less(const Monomial& a, const Monomial& b);

}  // namespace germforge
