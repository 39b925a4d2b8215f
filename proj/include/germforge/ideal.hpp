#pragma once

#include <string>
#include <utility>
#include <vector>

#include "germforge/order.hpp"
#include "germforge/polynomial.hpp"

namespace germforge {

enum class RingKind { LocalJet, GlobalPoly };

// Generators of an ideal together with the order and ring they live in. In
// the jet ring K[vars]/M^{N+1} every generator is kept truncated to degree N.
class IdealBasis {
 public:
  IdealBasis(std::vector<Polynomial> gens, MonomialOrder order, RingKind ring, unsigned N = 0);

  static IdealBasis jet(std::vector<Polynomial> gens, unsigned N, MonomialOrder order = MonomialOrder::alex(2));
  static IdealBasis poly(std::vector<Polynomial> gens, MonomialOrder order = MonomialOrder::lex(2));

  const std::vector<Polynomial>& gens() const& { return gens_; }
  std::vector<Polynomial> gens() && { return std::move(gens_); }
  const MonomialOrder& order() const { return order_; }
  RingKind ring() const { return ring_; }
  bool is_jet() const { return ring_ == RingKind::LocalJet; }
  unsigned degree() const { return N_; }
  // Truncation bound used by the arithmetic: N in the jet ring, -1 otherwise.
  int bound() const { return is_jet() ? int(N_) : -1; }
  std::size_t size() const { return gens_.size(); }

  IdealBasis with_gens(std::vector<Polynomial> gens) const;

  std::string meta;

 private:
  std::vector<Polynomial> gens_;
  MonomialOrder order_;
  RingKind ring_;
  unsigned N_;
};

struct DivisionResult {
  Polynomial remainder;
  std::vector<Polynomial> quotients;
  bool truncated = false;
};

DivisionResult divide(const Polynomial& f, const IdealBasis& B);
// Remainder only; cheaper than divide.
Polynomial remainder(const Polynomial& f, const IdealBasis& B);
bool reduces_to_zero(const Polynomial& f, const IdealBasis& B);

IdealBasis standard_basis(const IdealBasis& B);
IdealBasis reduce_basis(const IdealBasis& B);
IdealBasis groebner_basis(const IdealBasis& B);

struct StandardBasisCheck {
  bool ok = true;
  // (i, j, remainder of the S-germ) for every failing pair
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Polynomial>> failures;
};

StandardBasisCheck is_standard_basis(const IdealBasis& B);

// Leading monomials of the generators under the basis order.
std::vector<Monomial> leading_monomials(const IdealBasis& B);

// Minimal generators of the monomial ideal spanned by the leading monomials.
std::vector<Monomial> lt_ideal(const IdealBasis& B);

}  // namespace germforge
