#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "germforge/errors.hpp"
#include "germforge/germ_expr.hpp"
#include "germforge/ideal.hpp"
#include "germforge/intrinsic.hpp"

namespace germforge {

struct QuotientBasis {
  std::vector<Monomial> monomials;
  std::size_t dimension() const { return monomials.size(); }
};

struct MultMatrix {
  std::size_t var = 0;
  // column j holds the coordinates of Rem(var * w_j)
  std::vector<std::vector<Rational>> matrix;
  unsigned nilpotency = 0;
};

enum class CodimStatus { Finite, Infinite, Uncertified };

struct TruncationCertificate {
  CodimStatus status = CodimStatus::Uncertified;
  unsigned N = 0;
  std::optional<unsigned> k;  // least k with M^k in the ideal
  RingKind advice = RingKind::LocalJet;
  // staircase evidence for the infinite case, as (k_i, l_i)
  IntrinsicIdeal staircase;
  // true when the ideal equals the staircase
  bool staircase_exact = false;
  std::string note;
};

// Raised by normal_set when some degree-N monomial survives.
class StaircaseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

QuotientBasis normal_set(const IdealBasis& B);
MultMatrix mult_matrix(const IdealBasis& B, std::size_t var);
// Least k <= N with M^k contained in the ideal (jet ring), if any.
std::optional<unsigned> max_power_in_ideal(const IdealBasis& B);
// M^i <lambda^j> contained in the ideal.
bool power_lambda_test(const IdealBasis& B, unsigned i, unsigned j);
IdealBasis colon_ideal(const IdealBasis& B, const Monomial& g);
IdealBasis ideal_intersection(const IdealBasis& A, const IdealBasis& B);

// Exact membership of a monomial in the ideal generated by polynomials in
// the local ring of polynomial germs (via the global colon I : m).
bool local_monomial_membership(const std::vector<Polynomial>& gens, const Monomial& m);

using JetFamily = std::function<std::vector<Jet>(unsigned N)>;

TruncationCertificate verify_truncation(const JetFamily& gens, unsigned N0, unsigned cap = 24);
TruncationCertificate verify_truncation(const std::vector<GermExpression>& gens, unsigned N0, unsigned cap = 24);

// All monomials in x, lambda of total degree d, x-heaviest first.
std::vector<Monomial> monomials_of_degree(unsigned d);

std::string to_string(CodimStatus s);

}  // namespace germforge
