#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "germforge/unfolding.hpp"

namespace germforge {

// Generators of I ∩ K[kept], computed with a block order; kept variables
// n_elim..n_elim+n_keep-1 are renumbered from 0.
std::vector<Polynomial> eliminate(std::vector<Polynomial> F, std::size_t n_elim, std::size_t n_keep);

// Integer coefficients with content 1 and a positive first term.
Polynomial primitive(const Polynomial& p);

// Numeric descriptor of where a component is realized by real (x, lambda).
struct SideCondition {
  enum class Kind { AllReal, EmptyReal, Sign, Mixed, Undetermined };
  Kind kind = Kind::Undetermined;
  std::size_t param = 0;  // Sign: sign * alpha_{param+1} >= 0 on realized samples
  int sign = 0;
  std::size_t sampled = 0, realized = 0;
  std::string text(const std::vector<std::string>& params) const;
};

// A polynomial system in witness variables w followed by parameters alpha.
struct WitnessSystem {
  std::size_t nw = 0;
  std::vector<Polynomial> eqs;
  // for the double limit point system: indices of x1, x2 that must differ
  bool distinct = false;
  std::size_t i1 = 0, i2 = 0;
};

struct WitnessOptions {
  unsigned starts = 24;
  unsigned iterations = 80;
  double radius = 3.0;
  double tol = 1e-9;
  std::uint64_t seed = 7;
};

// Real witness of sys at the parameter point, by damped Gauss-Newton from
// several starts. Returns false when none is found within the budget.
bool find_witness(const WitnessSystem& sys, const std::vector<double>& alpha, const WitnessOptions& opt,
                  std::vector<double>* w = nullptr);

struct TransitionComponent {
  std::string name;              // B, H or D
  WitnessSystem system;          // defining system, for realization tests
  std::vector<Polynomial> gens;  // elimination ideal in the parameters, primitive
  bool empty = false;            // the ideal is (1)
  bool full = false;             // the ideal is 0
  std::vector<SideCondition> side;
};

struct TransitionOptions {
  bool filter = true;
  unsigned samples = 40;
  double box = 1.0;
  std::uint64_t seed = 11;
};

struct TransitionSet {
  std::vector<std::string> params;
  TransitionComponent B, H, D;
  std::vector<const TransitionComponent*> components() const { return {&B, &H, &D}; }
  // Hypersurface generators of the three components.
  std::vector<Polynomial> sigma() const;
};

TransitionSet transition_set(const Unfolding& G, const TransitionOptions& opt = {});

// Samples points of the varieties, tests them for real witnesses and reports
// sign descriptors that separate realized from unrealized samples.
std::vector<SideCondition> real_filter(const WitnessSystem& sys, const std::vector<Polynomial>& variety,
                                       std::size_t nparams, const TransitionOptions& opt = {});

struct ParameterRegion {
  std::size_t id = 0;
  std::vector<Rational> point;  // representative
  std::vector<int> signs;       // sign of each sigma polynomial at the point
  std::size_t cells = 0;
  std::vector<std::vector<Rational>> samples;  // further interior points
};

struct RegionOptions {
  double box = 1.0;
  unsigned grid = 0;  // cells per axis; 0 picks 400, 200, 40 for 1, 2, 3 parameters
  unsigned interface_samples = 5;
  unsigned extra_samples = 5;
  std::uint64_t seed = 5;
  // Optional qualitative invariant of a parameter point; small pieces with the
  // same sign vector and invariant within two cells of each other are joined.
  std::function<std::string(const std::vector<Rational>&)> invariant;
  std::size_t fragment_cells = 8;
};

struct RegionResult {
  std::vector<ParameterRegion> regions;
  std::vector<std::string> warnings;
  unsigned grid = 0;
};

RegionResult region_decompose(const TransitionSet& T, const RegionOptions& opt = {});

struct Fold {
  double lambda = 0;
  double x = 0;
  std::size_t pair = 0;  // the roots pair, pair+1 (in x order) merge here
  bool opens_right = false;  // more roots for lambda above the fold
};

struct BifurcationDiagram {
  std::vector<Rational> alpha;
  std::vector<double> lambdas;
  std::vector<std::vector<double>> roots;  // per lambda, increasing
  std::vector<Fold> folds;
  std::vector<std::size_t> counts;  // root counts between consecutive folds
  std::size_t dropped = 0;          // points rejected by the residual check
  double max_residual = 0;
  std::string signature;
};

struct DiagramOptions {
  unsigned points = 241;
  double lambda_min = -1, lambda_max = 1;  // widened to contain every fold
  double residual = 1e-9;
};

BifurcationDiagram diagram_trace(const Unfolding& G, const std::vector<Rational>& alpha, const DiagramOptions& opt = {});

// Qualitative signature alone (no sampling grid).
std::string diagram_signature(const Unfolding& G, const std::vector<Rational>& alpha);

struct PersistentDiagram {
  ParameterRegion region;
  BifurcationDiagram diagram;
};

struct PersistentResult {
  std::vector<PersistentDiagram> diagrams;
  std::vector<std::size_t> short_list;  // first diagram of every distinct signature
  std::vector<std::string> warnings;
};

PersistentResult persistent_diagrams(const Unfolding& G, const TransitionSet& T, const RegionOptions& ropt = {},
                                     const DiagramOptions& dopt = {});

}  // namespace germforge
