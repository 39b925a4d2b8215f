#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "germforge/roots.hpp"
#include "germforge/transition.hpp"

namespace germforge {

namespace {

Polynomial specialize(const Unfolding& G, const std::vector<Rational>& alpha) {
  if (alpha.size() != G.size()) throw std::invalid_argument("parameter point has the wrong dimension");
  std::vector<std::pair<std::size_t, Polynomial>> subs;
  for (std::size_t i = 0; i < alpha.size(); ++i) subs.emplace_back(2 + i, Polynomial(alpha[i]));
  return G.poly.substitute(subs);
}

// h(x, t) as a polynomial in x.
UniPoly slice(const Polynomial& h, const Rational& t) {
  UniPoly u = to_unipoly(h.substitute(1, Polynomial(t)), 0);
  if (u.empty()) throw std::domain_error("the diagram contains the whole line lambda = " + to_string(t));
  return u;
}

std::vector<double> root_values(const UniPoly& u) {
  std::vector<double> v;
  for (const auto& r : real_roots(u)) v.push_back(r.value);
  return v;
}

struct Analysis {
  std::vector<Fold> folds;
  std::vector<std::size_t> counts;
  std::string signature;
};

Analysis analyze(const Polynomial& h) {
  Analysis a;
  Polynomial hx = h.derivative(0);
  std::vector<RealRoot> events;
  if (!hx.is_zero()) {
    auto r = eliminate({h, hx}, 1, 1);
    if (r.empty()) throw std::domain_error("the diagram has a non-isolated singular set");
    if (r.front().degree() > 0) events = real_roots(to_unipoly(r.front(), 0));
  }
  // test points between consecutive candidate values
  std::vector<Rational> tests;
  if (events.empty()) {
    tests.push_back(0);
  } else {
    tests.push_back(events.front().lo - 1);
    for (std::size_t i = 0; i + 1 < events.size(); ++i) tests.push_back((events[i].hi + events[i + 1].lo) / 2);
    tests.push_back(events.back().hi + 1);
  }
  std::vector<std::size_t> c;
  for (const auto& t : tests) c.push_back(count_real_roots(slice(h, t)));
  a.counts.push_back(c.front());
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (c[i] == c[i + 1]) continue;
    Fold f;
    f.lambda = events[i].value;
    f.opens_right = c[i + 1] > c[i];
    double gap = 1;
    if (i > 0) gap = std::min(gap, events[i].value - events[i - 1].value);
    if (i + 1 < events.size()) gap = std::min(gap, events[i + 1].value - events[i].value);
    double delta = std::min(1e-6, gap / 4);
    Rational side = f.opens_right ? Rational(events[i].hi + from_double(delta)) : Rational(events[i].lo - from_double(delta));
    auto xs = root_values(slice(h, side));
    if (xs.size() >= 2) {
      std::size_t best = 0;
      for (std::size_t j = 1; j + 1 < xs.size(); ++j)
        if (xs[j + 1] - xs[j] < xs[best + 1] - xs[best]) best = j;
      f.pair = best;
      f.x = 0.5 * (xs[best] + xs[best + 1]);
    }
    a.folds.push_back(f);
    a.counts.push_back(c[i + 1]);
  }
  std::ostringstream s;
  s << a.counts.front();
  for (std::size_t i = 0; i < a.folds.size(); ++i)
    s << " f" << a.folds[i].pair << (a.folds[i].opens_right ? "R " : "L ") << a.counts[i + 1];
  a.signature = s.str();
  return a;
}

}  // namespace

std::string diagram_signature(const Unfolding& G, const std::vector<Rational>& alpha) {
  return analyze(specialize(G, alpha)).signature;
}

BifurcationDiagram diagram_trace(const Unfolding& G, const std::vector<Rational>& alpha, const DiagramOptions& opt) {
  Polynomial h = specialize(G, alpha);
  Analysis a = analyze(h);
  BifurcationDiagram d;
  d.alpha = alpha;
  d.folds = a.folds;
  d.counts = a.counts;
  d.signature = a.signature;
  double lo = opt.lambda_min, hi = opt.lambda_max;
  for (const auto& f : a.folds) {
    lo = std::min(lo, f.lambda);
    hi = std::max(hi, f.lambda);
  }
  double margin = 0.1 * (hi - lo);
  if (lo < opt.lambda_min) lo -= margin;
  if (hi > opt.lambda_max) hi += margin;
  unsigned n = std::max(2u, opt.points);
  for (unsigned j = 0; j < n; ++j) {
    Rational t = from_double(lo + (hi - lo) * j / (n - 1));
    UniPoly u = slice(h, t);
    std::vector<double> kept;
    for (double x : root_values(u)) {
      double r = std::fabs(eval(u, x));
      if (r > opt.residual) {
        ++d.dropped;
        continue;
      }
      d.max_residual = std::max(d.max_residual, r);
      kept.push_back(x);
    }
    d.lambdas.push_back(to_double(t));
    d.roots.push_back(kept);
  }
  return d;
}

PersistentResult persistent_diagrams(const Unfolding& G, const TransitionSet& T, const RegionOptions& ropt,
                                     const DiagramOptions& dopt) {
  PersistentResult out;
  RegionOptions ro = ropt;
  if (!ro.invariant) ro.invariant = [&G](const std::vector<Rational>& a) { return diagram_signature(G, a); };
  RegionResult R = region_decompose(T, ro);
  out.warnings = R.warnings;
  std::vector<std::string> seen;
  for (auto& r : R.regions) {
    PersistentDiagram pd{r, diagram_trace(G, r.point, dopt)};
    if (std::find(seen.begin(), seen.end(), pd.diagram.signature) == seen.end()) {
      seen.push_back(pd.diagram.signature);
      out.short_list.push_back(out.diagrams.size());
    }
    out.diagrams.push_back(std::move(pd));
  }
  return out;
}

}  // namespace germforge
