#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "germforge/errors.hpp"
#include "germforge/roots.hpp"
#include "germforge/transition.hpp"

namespace germforge {

namespace {

struct UnionFind {
  std::vector<std::size_t> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t a) {
    while (p[a] != a) a = p[a] = p[p[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

int sign_of(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

RegionResult region_decompose(const TransitionSet& T, const RegionOptions& opt) {
  std::size_t k = T.params.size();
  if (k > 3) throw std::invalid_argument("region decomposition supports at most 3 parameters");
  RegionResult res;
  unsigned R = opt.grid ? opt.grid : (k == 1 ? 400 : k == 2 ? 200 : 40);
  res.grid = R;

  // sigma polynomials with the component that owns them
  std::vector<std::pair<Polynomial, const TransitionComponent*>> sig;
  for (const auto* c : T.components())
    if (!c->empty && !c->full)
      for (const auto& g : c->gens) sig.emplace_back(g, c);

  Rational B = from_double(opt.box);
  auto center = [&](std::size_t cell) {
    std::vector<Rational> p(k);
    for (std::size_t d = 0; d < k; ++d) {
      std::size_t i = cell % R;
      cell /= R;
      p[d] = -B + B * Rational(long(2 * i + 1), long(R));
      p[d].canonicalize();
    }
    return p;
  };
  auto to_doubles = [](const std::vector<Rational>& p) {
    std::vector<double> v;
    for (const auto& r : p) v.push_back(to_double(r));
    return v;
  };

  std::size_t ncells = 1;
  for (std::size_t d = 0; d < k; ++d) ncells *= R;
  if (ncells > 8000000) throw NumericBudgetError("region grid of " + std::to_string(ncells) + " cells is over budget");
  if (sig.empty() || k == 0) {
    ParameterRegion r;
    r.point = k ? center(ncells / 2) : std::vector<Rational>{};
    r.cells = k ? ncells : 0;
    res.regions.push_back(r);
    return res;
  }

  std::vector<std::vector<double>> val(sig.size(), std::vector<double>(ncells));
  std::vector<std::vector<double>> pts(ncells);
  for (std::size_t c = 0; c < ncells; ++c) {
    pts[c] = to_doubles(center(c));
    for (std::size_t s = 0; s < sig.size(); ++s) {
      val[s][c] = sig[s].first.eval(pts[c]);
      if (val[s][c] == 0) {
        // centers exactly on a curve take the sign of a nearby generic point
        std::vector<double> p = pts[c];
        for (std::size_t d = 0; d < k; ++d) p[d] += to_double(B) / R * 1e-3 / std::sqrt(double(d + 2));
        val[s][c] = sig[s].first.eval(p);
      }
    }
  }
  std::vector<std::size_t> stride(k, 1);
  for (std::size_t d = 1; d < k; ++d) stride[d] = stride[d - 1] * R;

  // axis derivatives, used to find edges where a polynomial touches zero
  // without changing sign
  std::vector<std::vector<Polynomial>> dsig(sig.size());
  for (std::size_t s = 0; s < sig.size(); ++s)
    for (std::size_t d = 0; d < k; ++d) dsig[s].push_back(sig[s].first.derivative(d));
  auto restricted = [&](std::size_t s, std::size_t c, std::size_t d) {
    std::vector<Rational> p = center(c);
    std::vector<std::pair<std::size_t, Polynomial>> subs;
    for (std::size_t e = 0; e < k; ++e)
      if (e != d) subs.emplace_back(e, Polynomial(p[e]));
    return to_unipoly(sig[s].first.substitute(subs), d);
  };
  auto touches = [&](std::size_t s, std::size_t c, std::size_t n, std::size_t d) {
    if (sign_of(dsig[s][d].eval(pts[c])) == sign_of(dsig[s][d].eval(pts[n]))) return false;
    UniPoly u = restricted(s, c, d);
    if (degree(u) <= 0) return false;
    return SturmSequence(u).count(center(c)[d], center(n)[d]) > 0;
  };

  struct Edge {
    std::size_t a, b, axis;
    std::vector<std::size_t> crossing;
    bool touch = false;  // no sign change; the polynomial has a double zero inside
  };
  std::vector<Edge> crossing_edges;
  UnionFind cells(ncells);
  for (std::size_t c = 0; c < ncells; ++c)
    for (std::size_t d = 0; d < k; ++d) {
      if ((c / stride[d]) % R == R - 1) continue;
      std::size_t n = c + stride[d];
      std::vector<std::size_t> cr;
      for (std::size_t s = 0; s < sig.size(); ++s)
        if (sign_of(val[s][c]) != sign_of(val[s][n])) cr.push_back(s);
      bool touch = false;
      if (cr.empty())
        for (std::size_t s = 0; s < sig.size(); ++s)
          if (touches(s, c, n, d)) {
            cr.push_back(s);
            touch = true;
          }
      if (cr.empty())
        cells.unite(c, n);
      else
        crossing_edges.push_back({c, n, d, cr, touch});
    }

  // interfaces between arrangement cells; merge those without real witnesses
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> interfaces;
  for (std::size_t e = 0; e < crossing_edges.size(); ++e) {
    std::size_t a = cells.find(crossing_edges[e].a), b = cells.find(crossing_edges[e].b);
    if (a == b) continue;
    interfaces[{std::min(a, b), std::max(a, b)}].push_back(e);
  }
  WitnessOptions wo;
  auto edge_realized = [&](const Edge& e) {
    for (std::size_t s : e.crossing) {
      if (e.touch) {
        Rational lo = center(e.a)[e.axis], hi = center(e.b)[e.axis];
        for (const auto& r : real_roots(restricted(s, e.a, e.axis))) {
          if (r.value <= to_double(lo) || r.value >= to_double(hi)) continue;
          std::vector<double> at = pts[e.a];
          at[e.axis] = r.value;
          if (find_witness(sig[s].second->system, at, wo)) return true;
        }
        continue;
      }
      std::vector<double> lo = pts[e.a], hi = pts[e.b];
      double flo = val[s][e.a];
      std::vector<double> mid(k);
      for (int it = 0; it < 60; ++it) {
        for (std::size_t d = 0; d < k; ++d) mid[d] = 0.5 * (lo[d] + hi[d]);
        double fm = sig[s].first.eval(mid);
        if (fm == 0) break;
        if (sign_of(fm) == sign_of(flo))
          lo = mid;
        else
          hi = mid;
      }
      if (find_witness(sig[s].second->system, mid, wo)) return true;
    }
    return false;
  };
  UnionFind merged = cells;
  for (const auto& [key, edges] : interfaces) {
    std::size_t m = std::min<std::size_t>(opt.interface_samples, edges.size());
    std::size_t yes = 0;
    for (std::size_t i = 0; i < m; ++i) yes += edge_realized(crossing_edges[edges[i * edges.size() / m]]);
    if (2 * yes <= m) merged.unite(key.first, key.second);
  }

  // boundary cells: incident to a crossing edge that still separates regions
  std::vector<int> dist(ncells, -1);
  std::deque<std::size_t> q;
  for (const auto& e : crossing_edges)
    if (merged.find(e.a) != merged.find(e.b))
      for (std::size_t c : {e.a, e.b})
        if (dist[c] < 0) {
          dist[c] = 0;
          q.push_back(c);
        }
  // the box boundary counts as boundary too, so representatives stay inside
  for (std::size_t c = 0; c < ncells; ++c) {
    if (dist[c] >= 0) continue;
    for (std::size_t d = 0; d < k; ++d) {
      std::size_t i = (c / stride[d]) % R;
      if (i == 0 || i == R - 1) {
        dist[c] = 0;
        q.push_back(c);
        break;
      }
    }
  }
  while (!q.empty()) {
    std::size_t c = q.front();
    q.pop_front();
    for (std::size_t d = 0; d < k; ++d) {
      std::size_t i = (c / stride[d]) % R;
      for (int dir : {-1, 1}) {
        if ((dir < 0 && i == 0) || (dir > 0 && i == R - 1)) continue;
        std::size_t n = dir < 0 ? c - stride[d] : c + stride[d];
        if (dist[n] >= 0 || merged.find(n) != merged.find(c)) continue;
        dist[n] = dist[c] + 1;
        q.push_back(n);
      }
    }
  }

  auto signs_at = [&](const std::vector<Rational>& p) {
    std::vector<int> v;
    for (const auto& s : sig) v.push_back(sgn(s.first.eval(p)));
    return v;
  };
  auto deepest = [&](const std::vector<std::size_t>& members) {
    std::size_t best = members[members.size() / 2];
    for (std::size_t c : members)
      if (dist[c] > dist[best]) best = c;
    return best;
  };
  auto components = [&] {
    std::map<std::size_t, std::vector<std::size_t>> comps;
    for (std::size_t c = 0; c < ncells; ++c) comps[merged.find(c)].push_back(c);
    return comps;
  };

  // A region thinner than the grid shows up as several small pieces. Pieces
  // with the same sign vector and the same invariant that lie within two cells
  // of each other are joined.
  if (opt.invariant) {
    auto comps = components();
    UnionFind base = merged;
    std::map<std::size_t, std::vector<int>> sv;
    std::map<std::size_t, std::string> inv;
    for (auto& [root, members] : comps) sv[root] = signs_at(center(deepest(members)));
    auto invariant = [&](std::size_t root) {
      auto it = inv.find(root);
      if (it == inv.end()) it = inv.emplace(root, opt.invariant(center(deepest(comps[root])))).first;
      return it->second;
    };
    std::set<std::pair<std::size_t, std::size_t>> tried;
    for (auto& [root, members] : comps) {
      if (members.size() > opt.fragment_cells) continue;
      for (std::size_t c : members) {
        std::vector<long> idx(k);
        for (std::size_t d = 0; d < k; ++d) idx[d] = long((c / stride[d]) % R);
        std::size_t span = 1;
        for (std::size_t d = 0; d < k; ++d) span *= 5;
        for (std::size_t o = 0; o < span; ++o) {
          std::size_t n = 0, t = o;
          bool inside = true;
          for (std::size_t d = 0; d < k; ++d) {
            long j = idx[d] + long(t % 5) - 2;
            t /= 5;
            if (j < 0 || j >= long(R)) inside = false;
            n += std::size_t(j) * stride[d];
          }
          if (!inside) continue;
          // roots of the original pieces, so lookups stay valid while merging
          std::size_t b = base.find(n);
          if (b == root || !tried.insert({std::min(root, b), std::max(root, b)}).second) continue;
          if (sv[root] == sv[b] && invariant(root) == invariant(b)) merged.unite(root, b);
        }
      }
    }
  }

  std::mt19937_64 rng(opt.seed);
  double h = 2 * to_double(B) / R;
  for (auto& [root, members] : components()) {
    ParameterRegion r;
    r.id = res.regions.size();
    r.cells = members.size();
    // deepest cell
    std::size_t best = deepest(members);
    int maxd = dist[best];
    r.point = center(best);
    r.signs = signs_at(r.point);
    std::vector<std::size_t> deep;
    int threshold = maxd < 0 ? -1 : std::max(1, maxd / 2);
    for (std::size_t c : members)
      if (c != best && (maxd < 0 || dist[c] >= threshold)) deep.push_back(c);
    std::shuffle(deep.begin(), deep.end(), rng);
    for (std::size_t i = 0; i < std::min<std::size_t>(opt.extra_samples, deep.size()); ++i)
      r.samples.push_back(center(deep[i]));
    // small regions: jitter the representative inside its cell
    std::uniform_real_distribution<double> jit(-0.3 * h, 0.3 * h);
    for (int tries = 0; r.samples.size() < opt.extra_samples && tries < 200; ++tries) {
      std::vector<Rational> p = r.point;
      for (auto& v : p) v += from_double(jit(rng));
      auto sv = signs_at(p);
      if (sv == r.signs && std::find(sv.begin(), sv.end(), 0) == sv.end()) r.samples.push_back(p);
    }
    if (r.cells < 4)
      res.warnings.push_back("region " + std::to_string(r.id) + " has only " + std::to_string(r.cells) +
                             " cells; refine the grid");
    res.regions.push_back(std::move(r));
  }
  return res;
}

}  // namespace germforge
