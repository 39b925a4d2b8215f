#include "germforge/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "germforge/roots.hpp"

namespace germforge {

namespace {

constexpr double kSize = 480, kMargin = 48;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

struct Frame {
  double x0, x1, y0, y1;
  double px(double x) const { return kMargin + (x - x0) / (x1 - x0) * (kSize - 2 * kMargin); }
  double py(double y) const { return kSize - kMargin - (y - y0) / (y1 - y0) * (kSize - 2 * kMargin); }
};

void header(std::ostringstream& s, const Frame& f, const std::string& hlabel, const std::string& vlabel,
            const std::string& title) {
  s << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize << "\" height=\"" << kSize
    << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n"
    << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  double l = kMargin, r = kSize - kMargin, t = kMargin, b = kSize - kMargin;
  s << "<rect x=\"" << l << "\" y=\"" << t << "\" width=\"" << r - l << "\" height=\"" << b - t
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  if (f.y0 < 0 && f.y1 > 0)
    s << "<line x1=\"" << l << "\" y1=\"" << num(f.py(0)) << "\" x2=\"" << r << "\" y2=\"" << num(f.py(0))
      << "\" stroke=\"#bbb\"/>\n";
  if (f.x0 < 0 && f.x1 > 0)
    s << "<line x1=\"" << num(f.px(0)) << "\" y1=\"" << t << "\" x2=\"" << num(f.px(0)) << "\" y2=\"" << b
      << "\" stroke=\"#bbb\"/>\n";
  s << "<g font-family=\"sans-serif\" font-size=\"12\">\n"
    << "<text x=\"" << (l + r) / 2 << "\" y=\"" << kSize - 12 << "\" text-anchor=\"middle\">" << escape(hlabel)
    << "</text>\n"
    << "<text x=\"14\" y=\"" << (t + b) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 14 " << (t + b) / 2
    << ")\">" << escape(vlabel) << "</text>\n"
    << "<text x=\"" << l << "\" y=\"" << b + 14 << "\">" << num(f.x0) << "</text>\n"
    << "<text x=\"" << r << "\" y=\"" << b + 14 << "\" text-anchor=\"end\">" << num(f.x1) << "</text>\n"
    << "<text x=\"" << l - 4 << "\" y=\"" << b << "\" text-anchor=\"end\">" << num(f.y0) << "</text>\n"
    << "<text x=\"" << l - 4 << "\" y=\"" << t + 10 << "\" text-anchor=\"end\">" << num(f.y1) << "</text>\n";
  if (!title.empty()) s << "<text x=\"" << l << "\" y=\"" << t - 10 << "\">" << escape(title) << "</text>\n";
  s << "</g>\n";
}

bool allowed(const TransitionComponent& c, const std::vector<double>& a) {
  if (c.side.empty()) return true;
  for (const auto& s : c.side) {
    if (s.kind == SideCondition::Kind::EmptyReal) return false;
    if (s.kind == SideCondition::Kind::Sign && s.sign * a[s.param] >= -1e-12) return true;
    if (s.kind != SideCondition::Kind::Sign) return true;
  }
  return false;
}

const char* colour(const std::string& name) {
  if (name == "B") return "#1f5fbf";
  if (name == "H") return "#2a9d3a";
  return "#c0392b";
}

}  // namespace

std::string diagram_svg(const BifurcationDiagram& d, const std::string& title) {
  double lo = d.lambdas.empty() ? -1 : d.lambdas.front(), hi = d.lambdas.empty() ? 1 : d.lambdas.back();
  double ylo = -1, yhi = 1;
  for (const auto& rs : d.roots)
    for (double x : rs) {
      ylo = std::min(ylo, x);
      yhi = std::max(yhi, x);
    }
  double pad = 0.05 * (yhi - ylo);
  Frame f{lo, hi, ylo - pad, yhi + pad};
  std::ostringstream s;
  header(s, f, "lambda", "x", title.empty() ? d.signature : title);
  s << "<g fill=\"black\">\n";
  for (std::size_t i = 0; i < d.lambdas.size(); ++i)
    for (double x : d.roots[i])
      s << "<circle cx=\"" << num(f.px(d.lambdas[i])) << "\" cy=\"" << num(f.py(x)) << "\" r=\"1.5\"/>\n";
  s << "</g>\n<g stroke=\"#c0392b\" stroke-width=\"1.5\">\n";
  for (const auto& fo : d.folds) {
    double cx = f.px(fo.lambda), cy = f.py(fo.x);
    s << "<line x1=\"" << num(cx - 4) << "\" y1=\"" << num(cy - 4) << "\" x2=\"" << num(cx + 4) << "\" y2=\""
      << num(cy + 4) << "\"/>\n"
      << "<line x1=\"" << num(cx - 4) << "\" y1=\"" << num(cy + 4) << "\" x2=\"" << num(cx + 4) << "\" y2=\""
      << num(cy - 4) << "\"/>\n";
  }
  s << "</g>\n</svg>\n";
  return s.str();
}

std::string transition_svg(const TransitionSet& T, double box, const std::vector<ParameterRegion>& regions) {
  std::size_t k = T.params.size();
  if (k > 2) throw std::invalid_argument("transition set plots need at most two parameters; use --json");
  Frame f{-box, box, -box, box};
  std::ostringstream s;
  std::string h = k >= 1 ? T.params[0] : "", v = k >= 2 ? T.params[1] : "";
  header(s, f, h, v, "transition set");
  for (const auto* c : T.components()) {
    if (c->empty || c->full) continue;
    s << "<g stroke=\"" << colour(c->name) << "\" fill=\"" << colour(c->name) << "\" stroke-width=\"1.5\">\n";
    for (const auto& g : c->gens) {
      if (k == 1) {
        UniPoly u = to_unipoly(g, 0);
        for (const auto& r : real_roots(u))
          if (std::fabs(r.value) <= box && allowed(*c, {r.value}))
            s << "<circle cx=\"" << num(f.px(r.value)) << "\" cy=\"" << num(f.py(0)) << "\" r=\"3\"/>\n";
        continue;
      }
      if (k != 2) continue;
      // marching squares
      const int n = 240;
      double step = 2 * box / n;
      std::vector<double> val((n + 1) * (n + 1));
      auto at = [&](int i, int j) -> double& { return val[std::size_t(j) * (n + 1) + std::size_t(i)]; };
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i) at(i, j) = g.eval(std::vector<double>{-box + i * step, -box + j * step});
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
          double v[4] = {at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
          double xs[4] = {-box + i * step, -box + (i + 1) * step, -box + (i + 1) * step, -box + i * step};
          double ys[4] = {-box + j * step, -box + j * step, -box + (j + 1) * step, -box + (j + 1) * step};
          std::vector<std::pair<double, double>> cut;
          for (int e = 0; e < 4; ++e) {
            int e2 = (e + 1) % 4;
            if ((v[e] > 0) == (v[e2] > 0)) continue;
            double t = v[e] / (v[e] - v[e2]);
            cut.emplace_back(xs[e] + t * (xs[e2] - xs[e]), ys[e] + t * (ys[e2] - ys[e]));
          }
          for (std::size_t q = 0; q + 1 < cut.size(); q += 2) {
            std::vector<double> mid{0.5 * (cut[q].first + cut[q + 1].first), 0.5 * (cut[q].second + cut[q + 1].second)};
            if (!allowed(*c, mid)) continue;
            s << "<line x1=\"" << num(f.px(cut[q].first)) << "\" y1=\"" << num(f.py(cut[q].second)) << "\" x2=\""
              << num(f.px(cut[q + 1].first)) << "\" y2=\"" << num(f.py(cut[q + 1].second)) << "\"/>\n";
          }
        }
    }
    s << "</g>\n";
  }
  s << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (const auto& r : regions) {
    double x = k >= 1 ? to_double(r.point[0]) : 0, y = k >= 2 ? to_double(r.point[1]) : 0;
    s << "<text x=\"" << num(f.px(x)) << "\" y=\"" << num(f.py(y)) << "\" text-anchor=\"middle\">" << r.id + 1
      << "</text>\n";
  }
  double ly = kMargin - 10;
  double lx = kSize - kMargin - 90;
  for (const auto* c : T.components()) {
    if (c->empty || c->full) continue;
    s << "<text x=\"" << lx << "\" y=\"" << ly << "\" fill=\"" << colour(c->name) << "\">" << c->name << "</text>\n";
    lx += 30;
  }
  s << "</g>\n</svg>\n";
  return s.str();
}

}  // namespace germforge
