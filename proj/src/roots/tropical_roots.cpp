#include <algorithm>

#include "hyperion/error.hpp"
#include "hyperion/roots.hpp"
#include "hyperion/tolerance.hpp"

namespace hyperion {

namespace {

struct Vertex {
  double x;
  double y;
};

double cross(const Vertex& o, const Vertex& a, const Vertex& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

RootReport tropical_roots(const Polynomial& p) {
  if (p.field().carrier() != CarrierKind::TropNum) throw CarrierMismatch("tropical_roots needs a polynomial over T");
  if (p.nvars() != 1) throw DimensionMismatch("tropical_roots needs a univariate polynomial");

  // Upper hull of the Newton polygon; near-collinear vertices are merged.
  std::vector<Vertex> hull;
  for (const auto& [e, c] : p.terms()) {
    Vertex v{static_cast<double>(e[0]), std::get<TropNum>(c).value};
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), v) > -tolerance()) hull.pop_back();
    hull.push_back(v);
  }

  RootReport report;
  report.degree = p.degree();
  report.exhaustive = true;
  if (unsigned low = p.min_exponent(); low > 0) report.roots.push_back({TropNum{kBottom}, low});
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    double run = hull[k + 1].x - hull[k].x;
    double slope = (hull[k + 1].y - hull[k].y) / run;
    report.roots.push_back({TropNum{0.0 - slope}, static_cast<unsigned>(run)});
  }
  for (const auto& r : report.roots) report.total_multiplicity += r.multiplicity;
  return report;
}

}  // namespace hyperion
