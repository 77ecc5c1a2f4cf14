#include "hyperion/region_algebra.hpp"

#include <algorithm>
#include <cmath>

#include "hyperion/tolerance.hpp"

namespace hyperion::regions {

namespace {

struct TropPiece {
  bool ray = false;
  double value = kBottom;
};

std::vector<TropPiece> pieces(const TropSet& s) {
  std::vector<TropPiece> out;
  for (double p : s.points) out.push_back({false, p});
  if (s.ray) out.push_back({true, *s.ray});
  return out;
}

void add(TropSet& acc, const TropPiece& p) {
  if (p.ray) {
    acc.ray = acc.ray ? std::max(*acc.ray, p.value) : p.value;
  } else {
    acc.points.push_back(p.value);
  }
}

TropPiece pair_sum(const TropPiece& x, const TropPiece& y) {
  const double tol = tolerance();
  if (x.ray && y.ray) return {true, std::max(x.value, y.value)};
  if (x.ray || y.ray) {
    const TropPiece& ray = x.ray ? x : y;
    const TropPiece& pt = x.ray ? y : x;
    if (pt.value > ray.value + tol) return pt;
    return ray;
  }
  if (log_mags_equal(x.value, y.value)) {
    if (x.value == kBottom) return {false, kBottom};
    return {true, x.value};
  }
  return {false, std::max(x.value, y.value)};
}

// Unwraps arc `a` into the window (end(b) - π, start(b) + π) of angles that are
// not antipodal to any point of `b`, returning its start there.
double unwrap_into_window(const Arc& a, const Arc& b) {
  const double window = b.start + b.length - kPi;
  double off = std::fmod(a.start - window, kTwoPi);
  if (off < 0.0) off += kTwoPi;
  if (off > kTwoPi - tolerance()) off = 0.0;
  return window + off;
}

struct Hull {
  double lo;
  double hi;
  bool lo_closed;
  bool hi_closed;
};

// Smallest interval containing both arcs; an end is attained when the arc
// providing it is closed there.
Hull hull(const Arc& a, const Arc& b) {
  const double tol = tolerance();
  const double sa = unwrap_into_window(a, b);
  const double ea = sa + a.length;
  const double sb = b.start;
  const double eb = b.start + b.length;
  Hull h{};
  if (std::fabs(sa - sb) <= tol) {
    h.lo = std::min(sa, sb);
    h.lo_closed = !a.open_lo || !b.open_lo;
  } else if (sa < sb) {
    h.lo = sa;
    h.lo_closed = !a.open_lo;
  } else {
    h.lo = sb;
    h.lo_closed = !b.open_lo;
  }
  if (std::fabs(ea - eb) <= tol) {
    h.hi = std::max(ea, eb);
    h.hi_closed = !a.open_hi || !b.open_hi;
  } else if (ea > eb) {
    h.hi = ea;
    h.hi_closed = !a.open_hi;
  } else {
    h.hi = eb;
    h.hi_closed = !b.open_hi;
  }
  return h;
}

struct ComplexPiece {
  enum Kind { Zero, Disk, Circle } kind = Zero;
  double log_radius = kBottom;
  Arc arc;
};

std::vector<ComplexPiece> pieces(const ComplexRegionSet& s) {
  std::vector<ComplexPiece> out;
  if (s.has_zero) out.push_back({ComplexPiece::Zero, kBottom, {}});
  if (s.disk) out.push_back({ComplexPiece::Disk, *s.disk, {}});
  for (const auto& layer : s.layers) {
    for (const Arc& a : layer.angles.arcs()) out.push_back({ComplexPiece::Circle, layer.log_radius, a});
  }
  return out;
}

void add(ComplexRegionSet& acc, const ComplexPiece& p) {
  switch (p.kind) {
    case ComplexPiece::Zero:
      acc.has_zero = true;
      break;
    case ComplexPiece::Disk:
      acc.disk = acc.disk ? std::max(*acc.disk, p.log_radius) : p.log_radius;
      break;
    case ComplexPiece::Circle:
      acc.layers.push_back({p.log_radius, CircleSet::from_arcs({p.arc})});
      break;
  }
}

ComplexPiece pair_sum(const ComplexPiece& x, const ComplexPiece& y) {
  const double tol = tolerance();
  if (x.kind == ComplexPiece::Zero) return y;
  if (y.kind == ComplexPiece::Zero) return x;
  if (x.kind == ComplexPiece::Disk && y.kind == ComplexPiece::Disk) {
    return x.log_radius >= y.log_radius ? x : y;
  }
  if (x.kind == ComplexPiece::Disk || y.kind == ComplexPiece::Disk) {
    const ComplexPiece& disk = x.kind == ComplexPiece::Disk ? x : y;
    const ComplexPiece& circ = x.kind == ComplexPiece::Disk ? y : x;
    return circ.log_radius <= disk.log_radius + tol ? disk : circ;
  }
  if (x.log_radius > y.log_radius + tol) return x;
  if (y.log_radius > x.log_radius + tol) return y;
  if (auto arc = same_circle_sum(x.arc, y.arc)) return {ComplexPiece::Circle, x.log_radius, *arc};
  return {ComplexPiece::Disk, x.log_radius, {}};
}

}  // namespace

TropSet tropical_sum(const TropSet& a, const TropSet& b) {
  TropSet acc;
  for (const auto& x : pieces(a)) {
    for (const auto& y : pieces(b)) add(acc, pair_sum(x, y));
  }
  return acc;
}

std::optional<Arc> same_circle_sum(const Arc& a, const Arc& b) {
  const CircleSet sa = CircleSet::from_arcs({a});
  const CircleSet sb = CircleSet::from_arcs({b});
  if (intersects(sa, sb.rotated(kPi))) return std::nullopt;
  const Hull h = hull(a, b);
  return Arc{h.lo, h.hi - h.lo, !h.lo_closed, !h.hi_closed};
}

ComplexRegionSet complex_sum(const ComplexRegionSet& a, const ComplexRegionSet& b) {
  ComplexRegionSet acc;
  for (const auto& x : pieces(a)) {
    for (const auto& y : pieces(b)) add(acc, pair_sum(x, y));
  }
  return acc;
}

namespace {

double ccw(double from, double to) {
  double d = std::fmod(to - from, kTwoPi);
  if (d < 0.0) d += kTwoPi;
  if (d > kTwoPi - tolerance()) d = 0.0;
  return d;
}

constexpr double kUnreached = 1e300;

// inf { ccw(p -> x) > 0 : p in arc }
double behind(const Arc& arc, double x) {
  const double r = ccw(arc.start, x);
  if (r <= tolerance()) return arc.length > 0.0 ? kTwoPi - arc.length : kUnreached;
  return std::max(0.0, r - arc.length);
}

// inf { ccw(x -> q) > 0 : q in arc }
double ahead(const Arc& arc, double x) {
  const double r = ccw(x, arc.start);
  if (r <= tolerance()) return arc.length > 0.0 ? 0.0 : kUnreached;
  return arc.length > kTwoPi - r + tolerance() ? 0.0 : r;
}

// x lies strictly inside the short arc from some p in `p` counter-clockwise to
// some q in `q`: that holds exactly when behind + ahead < π.
bool swept(const Arc& p, const Arc& q, double x) {
  return behind(p, x) + ahead(q, x) < kPi - tolerance();
}

}  // namespace

CircleSet phase_arc_sum(const Arc& a, const Arc& b, bool& reaches_zero) {
  // Both terms are piecewise linear in x with breaks at the arc endpoints, and
  // their sum can only cross π at end(a)+π or start(b)-π (and symmetrically),
  // so membership is constant between consecutive critical angles.
  std::vector<double> cuts;
  for (const Arc* arc : {&a, &b}) {
    cuts.push_back(arc->start);
    cuts.push_back(arc->end());
    cuts.push_back(arc->start + kPi);
    cuts.push_back(arc->end() + kPi);
  }
  for (double& c : cuts) c = canonical_angle(c);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(), [](double x, double y) { return y - x <= tolerance(); }),
             cuts.end());
  if (cuts.size() > 1 && kTwoPi - cuts.back() + cuts.front() <= tolerance()) cuts.pop_back();

  auto reached = [&](double x) { return swept(a, b, x) || swept(b, a, x); };
  std::vector<Arc> parts;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = i + 1 < cuts.size() ? cuts[i + 1] : cuts.front() + kTwoPi;
    if (reached(lo)) parts.push_back({lo, 0.0, false, false});
    if (hi - lo > tolerance() && reached(lo + 0.5 * (hi - lo))) parts.push_back({lo, hi - lo, true, true});
  }
  CircleSet acc = CircleSet::from_arcs(parts);

  // x ⊞ x = {x}; an antipodal pair reaches zero and both of its points.
  const CircleSet sa = CircleSet::from_arcs({a});
  const CircleSet sb = CircleSet::from_arcs({b});
  acc = unite(acc, intersect(sa, sb));
  const CircleSet anti = intersect(sa, sb.rotated(kPi));
  if (!anti.empty()) {
    reaches_zero = true;
    acc = unite(acc, anti);
    acc = unite(acc, anti.rotated(kPi));
  }
  return acc;
}

PhaseSet phase_sum(const PhaseSet& a, const PhaseSet& b) {
  PhaseSet acc;
  if (a.has_zero) {
    acc.angles = unite(acc.angles, b.angles);
    acc.has_zero = acc.has_zero || b.has_zero;
  }
  if (b.has_zero) {
    acc.angles = unite(acc.angles, a.angles);
    acc.has_zero = acc.has_zero || a.has_zero;
  }
  for (const Arc& x : a.angles.arcs()) {
    for (const Arc& y : b.angles.arcs()) {
      bool zero = false;
      acc.angles = unite(acc.angles, phase_arc_sum(x, y, zero));
      acc.has_zero = acc.has_zero || zero;
    }
  }
  return acc;
}

}  // namespace hyperion::regions
