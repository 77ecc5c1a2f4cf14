#include "hyperion/value_set.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "hyperion/error.hpp"
#include "hyperion/tolerance.hpp"

namespace hyperion {

namespace {

[[noreturn]] void empty_set() { throw Error("value sets are never empty"); }

void normalize(FiniteSet& s) {
  std::sort(s.symbols.begin(), s.symbols.end());
  s.symbols.erase(std::unique(s.symbols.begin(), s.symbols.end()), s.symbols.end());
  if (s.symbols.empty()) empty_set();
}

void normalize(TropSet& s) {
  const double tol = tolerance();
  if (s.ray && *s.ray == kBottom) {
    s.ray.reset();
    s.points.push_back(kBottom);
  }
  std::sort(s.points.begin(), s.points.end());
  std::vector<double> kept;
  for (double p : s.points) {
    if (s.ray && (p == kBottom || p <= *s.ray + tol)) continue;
    if (!kept.empty() && log_mags_equal(kept.back(), p)) continue;
    kept.push_back(p);
  }
  s.points = std::move(kept);
  if (!s.ray && s.points.empty()) empty_set();
}

void normalize(ComplexRegionSet& s) {
  const double tol = tolerance();
  std::sort(s.layers.begin(), s.layers.end(),
            [](const CircleLayer& a, const CircleLayer& b) { return a.log_radius < b.log_radius; });
  std::vector<CircleLayer> merged;
  for (auto& layer : s.layers) {
    if (layer.angles.empty()) continue;
    if (layer.log_radius == kBottom) {
      s.has_zero = true;
      continue;
    }
    if (s.disk && layer.log_radius <= *s.disk + tol) continue;
    if (!merged.empty() && log_mags_equal(merged.back().log_radius, layer.log_radius)) {
      merged.back().angles = unite(merged.back().angles, layer.angles);
      continue;
    }
    merged.push_back(std::move(layer));
  }
  s.layers = std::move(merged);
  if (s.disk) s.has_zero = false;
  if (!s.has_zero && !s.disk && s.layers.empty()) empty_set();
}

void normalize(PhaseSet& s) {
  if (!s.has_zero && s.angles.empty()) empty_set();
}

void normalize(RationalSet& s) {
  std::sort(s.values.begin(), s.values.end());
  s.values.erase(std::unique(s.values.begin(), s.values.end()), s.values.end());
  if (s.values.empty()) empty_set();
}

void push_circle_regions(std::vector<Region>& points, std::vector<Region>& arcs, const CircleSet& angles,
                         double log_radius, bool complex_layer) {
  for (const Arc& a : angles.arcs()) {
    if (a.is_point()) {
      Region r;
      r.kind = RegionKind::Point;
      if (complex_layer) {
        r.point = PolarComplex{log_radius, a.start};
      } else {
        r.point = Phase{false, a.start};
      }
      points.push_back(r);
    } else {
      Region r;
      r.kind = RegionKind::Arc;
      r.level = log_radius;
      r.theta_lo = a.start;
      r.theta_hi = a.is_full() ? a.start + kTwoPi : a.end();
      r.open_lo = a.open_lo;
      r.open_hi = a.open_hi;
      arcs.push_back(r);
    }
  }
}

bool regions_match(const Region& a, const Region& b) {
  if (a.kind != b.kind || a.open_lo != b.open_lo || a.open_hi != b.open_hi) return false;
  switch (a.kind) {
    case RegionKind::Point:
      return approx_equal(a.point, b.point);
    case RegionKind::DownRay:
    case RegionKind::Disk:
      return log_mags_equal(a.level, b.level);
    case RegionKind::Arc:
      return log_mags_equal(a.level, b.level) && angles_equal(a.theta_lo, b.theta_lo) &&
             std::fabs((a.theta_hi - a.theta_lo) - (b.theta_hi - b.theta_lo)) <= tolerance();
  }
  return false;
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Finite: return "finite";
    case Family::Tropical: return "tropical";
    case Family::Complex: return "complex";
    case Family::Phase: return "phase";
    case Family::Rational: return "rational";
  }
  return "?";
}

ValueSet ValueSet::finite(std::vector<int> symbols) {
  FiniteSet s{std::move(symbols)};
  normalize(s);
  return ValueSet(std::move(s));
}

ValueSet ValueSet::tropical(TropSet set) {
  normalize(set);
  return ValueSet(std::move(set));
}

ValueSet ValueSet::complex(ComplexRegionSet set) {
  normalize(set);
  return ValueSet(std::move(set));
}

ValueSet ValueSet::phase(PhaseSet set) {
  normalize(set);
  return ValueSet(std::move(set));
}

ValueSet ValueSet::rational(std::vector<Rational> values) {
  RationalSet s{std::move(values)};
  normalize(s);
  return ValueSet(std::move(s));
}

void ValueSet::throw_family_mismatch() { throw FamilyMismatch("value set belongs to a different family"); }

Family ValueSet::family() const { return static_cast<Family>(data_.index()); }

bool ValueSet::contains(const Element& x) const {
  const double tol = tolerance();
  switch (family()) {
    case Family::Finite: {
      const auto* v = std::get_if<FiniteSym>(&x);
      if (!v) throw FamilyMismatch("expected a finite symbol");
      const auto& syms = as<FiniteSet>().symbols;
      return std::binary_search(syms.begin(), syms.end(), v->value);
    }
    case Family::Tropical: {
      const auto* v = std::get_if<TropNum>(&x);
      if (!v) throw FamilyMismatch("expected a tropical number");
      const auto& s = as<TropSet>();
      if (s.ray && (v->is_bottom() || v->value <= *s.ray + tol)) return true;
      return std::any_of(s.points.begin(), s.points.end(),
                         [&](double p) { return log_mags_equal(p, v->value); });
    }
    case Family::Complex: {
      const auto* v = std::get_if<PolarComplex>(&x);
      if (!v) throw FamilyMismatch("expected a complex element");
      const auto& s = as<ComplexRegionSet>();
      if (v->is_zero()) return s.has_zero || s.disk.has_value();
      if (s.disk && v->log_mag <= *s.disk + tol) return true;
      for (const auto& layer : s.layers) {
        if (log_mags_equal(layer.log_radius, v->log_mag)) return layer.angles.contains(v->angle);
      }
      return false;
    }
    case Family::Phase: {
      const auto* v = std::get_if<Phase>(&x);
      if (!v) throw FamilyMismatch("expected a phase element");
      const auto& s = as<PhaseSet>();
      if (v->zero) return s.has_zero;
      return s.angles.contains(v->angle);
    }
    case Family::Rational: {
      const auto* v = std::get_if<ExactRational>(&x);
      if (!v) throw FamilyMismatch("expected a rational");
      const auto& vals = as<RationalSet>().values;
      return std::binary_search(vals.begin(), vals.end(), v->value);
    }
  }
  return false;
}

std::vector<Region> ValueSet::regions() const {
  std::vector<Region> points;
  std::vector<Region> arcs;
  std::vector<Region> blobs;
  auto point = [&](Element e) {
    Region r;
    r.kind = RegionKind::Point;
    r.point = std::move(e);
    points.push_back(std::move(r));
  };
  switch (family()) {
    case Family::Finite:
      for (int v : as<FiniteSet>().symbols) point(FiniteSym{v});
      break;
    case Family::Tropical: {
      const auto& s = as<TropSet>();
      for (double p : s.points) point(TropNum{p});
      if (s.ray) {
        Region r;
        r.kind = RegionKind::DownRay;
        r.level = *s.ray;
        blobs.push_back(r);
      }
      break;
    }
    case Family::Complex: {
      const auto& s = as<ComplexRegionSet>();
      if (s.has_zero) point(PolarComplex::zero());
      for (const auto& layer : s.layers) push_circle_regions(points, arcs, layer.angles, layer.log_radius, true);
      if (s.disk) {
        Region r;
        r.kind = RegionKind::Disk;
        r.level = *s.disk;
        blobs.push_back(r);
      }
      break;
    }
    case Family::Phase: {
      const auto& s = as<PhaseSet>();
      if (s.has_zero) point(Phase::origin());
      push_circle_regions(points, arcs, s.angles, 0.0, false);
      break;
    }
    case Family::Rational:
      for (const auto& q : as<RationalSet>().values) point(ExactRational{q});
      break;
  }
  auto point_key = [](const Region& r) {
    return std::visit(
        [](const auto& v) -> std::tuple<double, double> {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, PolarComplex>) return {v.log_mag, v.angle};
          if constexpr (std::is_same_v<T, Phase>) return {v.zero ? -1.0 : 0.0, v.angle};
          return {0.0, 0.0};
        },
        r.point);
  };
  if (family() == Family::Complex || family() == Family::Phase) {
    std::stable_sort(points.begin(), points.end(),
                     [&](const Region& a, const Region& b) { return point_key(a) < point_key(b); });
    std::stable_sort(arcs.begin(), arcs.end(), [](const Region& a, const Region& b) {
      return std::tie(a.level, a.theta_lo) < std::tie(b.level, b.theta_lo);
    });
  }
  points.insert(points.end(), arcs.begin(), arcs.end());
  points.insert(points.end(), blobs.begin(), blobs.end());
  return points;
}

bool ValueSet::approx_equal(const ValueSet& other) const {
  if (family() != other.family()) return false;
  auto a = regions();
  auto b = other.regions();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!regions_match(a[i], b[i])) return false;
  }
  return true;
}

bool ValueSet::subset_of(const ValueSet& other) const { return set_union(*this, other) == other; }

ValueSet set_union(const ValueSet& a, const ValueSet& b) {
  if (a.family() != b.family()) throw FamilyMismatch("union of value sets from different families");
  switch (a.family()) {
    case Family::Finite: {
      auto syms = a.as<FiniteSet>().symbols;
      const auto& more = b.as<FiniteSet>().symbols;
      syms.insert(syms.end(), more.begin(), more.end());
      return ValueSet::finite(std::move(syms));
    }
    case Family::Tropical: {
      TropSet s = a.as<TropSet>();
      const auto& t = b.as<TropSet>();
      if (t.ray) s.ray = s.ray ? std::max(*s.ray, *t.ray) : *t.ray;
      s.points.insert(s.points.end(), t.points.begin(), t.points.end());
      return ValueSet::tropical(std::move(s));
    }
    case Family::Complex: {
      ComplexRegionSet s = a.as<ComplexRegionSet>();
      const auto& t = b.as<ComplexRegionSet>();
      s.has_zero = s.has_zero || t.has_zero;
      if (t.disk) s.disk = s.disk ? std::max(*s.disk, *t.disk) : *t.disk;
      s.layers.insert(s.layers.end(), t.layers.begin(), t.layers.end());
      return ValueSet::complex(std::move(s));
    }
    case Family::Phase: {
      PhaseSet s = a.as<PhaseSet>();
      const auto& t = b.as<PhaseSet>();
      s.has_zero = s.has_zero || t.has_zero;
      s.angles = unite(s.angles, t.angles);
      return ValueSet::phase(std::move(s));
    }
    case Family::Rational: {
      auto vals = a.as<RationalSet>().values;
      const auto& more = b.as<RationalSet>().values;
      vals.insert(vals.end(), more.begin(), more.end());
      return ValueSet::rational(std::move(vals));
    }
  }
  throw FamilyMismatch("unknown family");
}

std::string to_string(const ValueSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const Region& r : s.regions()) {
    if (!first) os << ", ";
    first = false;
    switch (r.kind) {
      case RegionKind::Point:
        os << to_string(r.point);
        break;
      case RegionKind::DownRay:
        os << "ray(<=" << r.level << ")";
        break;
      case RegionKind::Disk:
        os << "disk(log r=" << r.level << ")";
        break;
      case RegionKind::Arc:
        if (s.family() == Family::Complex) os << "log r=" << r.level << ' ';
        os << (r.open_lo ? '(' : '[') << r.theta_lo << ", " << r.theta_hi << (r.open_hi ? ')' : ']');
        break;
    }
  }
  os << '}';
  return os.str();
}

}  // namespace hyperion
