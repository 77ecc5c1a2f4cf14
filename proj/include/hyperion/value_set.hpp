#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hyperion/circle_set.hpp"
#include "hyperion/element.hpp"

namespace hyperion {

enum class Family { Finite, Tropical, Complex, Phase, Rational };

std::string_view family_name(Family f);

// Explicit set of finite symbols, sorted and unique.
struct FiniteSet {
  std::vector<int> symbols;
};

// Union of tropical points and at most one down-ray {z <= ray} ∪ {-inf}.
// Points are sorted and lie strictly above the ray; -inf is listed as a point
// only when there is no ray.
struct TropSet {
  std::optional<double> ray;
  std::vector<double> points;
};

// Angles present on the origin-centred circle of radius exp(log_radius).
struct CircleLayer {
  double log_radius = 0.0;
  CircleSet angles;
};

// Origin-centred regions of the complex plane: the zero point, one closed disk
// and points/arcs on finitely many circles lying outside that disk.
struct ComplexRegionSet {
  bool has_zero = false;
  std::optional<double> disk;  // log radius
  std::vector<CircleLayer> layers;
};

// Subset of S¹ ∪ {0}.
struct PhaseSet {
  bool has_zero = false;
  CircleSet angles;
};

struct RationalSet {
  std::vector<Rational> values;
};

enum class RegionKind { Point, DownRay, Disk, Arc };

// Flat description of one primitive region, used for display and JSON.
struct Region {
  RegionKind kind = RegionKind::Point;
  Element point;          // Point
  double level = 0.0;     // DownRay top, Disk log radius, Arc log radius (complex)
  double theta_lo = 0.0;  // Arc
  double theta_hi = 0.0;  // Arc; theta_hi - theta_lo is the arc length
  bool open_lo = false;
  bool open_hi = false;
};

// Canonical, never-empty set of hyperfield elements.
class ValueSet {
 public:
  using Data = std::variant<FiniteSet, TropSet, ComplexRegionSet, PhaseSet, RationalSet>;

  static ValueSet finite(std::vector<int> symbols);
  static ValueSet tropical(TropSet set);
  static ValueSet complex(ComplexRegionSet set);
  static ValueSet phase(PhaseSet set);
  static ValueSet rational(std::vector<Rational> values);

  Family family() const;
  const Data& data() const { return data_; }

  template <typename T>
  const T& as() const {
    if (const T* p = std::get_if<T>(&data_)) return *p;
    throw_family_mismatch();
  }

  bool contains(const Element& x) const;
  std::vector<Region> regions() const;
  bool approx_equal(const ValueSet& other) const;
  bool subset_of(const ValueSet& other) const;

  friend bool operator==(const ValueSet& a, const ValueSet& b) { return a.approx_equal(b); }

 private:
  explicit ValueSet(Data d) : data_(std::move(d)) {}
  [[noreturn]] static void throw_family_mismatch();

  Data data_;
};

ValueSet set_union(const ValueSet& a, const ValueSet& b);

std::string to_string(const ValueSet& s);

}  // namespace hyperion
