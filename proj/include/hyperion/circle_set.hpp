#pragma once

#include <string>
#include <vector>

namespace hyperion {

// Arc on a circle, traversed counter-clockwise from `start` for `length` radians.
// length == 0 is a single (closed) point; length == 2π with both ends closed is
// the full circle, and with both ends open it is the circle minus `start`.
struct Arc {
  double start = 0.0;
  double length = 0.0;
  bool open_lo = false;
  bool open_hi = false;

  double end() const { return start + length; }
  bool is_point() const { return length == 0.0; }
  bool is_full() const;
};

// Finite union of arcs on a circle, kept in canonical form: disjoint, maximal
// (abutting pieces with compatible openness merged) and sorted by start angle.
// Endpoint comparisons follow the global angle tolerance.
class CircleSet {
 public:
  CircleSet() = default;

  static CircleSet full();
  static CircleSet point(double angle);
  static CircleSet arc(double start, double length, bool open_lo = false, bool open_hi = false);
  // Counter-clockwise from `from` to `to`.
  static CircleSet between(double from, double to, bool open_lo = false, bool open_hi = false);
  static CircleSet from_arcs(const std::vector<Arc>& arcs);

  bool empty() const { return arcs_.empty(); }
  bool is_full() const;
  bool contains(double angle) const;
  const std::vector<Arc>& arcs() const { return arcs_; }

  CircleSet rotated(double delta) const;
  // Same set with every endpoint removed; isolated points vanish.
  CircleSet interior() const;

  bool approx_equal(const CircleSet& other) const;

  friend CircleSet unite(const CircleSet& a, const CircleSet& b);
  friend CircleSet intersect(const CircleSet& a, const CircleSet& b);
  friend CircleSet subtract(const CircleSet& a, const CircleSet& b);

 private:
  std::vector<Arc> arcs_;
};

bool intersects(const CircleSet& a, const CircleSet& b);

std::string to_string(const CircleSet& s);

}  // namespace hyperion
