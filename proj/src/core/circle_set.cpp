#include "hyperion/circle_set.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "hyperion/tolerance.hpp"

namespace hyperion {

namespace {

using Bits = std::vector<char>;

Arc full_arc() { return {0.0, kTwoPi, false, false}; }

double ccw_gap(double from, double to) {
  double d = std::fmod(to - from, kTwoPi);
  if (d < 0.0) d += kTwoPi;
  return d;
}

std::optional<Arc> make_arc(double start, double length, bool open_lo, bool open_hi) {
  const double tol = tolerance();
  if (!(length > tol)) {
    if (open_lo || open_hi) return std::nullopt;
    return Arc{canonical_angle(start), 0.0, false, false};
  }
  if (length >= kTwoPi - tol) {
    if (open_lo && open_hi) return Arc{canonical_angle(start), kTwoPi, true, true};
    return full_arc();
  }
  return Arc{canonical_angle(start), length, open_lo, open_hi};
}

// Sorted cluster representatives of every endpoint; two endpoints closer than
// the tolerance share a representative, including across the 0/2π seam.
std::vector<double> breakpoints(const std::vector<Arc>& a, const std::vector<Arc>& b) {
  std::vector<double> raw;
  for (const auto* set : {&a, &b}) {
    for (const Arc& arc : *set) {
      if (arc.is_full()) continue;
      raw.push_back(canonical_angle(arc.start));
      raw.push_back(canonical_angle(arc.end()));
    }
  }
  std::sort(raw.begin(), raw.end());
  const double tol = tolerance();
  std::vector<double> reps;
  double last = 0.0;
  for (double v : raw) {
    if (!reps.empty() && v - last <= tol) {
      last = v;
      continue;
    }
    reps.push_back(v);
    last = v;
  }
  if (reps.size() > 1 && reps.front() + kTwoPi - raw.back() <= tol) reps.pop_back();
  return reps;
}

std::size_t nearest(const std::vector<double>& reps, double angle) {
  std::size_t best = 0;
  double best_d = angle_distance(reps[0], angle);
  for (std::size_t i = 1; i < reps.size(); ++i) {
    double d = angle_distance(reps[i], angle);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

// Membership of each cyclic element P0 G0 P1 G1 ... (points and open gaps).
Bits coverage(const std::vector<Arc>& arcs, const std::vector<double>& reps) {
  const long n = static_cast<long>(reps.size());
  const long m = 2 * n;
  Bits bits(static_cast<std::size_t>(m), 0);
  for (const Arc& arc : arcs) {
    if (arc.is_full()) {
      std::fill(bits.begin(), bits.end(), 1);
      continue;
    }
    long first = 2 * static_cast<long>(nearest(reps, arc.start));
    long last = 2 * static_cast<long>(nearest(reps, arc.end()));
    if (last < first || (last == first && arc.length > kPi)) last += m;
    if (arc.open_lo) ++first;
    if (arc.open_hi) --last;
    for (long k = first; k <= last; ++k) bits[static_cast<std::size_t>(k % m)] = 1;
  }
  return bits;
}

std::vector<Arc> rebuild(const Bits& bits, const std::vector<double>& reps) {
  const std::size_t m = bits.size();
  const std::size_t n = reps.size();
  std::size_t ones = static_cast<std::size_t>(std::count(bits.begin(), bits.end(), 1));
  if (ones == 0) return {};
  if (ones == m) return {full_arc()};
  std::size_t z = 0;
  while (bits[z]) ++z;

  std::vector<Arc> out;
  std::size_t k = 1;
  while (k <= m) {
    if (!bits[(z + k) % m]) {
      ++k;
      continue;
    }
    std::size_t u = z + k;
    while (k <= m && bits[(z + k) % m]) ++k;
    std::size_t v = z + k - 1;
    std::size_t lo = u / 2;
    std::size_t hi = (v + 1) / 2;
    std::size_t span = hi - lo;
    double start = reps[lo % n];
    double length = span == 0 ? 0.0 : span >= n ? kTwoPi : ccw_gap(start, reps[hi % n]);
    out.push_back({start, length, u % 2 == 1, v % 2 == 1});
  }
  std::sort(out.begin(), out.end(), [](const Arc& x, const Arc& y) { return x.start < y.start; });
  return out;
}

template <typename Op>
std::vector<Arc> combine(const std::vector<Arc>& a, const std::vector<Arc>& b, Op op) {
  auto reps = breakpoints(a, b);
  if (reps.empty()) {
    bool in_a = !a.empty();
    bool in_b = !b.empty();
    return op(in_a, in_b) ? std::vector<Arc>{full_arc()} : std::vector<Arc>{};
  }
  Bits ba = coverage(a, reps);
  Bits bb = coverage(b, reps);
  Bits r(ba.size());
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = op(ba[k] != 0, bb[k] != 0) ? 1 : 0;
  return rebuild(r, reps);
}

}  // namespace

bool Arc::is_full() const { return length >= kTwoPi && !open_lo && !open_hi; }

CircleSet CircleSet::full() {
  CircleSet s;
  s.arcs_ = {full_arc()};
  return s;
}

CircleSet CircleSet::point(double angle) { return arc(angle, 0.0); }

CircleSet CircleSet::arc(double start, double length, bool open_lo, bool open_hi) {
  return from_arcs({Arc{start, length, open_lo, open_hi}});
}

CircleSet CircleSet::between(double from, double to, bool open_lo, bool open_hi) {
  return arc(from, ccw_gap(from, to), open_lo, open_hi);
}

CircleSet CircleSet::from_arcs(const std::vector<Arc>& arcs) {
  std::vector<Arc> raw;
  for (const Arc& a : arcs) {
    if (auto made = make_arc(a.start, a.length, a.open_lo, a.open_hi)) raw.push_back(*made);
  }
  CircleSet s;
  s.arcs_ = combine(raw, {}, [](bool x, bool) { return x; });
  return s;
}

bool CircleSet::is_full() const { return arcs_.size() == 1 && arcs_[0].is_full(); }

bool CircleSet::contains(double angle) const {
  for (const Arc& arc : arcs_) {
    if (arc.is_full()) return true;
    if (arc.is_point()) {
      if (angles_equal(angle, arc.start)) return true;
      continue;
    }
    bool near_lo = angles_equal(angle, arc.start);
    bool near_hi = angles_equal(angle, arc.end());
    if (near_lo || near_hi) {
      if ((near_lo && !arc.open_lo) || (near_hi && !arc.open_hi)) return true;
      continue;
    }
    if (ccw_gap(arc.start, angle) < arc.length) return true;
  }
  return false;
}

CircleSet CircleSet::rotated(double delta) const {
  std::vector<Arc> moved = arcs_;
  for (Arc& a : moved) {
    if (!a.is_full()) a.start += delta;
  }
  return from_arcs(moved);
}

CircleSet CircleSet::interior() const {
  std::vector<Arc> open;
  for (const Arc& a : arcs_) {
    if (a.is_full()) return full();
    if (a.is_point()) continue;
    open.push_back({a.start, a.length, true, true});
  }
  return from_arcs(open);
}

bool CircleSet::approx_equal(const CircleSet& other) const {
  if (arcs_.size() != other.arcs_.size()) return false;
  const double tol = tolerance();
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& x = arcs_[i];
    const Arc& y = other.arcs_[i];
    if (x.is_full() || y.is_full()) {
      if (x.is_full() != y.is_full()) return false;
      continue;
    }
    if (x.open_lo != y.open_lo || x.open_hi != y.open_hi) return false;
    if (std::fabs(x.length - y.length) > tol) return false;
    if (!angles_equal(x.start, y.start)) return false;
  }
  return true;
}

CircleSet unite(const CircleSet& a, const CircleSet& b) {
  CircleSet s;
  s.arcs_ = combine(a.arcs_, b.arcs_, [](bool x, bool y) { return x || y; });
  return s;
}

CircleSet intersect(const CircleSet& a, const CircleSet& b) {
  CircleSet s;
  s.arcs_ = combine(a.arcs_, b.arcs_, [](bool x, bool y) { return x && y; });
  return s;
}

CircleSet subtract(const CircleSet& a, const CircleSet& b) {
  CircleSet s;
  s.arcs_ = combine(a.arcs_, b.arcs_, [](bool x, bool y) { return x && !y; });
  return s;
}

bool intersects(const CircleSet& a, const CircleSet& b) { return !intersect(a, b).empty(); }

std::string to_string(const CircleSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const Arc& a : s.arcs()) {
    if (!first) os << ", ";
    first = false;
    if (a.is_full()) {
      os << "S1";
    } else if (a.is_point()) {
      os << a.start;
    } else {
      os << (a.open_lo ? '(' : '[') << a.start << ", " << a.end() << (a.open_hi ? ')' : ']');
    }
  }
  os << '}';
  return os.str();
}

}  // namespace hyperion
