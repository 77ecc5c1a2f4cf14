#include "hyperion/tolerance.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace hyperion {

double tolerance() {
  static const double tol = [] {
    if (const char* env = std::getenv("HYPERION_TOL")) {
      try {
        double v = std::stod(env);
        if (std::isfinite(v) && v > 0.0) return v;
      } catch (const std::exception&) {
      }
    }
    return 1e-9;
  }();
  return tol;
}

double canonical_angle(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi - tolerance()) a = 0.0;
  return a;
}

double angle_distance(double a, double b) {
  double d = std::fmod(std::fabs(a - b), kTwoPi);
  return d > kPi ? kTwoPi - d : d;
}

bool angles_equal(double a, double b) { return angle_distance(a, b) <= tolerance(); }

bool log_mags_equal(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::fabs(a - b) <= tolerance();
}

}  // namespace hyperion
