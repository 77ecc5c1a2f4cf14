#pragma once

#include <numbers>

namespace hyperion {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Comparison tolerance for log-magnitudes and angles. Defaults to 1e-9 and
// can be overridden once per process through HYPERION_TOL.
double tolerance();

// Maps any finite angle into [0, 2π); values within tolerance of 2π snap to 0.
double canonical_angle(double angle);

// Shortest distance between two angles on the circle, in [0, π].
double angle_distance(double a, double b);

bool angles_equal(double a, double b);

// Log-magnitudes may be -inf (the zero element); two -inf values are equal.
bool log_mags_equal(double a, double b);

}  // namespace hyperion
