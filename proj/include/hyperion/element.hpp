#pragma once

#include <complex>
#include <limits>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperion {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr double kBottom = -std::numeric_limits<double>::infinity();

// Symbol of a finite hyperfield: {0,1} for the Krasner hyperfield, {-1,0,1} for signs.
struct FiniteSym {
  int value = 0;
  friend bool operator==(const FiniteSym&, const FiniteSym&) = default;
};

// Tropical number; -inf is the additive neutral element.
struct TropNum {
  double value = kBottom;
  bool is_bottom() const { return value == kBottom; }
};

// Complex number in polar form with the magnitude stored as its natural log.
// log_mag == -inf is the unique zero and the stored angle is then 0.
struct PolarComplex {
  double log_mag = kBottom;
  double angle = 0.0;

  static PolarComplex zero() { return {}; }
  static PolarComplex polar(double log_mag, double angle);
  static PolarComplex from_cartesian(double re, double im);

  bool is_zero() const { return log_mag == kBottom; }
  std::complex<double> to_complex() const;
};

// Element of the phase hyperfield: zero or a point on the unit circle.
struct Phase {
  bool zero = true;
  double angle = 0.0;

  static Phase origin() { return {}; }
  static Phase unit(double angle);
};

struct ExactRational {
  Rational value;
};

using Element = std::variant<FiniteSym, TropNum, PolarComplex, Phase, ExactRational>;

// Equality under the tolerance policy; exact for symbols and rationals.
bool approx_equal(const Element& a, const Element& b);

std::string to_string(const Element& x);
std::string to_string(const Rational& q);

}  // namespace hyperion
