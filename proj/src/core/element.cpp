#include "hyperion/element.hpp"

#include <cmath>
#include <sstream>

#include "hyperion/tolerance.hpp"

namespace hyperion {

PolarComplex PolarComplex::polar(double log_mag, double angle) {
  if (log_mag == kBottom) return zero();
  return {log_mag, canonical_angle(angle)};
}

PolarComplex PolarComplex::from_cartesian(double re, double im) {
  if (re == 0.0 && im == 0.0) return zero();
  return polar(std::log(std::hypot(re, im)), std::atan2(im, re));
}

std::complex<double> PolarComplex::to_complex() const {
  if (is_zero()) return {0.0, 0.0};
  return std::polar(std::exp(log_mag), angle);
}

Phase Phase::unit(double angle) { return {false, canonical_angle(angle)}; }

bool approx_equal(const Element& a, const Element& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, FiniteSym>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, TropNum>) {
          return log_mags_equal(x.value, y.value);
        } else if constexpr (std::is_same_v<T, PolarComplex>) {
          if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
          return log_mags_equal(x.log_mag, y.log_mag) && angles_equal(x.angle, y.angle);
        } else if constexpr (std::is_same_v<T, Phase>) {
          if (x.zero || y.zero) return x.zero && y.zero;
          return angles_equal(x.angle, y.angle);
        } else {
          return x.value == y.value;
        }
      },
      a);
}

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << '/' << denominator(q);
  return os.str();
}

namespace {
std::string fmt_double(double v) {
  if (v == kBottom) return "-inf";
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}
}  // namespace

std::string to_string(const Element& x) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FiniteSym>) {
          return std::to_string(v.value);
        } else if constexpr (std::is_same_v<T, TropNum>) {
          return fmt_double(v.value);
        } else if constexpr (std::is_same_v<T, PolarComplex>) {
          if (v.is_zero()) return "0";
          return "(" + fmt_double(v.log_mag) + " @ " + fmt_double(v.angle) + ")";
        } else if constexpr (std::is_same_v<T, Phase>) {
          if (v.zero) return "0";
          return "@" + fmt_double(v.angle);
        } else {
          return to_string(v.value);
        }
      },
      x);
}

}  // namespace hyperion
