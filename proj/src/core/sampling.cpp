#include "hyperion/sampling.hpp"

#include <cmath>

#include "hyperion/tolerance.hpp"

namespace hyperion {

namespace {

double unit(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double random_angle(Rng& rng) {
  if (unit(rng) < 0.5) return pick(rng, 0, 7) * kPi / 4.0;
  return unit(rng) * kTwoPi;
}

double random_log_mag(Rng& rng) {
  if (unit(rng) < 0.6) return static_cast<double>(pick(rng, -1, 1));
  return -2.0 + 4.0 * unit(rng);
}

void circle_members(const CircleSet& angles, std::vector<double>& out) {
  for (const Arc& a : angles.arcs()) {
    if (a.is_point()) {
      out.push_back(a.start);
      continue;
    }
    if (!a.open_lo) out.push_back(a.start);
    if (!a.open_hi) out.push_back(a.end());
    out.push_back(a.start + 0.5 * a.length);
    out.push_back(a.start + 1e-3 * a.length);
    out.push_back(a.end() - 1e-3 * a.length);
  }
}

}  // namespace

Element random_element(const Hyperfield& h, Rng& rng) {
  if (auto elems = h.elements()) return (*elems)[pick(rng, 0, static_cast<int>(elems->size()) - 1)];
  switch (h.carrier()) {
    case CarrierKind::TropNum: {
      double u = unit(rng);
      if (u < 0.15) return TropNum{kBottom};
      if (u < 0.65) return TropNum{0.5 * pick(rng, -6, 6)};
      return TropNum{-5.0 + 10.0 * unit(rng)};
    }
    case CarrierKind::PolarComplex:
      if (unit(rng) < 0.1) return PolarComplex::zero();
      return PolarComplex::polar(random_log_mag(rng), random_angle(rng));
    case CarrierKind::Phase:
      if (unit(rng) < 0.1) return Phase::origin();
      return Phase::unit(random_angle(rng));
    case CarrierKind::ExactRational:
      if (unit(rng) < 0.1) return ExactRational{0};
      return ExactRational{Rational(pick(rng, -9, 9), pick(rng, 1, 5))};
    case CarrierKind::FiniteSym:
      break;
  }
  return h.zero();
}

Element random_nonzero(const Hyperfield& h, Rng& rng) {
  for (;;) {
    Element x = random_element(h, rng);
    if (!h.is_zero(x)) return x;
  }
}

std::vector<Element> representatives(const ValueSet& set) {
  std::vector<Element> out;
  switch (set.family()) {
    case Family::Finite:
      for (int v : set.as<FiniteSet>().symbols) out.push_back(FiniteSym{v});
      break;
    case Family::Rational:
      for (const auto& q : set.as<RationalSet>().values) out.push_back(ExactRational{q});
      break;
    case Family::Tropical: {
      const auto& s = set.as<TropSet>();
      for (double p : s.points) out.push_back(TropNum{p});
      if (s.ray) {
        for (double d : {0.0, 0.25, 1.0, 7.5}) out.push_back(TropNum{*s.ray - d});
        out.push_back(TropNum{kBottom});
      }
      break;
    }
    case Family::Complex: {
      const auto& s = set.as<ComplexRegionSet>();
      if (s.has_zero) out.push_back(PolarComplex::zero());
      for (const auto& layer : s.layers) {
        std::vector<double> angles;
        circle_members(layer.angles, angles);
        for (double a : angles) out.push_back(PolarComplex::polar(layer.log_radius, a));
      }
      if (s.disk) {
        out.push_back(PolarComplex::zero());
        for (int k = 0; k < 8; ++k) {
          double a = k * kPi / 4.0 + 0.1;
          out.push_back(PolarComplex::polar(*s.disk, a));
          out.push_back(PolarComplex::polar(*s.disk - 0.5 - 0.25 * k, a + 0.05));
        }
      }
      break;
    }
    case Family::Phase: {
      const auto& s = set.as<PhaseSet>();
      if (s.has_zero) out.push_back(Phase::origin());
      std::vector<double> angles;
      circle_members(s.angles, angles);
      for (double a : angles) out.push_back(Phase::unit(a));
      break;
    }
  }
  return out;
}

}  // namespace hyperion
