#include <algorithm>
#include <cmath>
#include <complex>

#include "hyperion/catalog.hpp"
#include "hyperion/error.hpp"
#include "hyperion/homomorphism.hpp"
#include "hyperion/tolerance.hpp"

namespace hyperion {

namespace {

ValueSet collect(const Hyperfield& h, const std::vector<Element>& xs) {
  ValueSet out = h.singleton(xs.at(0));
  for (std::size_t i = 1; i < xs.size(); ++i) out = set_union(out, h.singleton(xs[i]));
  return out;
}

// Image of a set whose members are all enumerated by `representatives`.
std::function<ValueSet(const ValueSet&)> pointwise_image(const Hyperfield& codomain,
                                                         std::function<Element(const Element&)> map) {
  return [&codomain, map](const ValueSet& s) {
    std::vector<Element> out;
    for (const auto& x : representatives(s)) out.push_back(map(x));
    return collect(codomain, out);
  };
}

Homomorphism to_krasner(const Hyperfield& h) {
  Homomorphism f;
  f.name = "toK:" + std::string(h.name());
  f.domain = &h;
  f.codomain = &krasner();
  f.map = [&h](const Element& x) -> Element { return FiniteSym{h.is_zero(x) ? 0 : 1}; };
  f.canonical_lift = [&h](const Element& y) -> Element {
    return std::get<FiniteSym>(y).value == 0 ? h.zero() : h.one();
  };
  f.fiber_description = "0 -> {0}; 1 -> every nonzero element of " + std::string(h.name());
  f.fiber_sampler = [&h](const Element& y, Rng& rng) -> Element {
    return std::get<FiniteSym>(y).value == 0 ? h.zero() : random_nonzero(h, rng);
  };
  switch (h.family()) {
    case Family::Tropical:
      f.image = [](const ValueSet& s) {
        const auto& t = s.as<TropSet>();
        std::vector<int> out;
        if (t.ray) out = {0, 1};
        for (double p : t.points) out.push_back(p == kBottom ? 0 : 1);
        return ValueSet::finite(std::move(out));
      };
      break;
    case Family::Complex:
      f.image = [](const ValueSet& s) {
        const auto& c = s.as<ComplexRegionSet>();
        std::vector<int> out;
        if (c.has_zero || c.disk) out.push_back(0);
        if (!c.layers.empty() || c.disk) out.push_back(1);
        return ValueSet::finite(std::move(out));
      };
      break;
    case Family::Phase:
      f.image = [](const ValueSet& s) {
        const auto& p = s.as<PhaseSet>();
        std::vector<int> out;
        if (p.has_zero) out.push_back(0);
        if (!p.angles.empty()) out.push_back(1);
        return ValueSet::finite(std::move(out));
      };
      break;
    default:
      f.image = pointwise_image(krasner(), f.map);
  }
  return f;
}

Homomorphism identity(const Hyperfield& h) {
  Homomorphism f;
  f.name = "id:" + std::string(h.name());
  f.domain = &h;
  f.codomain = &h;
  f.map = [](const Element& x) { return x; };
  f.canonical_lift = [](const Element& y) { return y; };
  f.fiber_description = "x -> {x}";
  f.fiber_sampler = [](const Element& y, Rng&) { return y; };
  f.image = [](const ValueSet& s) { return s; };
  return f;
}

Homomorphism sign_map() {
  Homomorphism f;
  f.name = "sgn";
  f.domain = &rationals();
  f.codomain = &signs();
  f.map = [](const Element& x) -> Element {
    const Rational& q = std::get<ExactRational>(x).value;
    return FiniteSym{q > 0 ? 1 : (q < 0 ? -1 : 0)};
  };
  f.canonical_lift = [](const Element& y) -> Element { return ExactRational{Rational(std::get<FiniteSym>(y).value)}; };
  f.fiber_description = "s -> rationals of sign s";
  f.fiber_sampler = [](const Element& y, Rng& rng) -> Element {
    std::uniform_int_distribution<int> d(1, 9);
    return ExactRational{Rational(std::get<FiniteSym>(y).value) * Rational(d(rng), d(rng))};
  };
  f.image = pointwise_image(signs(), f.map);
  return f;
}

Homomorphism phase_map() {
  Homomorphism f;
  f.name = "ph";
  f.domain = &tropical_complex();
  f.codomain = &phase();
  f.map = [](const Element& x) -> Element {
    const auto& z = std::get<PolarComplex>(x);
    return z.is_zero() ? Phase::origin() : Phase::unit(z.angle);
  };
  f.canonical_lift = [](const Element& y) -> Element {
    const auto& p = std::get<Phase>(y);
    return p.zero ? PolarComplex::zero() : PolarComplex::polar(0.0, p.angle);
  };
  f.fiber_description = "0 -> {0}; e^(i t) -> the open ray of angle t";
  f.fiber_sampler = [](const Element& y, Rng& rng) -> Element {
    const auto& p = std::get<Phase>(y);
    if (p.zero) return PolarComplex::zero();
    return PolarComplex::polar(std::uniform_real_distribution<double>(-3.0, 3.0)(rng), p.angle);
  };
  f.image = [](const ValueSet& s) {
    const auto& c = s.as<ComplexRegionSet>();
    PhaseSet out;
    out.has_zero = c.has_zero || c.disk.has_value();
    if (c.disk) out.angles = CircleSet::full();
    for (const auto& layer : c.layers) out.angles = unite(out.angles, layer.angles);
    return ValueSet::phase(std::move(out));
  };
  f.domain_sum = [](const Element& x, const Element& y) {
    auto a = std::get<PolarComplex>(x).to_complex();
    auto b = std::get<PolarComplex>(y).to_complex();
    auto s = a + b;
    double scale = std::max(std::abs(a), std::abs(b));
    if (std::abs(s) <= tolerance() * scale) return tropical_complex().singleton(PolarComplex::zero());
    return tropical_complex().singleton(PolarComplex::from_cartesian(s.real(), s.imag()));
  };
  return f;
}

Homomorphism eta_map() {
  Homomorphism f;
  f.name = "eta";
  f.domain = &tropical_complex();
  f.codomain = &tropical();
  f.map = [](const Element& x) -> Element { return TropNum{std::get<PolarComplex>(x).log_mag}; };
  f.canonical_lift = [](const Element& y) -> Element {
    double a = std::get<TropNum>(y).value;
    return a == kBottom ? PolarComplex::zero() : PolarComplex::polar(a, 0.0);
  };
  f.fiber_description = "-inf -> {0}; a -> the circle |z| = e^a";
  f.fiber_sampler = [](const Element& y, Rng& rng) -> Element {
    double a = std::get<TropNum>(y).value;
    if (a == kBottom) return PolarComplex::zero();
    return PolarComplex::polar(a, std::uniform_real_distribution<double>(0.0, kTwoPi)(rng));
  };
  f.image = [](const ValueSet& s) {
    const auto& c = s.as<ComplexRegionSet>();
    TropSet out;
    if (c.disk) out.ray = *c.disk;
    if (c.has_zero) out.points.push_back(kBottom);
    for (const auto& layer : c.layers) out.points.push_back(layer.log_radius);
    return ValueSet::tropical(std::move(out));
  };
  return f;
}

}  // namespace

const std::vector<Homomorphism>& hom_catalog() {
  static const std::vector<Homomorphism> homs = [] {
    std::vector<Homomorphism> out;
    for (const Hyperfield* h : catalog()) out.push_back(to_krasner(*h));
    out.push_back(sign_map());
    out.push_back(phase_map());
    out.push_back(eta_map());
    for (const Hyperfield* h : catalog()) out.push_back(identity(*h));
    return out;
  }();
  return homs;
}

const Homomorphism& lookup_hom(const std::string& name) {
  for (const auto& f : hom_catalog()) {
    if (f.name == name) return f;
  }
  throw UnknownName("unknown homomorphism '" + name + "'");
}

}  // namespace hyperion
