#include <algorithm>
#include <cmath>
#include <string>

#include "hyperion/catalog.hpp"
#include "hyperion/error.hpp"
#include "hyperion/region_algebra.hpp"
#include "hyperion/tolerance.hpp"

namespace hyperion {

namespace {

template <typename T>
const T& expect(const Element& x, std::string_view field) {
  if (const T* p = std::get_if<T>(&x)) return *p;
  throw CarrierMismatch("element " + to_string(x) + " is not in the carrier of " + std::string(field));
}

// Shared shape of the two finite hyperfields: a table-driven pairwise sum and
// set sums obtained by exhaustive union.
class FiniteHyperfield : public Hyperfield {
 public:
  CarrierKind carrier() const override { return CarrierKind::FiniteSym; }
  Family family() const override { return Family::Finite; }
  EqualityPolicy equality_policy() const override { return EqualityPolicy::Exact; }
  Element zero() const override { return FiniteSym{0}; }
  Element one() const override { return FiniteSym{1}; }

  void check_member(const Element& x) const override {
    int v = expect<FiniteSym>(x, name()).value;
    if (!valid(v)) throw CarrierMismatch(std::to_string(v) + " is not a symbol of " + std::string(name()));
  }

  Element mul(const Element& x, const Element& y) const override {
    check_member(x);
    check_member(y);
    return FiniteSym{std::get<FiniteSym>(x).value * std::get<FiniteSym>(y).value};
  }

  Element inverse(const Element& x) const override {
    check_member(x);
    if (std::get<FiniteSym>(x).value == 0) throw DivisionByZero("inverse of zero");
    return x;
  }

  ValueSet hyperadd(const Element& x, const Element& y) const override {
    check_member(x);
    check_member(y);
    return ValueSet::finite(pair_sum(std::get<FiniteSym>(x).value, std::get<FiniteSym>(y).value));
  }

  ValueSet set_hyperadd(const ValueSet& a, const ValueSet& b) const override {
    std::vector<int> out;
    for (int x : a.as<FiniteSet>().symbols) {
      for (int y : b.as<FiniteSet>().symbols) {
        auto s = pair_sum(x, y);
        out.insert(out.end(), s.begin(), s.end());
      }
    }
    return ValueSet::finite(std::move(out));
  }

  ValueSet scale(const ValueSet& set, const Element& c) const override {
    check_member(c);
    std::vector<int> out;
    for (int x : set.as<FiniteSet>().symbols) out.push_back(x * std::get<FiniteSym>(c).value);
    return ValueSet::finite(std::move(out));
  }

  ValueSet singleton(const Element& x) const override {
    check_member(x);
    return ValueSet::finite({std::get<FiniteSym>(x).value});
  }

 protected:
  virtual bool valid(int v) const = 0;
  virtual std::vector<int> pair_sum(int x, int y) const = 0;
};

class Krasner final : public FiniteHyperfield {
 public:
  std::string_view name() const override { return "K"; }
  Element neg(const Element& x) const override {
    check_member(x);
    return x;
  }
  std::optional<std::vector<Element>> elements() const override {
    return std::vector<Element>{FiniteSym{0}, FiniteSym{1}};
  }

 protected:
  bool valid(int v) const override { return v == 0 || v == 1; }
  std::vector<int> pair_sum(int x, int y) const override {
    if (x == 0) return {y};
    if (y == 0) return {x};
    return {0, 1};
  }
};

class Signs final : public FiniteHyperfield {
 public:
  std::string_view name() const override { return "S"; }
  Element neg(const Element& x) const override {
    check_member(x);
    return FiniteSym{-std::get<FiniteSym>(x).value};
  }
  std::optional<std::vector<Element>> elements() const override {
    return std::vector<Element>{FiniteSym{-1}, FiniteSym{0}, FiniteSym{1}};
  }

 protected:
  bool valid(int v) const override { return v >= -1 && v <= 1; }
  std::vector<int> pair_sum(int x, int y) const override {
    if (x == 0) return {y};
    if (y == 0 || x == y) return {x};
    return {-1, 0, 1};
  }
};

class Tropical final : public Hyperfield {
 public:
  std::string_view name() const override { return "T"; }
  CarrierKind carrier() const override { return CarrierKind::TropNum; }
  Family family() const override { return Family::Tropical; }
  EqualityPolicy equality_policy() const override { return EqualityPolicy::Toleranced; }
  Element zero() const override { return TropNum{kBottom}; }
  Element one() const override { return TropNum{0.0}; }

  void check_member(const Element& x) const override {
    double v = expect<TropNum>(x, name()).value;
    if (std::isnan(v) || v == std::numeric_limits<double>::infinity()) {
      throw CarrierMismatch("tropical numbers are reals or -inf");
    }
  }

  // Every element is its own additive inverse: x ⊞ x ∋ -inf.
  Element neg(const Element& x) const override {
    check_member(x);
    return x;
  }

  Element mul(const Element& x, const Element& y) const override {
    check_member(x);
    check_member(y);
    double a = std::get<TropNum>(x).value;
    double b = std::get<TropNum>(y).value;
    if (a == kBottom || b == kBottom) return TropNum{kBottom};
    return TropNum{a + b};
  }

  Element inverse(const Element& x) const override {
    check_member(x);
    double a = std::get<TropNum>(x).value;
    if (a == kBottom) throw DivisionByZero("inverse of -inf");
    return TropNum{-a};
  }

  ValueSet hyperadd(const Element& x, const Element& y) const override {
    return set_hyperadd(singleton(x), singleton(y));
  }

  ValueSet set_hyperadd(const ValueSet& a, const ValueSet& b) const override {
    return ValueSet::tropical(regions::tropical_sum(a.as<TropSet>(), b.as<TropSet>()));
  }

  ValueSet scale(const ValueSet& set, const Element& c) const override {
    check_member(c);
    double shift = std::get<TropNum>(c).value;
    if (shift == kBottom) return singleton(zero());
    TropSet s = set.as<TropSet>();
    if (s.ray) *s.ray += shift;
    for (double& p : s.points) {
      if (p != kBottom) p += shift;
    }
    return ValueSet::tropical(std::move(s));
  }

  ValueSet singleton(const Element& x) const override {
    check_member(x);
    return ValueSet::tropical(TropSet{std::nullopt, {std::get<TropNum>(x).value}});
  }
};

void check_angle(double a) {
  if (!std::isfinite(a)) throw CarrierMismatch("angles must be finite");
}

class PhaseField final : public Hyperfield {
 public:
  std::string_view name() const override { return "P"; }
  CarrierKind carrier() const override { return CarrierKind::Phase; }
  Family family() const override { return Family::Phase; }
  EqualityPolicy equality_policy() const override { return EqualityPolicy::Toleranced; }
  Element zero() const override { return Phase::origin(); }
  Element one() const override { return Phase::unit(0.0); }

  void check_member(const Element& x) const override { check_angle(expect<Phase>(x, name()).angle); }

  Element neg(const Element& x) const override {
    check_member(x);
    const auto& p = std::get<Phase>(x);
    return p.zero ? x : Phase::unit(p.angle + kPi);
  }

  Element mul(const Element& x, const Element& y) const override {
    check_member(x);
    check_member(y);
    const auto& p = std::get<Phase>(x);
    const auto& q = std::get<Phase>(y);
    if (p.zero || q.zero) return Phase::origin();
    return Phase::unit(p.angle + q.angle);
  }

  Element inverse(const Element& x) const override {
    check_member(x);
    const auto& p = std::get<Phase>(x);
    if (p.zero) throw DivisionByZero("inverse of zero");
    return Phase::unit(-p.angle);
  }

  ValueSet hyperadd(const Element& x, const Element& y) const override {
    return set_hyperadd(singleton(x), singleton(y));
  }

  ValueSet set_hyperadd(const ValueSet& a, const ValueSet& b) const override {
    return ValueSet::phase(regions::phase_sum(a.as<PhaseSet>(), b.as<PhaseSet>()));
  }

  ValueSet scale(const ValueSet& set, const Element& c) const override {
    check_member(c);
    const auto& p = std::get<Phase>(c);
    if (p.zero) return singleton(zero());
    PhaseSet s = set.as<PhaseSet>();
    s.angles = s.angles.rotated(p.angle);
    return ValueSet::phase(std::move(s));
  }

  ValueSet singleton(const Element& x) const override {
    check_member(x);
    const auto& p = std::get<Phase>(x);
    PhaseSet s;
    if (p.zero) {
      s.has_zero = true;
    } else {
      s.angles = CircleSet::point(p.angle);
    }
    return ValueSet::phase(std::move(s));
  }
};

class TropicalComplex final : public Hyperfield {
 public:
  std::string_view name() const override { return "TC"; }
  CarrierKind carrier() const override { return CarrierKind::PolarComplex; }
  Family family() const override { return Family::Complex; }
  EqualityPolicy equality_policy() const override { return EqualityPolicy::Toleranced; }
  Element zero() const override { return PolarComplex::zero(); }
  Element one() const override { return PolarComplex::polar(0.0, 0.0); }

  void check_member(const Element& x) const override {
    const auto& z = expect<PolarComplex>(x, name());
    if (std::isnan(z.log_mag) || z.log_mag == std::numeric_limits<double>::infinity()) {
      throw CarrierMismatch("log-magnitude must be a real or -inf");
    }
    check_angle(z.angle);
  }

  Element neg(const Element& x) const override {
    check_member(x);
    const auto& z = std::get<PolarComplex>(x);
    return z.is_zero() ? x : PolarComplex::polar(z.log_mag, z.angle + kPi);
  }

  Element mul(const Element& x, const Element& y) const override {
    check_member(x);
    check_member(y);
    const auto& z = std::get<PolarComplex>(x);
    const auto& w = std::get<PolarComplex>(y);
    if (z.is_zero() || w.is_zero()) return PolarComplex::zero();
    return PolarComplex::polar(z.log_mag + w.log_mag, z.angle + w.angle);
  }

  Element inverse(const Element& x) const override {
    check_member(x);
    const auto& z = std::get<PolarComplex>(x);
    if (z.is_zero()) throw DivisionByZero("inverse of zero");
    return PolarComplex::polar(-z.log_mag, -z.angle);
  }

  ValueSet hyperadd(const Element& x, const Element& y) const override {
    return set_hyperadd(singleton(x), singleton(y));
  }

  ValueSet set_hyperadd(const ValueSet& a, const ValueSet& b) const override {
    return ValueSet::complex(regions::complex_sum(a.as<ComplexRegionSet>(), b.as<ComplexRegionSet>()));
  }

  ValueSet scale(const ValueSet& set, const Element& c) const override {
    check_member(c);
    const auto& z = std::get<PolarComplex>(c);
    if (z.is_zero()) return singleton(zero());
    ComplexRegionSet s = set.as<ComplexRegionSet>();
    if (s.disk) *s.disk += z.log_mag;
    for (auto& layer : s.layers) {
      layer.log_radius += z.log_mag;
      layer.angles = layer.angles.rotated(z.angle);
    }
    return ValueSet::complex(std::move(s));
  }

  ValueSet singleton(const Element& x) const override {
    check_member(x);
    const auto& z = std::get<PolarComplex>(x);
    ComplexRegionSet s;
    if (z.is_zero()) {
      s.has_zero = true;
    } else {
      s.layers.push_back({z.log_mag, CircleSet::point(z.angle)});
    }
    return ValueSet::complex(std::move(s));
  }
};

class Rationals final : public Hyperfield {
 public:
  std::string_view name() const override { return "Qtriv"; }
  CarrierKind carrier() const override { return CarrierKind::ExactRational; }
  Family family() const override { return Family::Rational; }
  EqualityPolicy equality_policy() const override { return EqualityPolicy::Exact; }
  Element zero() const override { return ExactRational{0}; }
  Element one() const override { return ExactRational{1}; }

  void check_member(const Element& x) const override { expect<ExactRational>(x, name()); }

  Element neg(const Element& x) const override { return ExactRational{-expect<ExactRational>(x, name()).value}; }

  Element mul(const Element& x, const Element& y) const override {
    return ExactRational{expect<ExactRational>(x, name()).value * expect<ExactRational>(y, name()).value};
  }

  Element inverse(const Element& x) const override {
    const Rational& q = expect<ExactRational>(x, name()).value;
    if (q == 0) throw DivisionByZero("inverse of zero");
    return ExactRational{Rational(1) / q};
  }

  ValueSet hyperadd(const Element& x, const Element& y) const override {
    return ValueSet::rational({expect<ExactRational>(x, name()).value + expect<ExactRational>(y, name()).value});
  }

  ValueSet set_hyperadd(const ValueSet& a, const ValueSet& b) const override {
    std::vector<Rational> out;
    for (const auto& x : a.as<RationalSet>().values) {
      for (const auto& y : b.as<RationalSet>().values) out.push_back(x + y);
    }
    return ValueSet::rational(std::move(out));
  }

  ValueSet scale(const ValueSet& set, const Element& c) const override {
    const Rational& k = expect<ExactRational>(c, name()).value;
    std::vector<Rational> out;
    for (const auto& x : set.as<RationalSet>().values) out.push_back(x * k);
    return ValueSet::rational(std::move(out));
  }

  ValueSet singleton(const Element& x) const override {
    return ValueSet::rational({expect<ExactRational>(x, name()).value});
  }
};

}  // namespace

const Hyperfield& krasner() {
  static const Krasner h;
  return h;
}

const Hyperfield& signs() {
  static const Signs h;
  return h;
}

const Hyperfield& tropical() {
  static const Tropical h;
  return h;
}

const Hyperfield& phase() {
  static const PhaseField h;
  return h;
}

const Hyperfield& tropical_complex() {
  static const TropicalComplex h;
  return h;
}

const Hyperfield& rationals() {
  static const Rationals h;
  return h;
}

std::vector<const Hyperfield*> catalog() {
  return {&krasner(), &signs(), &tropical(), &phase(), &tropical_complex(), &rationals()};
}

const Hyperfield& lookup(std::string_view name) {
  for (const Hyperfield* h : catalog()) {
    if (h->name() == name) return *h;
  }
  throw UnknownName("unknown hyperfield '" + std::string(name) + "'");
}

}  // namespace hyperion
