#include <gtest/gtest.h>

#include <cmath>

#include "hyperion/axioms.hpp"
#include "hyperion/catalog.hpp"
#include "hyperion/error.hpp"
#include "hyperion/region_algebra.hpp"
#include "hyperion/sampling.hpp"
#include "hyperion/tolerance.hpp"

using namespace hyperion;

namespace {

Element tc(double log_mag, double angle) { return PolarComplex::polar(log_mag, angle); }
Element ph(double angle) { return Phase::unit(angle); }
Element tr(double v) { return TropNum{v}; }
Element sym(int v) { return FiniteSym{v}; }

}  // namespace

TEST(Tolerance, CanonicalAngleSnapsNearTwoPi) {
  EXPECT_DOUBLE_EQ(canonical_angle(kTwoPi - 1e-12), 0.0);
  EXPECT_NEAR(canonical_angle(-kPi / 2), 3 * kPi / 2, 1e-15);
  EXPECT_NEAR(angle_distance(0.1, kTwoPi - 0.1), 0.2, 1e-12);
  EXPECT_TRUE(log_mags_equal(kBottom, kBottom));
  EXPECT_FALSE(log_mags_equal(0.0, 1e-6));
}

TEST(CircleSet, OpenEndpointsAreExcluded) {
  auto s = CircleSet::arc(0.5, 1.0, true, false);
  EXPECT_FALSE(s.contains(0.5));
  EXPECT_TRUE(s.contains(1.5));
  EXPECT_TRUE(s.contains(1.0));
  EXPECT_FALSE(s.contains(2.0));
}

TEST(CircleSet, AbuttingPiecesMerge) {
  auto a = CircleSet::arc(0.0, 1.0, false, true);
  auto b = CircleSet::arc(1.0, 1.0);
  auto u = unite(a, b);
  ASSERT_EQ(u.arcs().size(), 1u);
  EXPECT_NEAR(u.arcs()[0].length, 2.0, 1e-12);
  // Two open ends meeting at one point leave a gap.
  auto c = unite(CircleSet::arc(0.0, 1.0, false, true), CircleSet::arc(1.0, 1.0, true, false));
  EXPECT_EQ(c.arcs().size(), 2u);
  EXPECT_FALSE(c.contains(1.0));
}

TEST(CircleSet, WrapAroundAndSubtraction) {
  auto s = CircleSet::between(3 * kPi / 2, kPi / 2);
  EXPECT_TRUE(s.contains(0.0));
  EXPECT_FALSE(s.contains(kPi));
  auto d = subtract(CircleSet::full(), CircleSet::point(1.0));
  EXPECT_FALSE(d.contains(1.0));
  EXPECT_TRUE(d.contains(1.0 + 1e-6));
  EXPECT_TRUE(CircleSet::arc(0.0, 1.0).interior().approx_equal(CircleSet::arc(0.0, 1.0, true, true)));
}

TEST(Hyperadd, TropicalMaxRule) {
  const auto& t = tropical();
  EXPECT_EQ(t.hyperadd(tr(3), tr(5)), t.singleton(tr(5)));
  auto ray = t.hyperadd(tr(4), tr(4));
  EXPECT_EQ(ray, ValueSet::tropical({4.0, {}}));
  EXPECT_TRUE(ray.contains(tr(kBottom)));
  EXPECT_TRUE(ray.contains(tr(-100)));
  EXPECT_FALSE(ray.contains(tr(4.5)));
}

TEST(Hyperadd, SignsAndKrasner) {
  EXPECT_EQ(signs().hyperadd(sym(1), sym(-1)), ValueSet::finite({-1, 0, 1}));
  EXPECT_EQ(signs().hyperadd(sym(1), sym(1)), ValueSet::finite({1}));
  EXPECT_EQ(krasner().hyperadd(sym(1), sym(1)), ValueSet::finite({0, 1}));
  EXPECT_EQ(krasner().set_hyperadd(ValueSet::finite({0, 1}), ValueSet::finite({1})), ValueSet::finite({0, 1}));
}

TEST(Hyperadd, TropicalComplexCases) {
  const auto& h = tropical_complex();
  auto z = tc(0.0, 0.7);
  auto disk = h.hyperadd(z, h.neg(z));
  EXPECT_TRUE(disk.contains(PolarComplex::zero()));
  EXPECT_TRUE(disk.contains(tc(0.0, 2.0)));
  EXPECT_TRUE(disk.contains(tc(-3.0, 5.0)));
  EXPECT_FALSE(disk.contains(tc(0.01, 0.0)));
  // The larger magnitude wins.
  EXPECT_EQ(h.hyperadd(tc(1.0, 0.3), tc(0.5, 2.0)), h.singleton(tc(1.0, 0.3)));
  // Equal magnitudes give the closed shortest arc.
  auto arc = h.hyperadd(tc(0.0, 0.0), tc(0.0, kPi / 2));
  EXPECT_TRUE(arc.contains(tc(0.0, 0.0)));
  EXPECT_TRUE(arc.contains(tc(0.0, kPi / 4)));
  EXPECT_TRUE(arc.contains(tc(0.0, kPi / 2)));
  EXPECT_FALSE(arc.contains(tc(0.0, kPi)));
  EXPECT_FALSE(arc.contains(tc(-0.1, kPi / 4)));
  // The arc goes the short way round.
  auto back = h.hyperadd(tc(0.0, 0.2), tc(0.0, kTwoPi - 0.2));
  EXPECT_TRUE(back.contains(tc(0.0, 0.0)));
  EXPECT_FALSE(back.contains(tc(0.0, kPi)));
}

TEST(Hyperadd, PhaseCases) {
  const auto& h = phase();
  EXPECT_EQ(h.hyperadd(ph(1.0), ph(1.0)), h.singleton(ph(1.0)));
  auto anti = h.hyperadd(ph(1.0), ph(1.0 + kPi));
  EXPECT_TRUE(anti.contains(Phase::origin()));
  EXPECT_TRUE(anti.contains(ph(1.0)));
  EXPECT_TRUE(anti.contains(ph(1.0 + kPi)));
  EXPECT_FALSE(anti.contains(ph(2.0)));
  auto open = h.hyperadd(ph(0.0), ph(kPi / 2));
  EXPECT_FALSE(open.contains(ph(0.0)));
  EXPECT_FALSE(open.contains(ph(kPi / 2)));
  EXPECT_TRUE(open.contains(ph(kPi / 4)));
  EXPECT_FALSE(open.contains(Phase::origin()));
}

TEST(Hyperadd, RationalsAreAField) {
  const auto& q = rationals();
  auto s = q.hyperadd(ExactRational{Rational(1, 2)}, ExactRational{Rational(1, 3)});
  EXPECT_EQ(s, ValueSet::rational({Rational(5, 6)}));
}

TEST(SetHyperadd, DerivedRegionRules) {
  const auto& h = tropical_complex();
  ComplexRegionSet d;
  d.disk = 0.5;
  auto disk = ValueSet::complex(d);
  EXPECT_EQ(h.set_hyperadd(disk, h.singleton(tc(0.2, 1.0))), disk);
  EXPECT_EQ(h.set_hyperadd(disk, h.singleton(tc(0.5, 1.0))), disk);

  const auto& t = tropical();
  EXPECT_EQ(t.set_hyperadd(ValueSet::tropical({1.0, {}}), t.singleton(tr(2.0))), t.singleton(tr(2.0)));
}

TEST(SetHyperadd, SameCircleAntipodesGiveDisk) {
  EXPECT_FALSE(regions::same_circle_sum(Arc{0.0, 0.5}, Arc{kPi + 0.25, 0.1}).has_value());
  auto hull = regions::same_circle_sum(Arc{0.0, 0.5}, Arc{1.0, 0.5});
  ASSERT_TRUE(hull.has_value());
  EXPECT_NEAR(hull->start, 0.0, 1e-12);
  EXPECT_NEAR(hull->length, 1.5, 1e-12);
}

TEST(SetHyperadd, PhaseHalfCircleNeedsApproachFromThatSide) {
  // The antipode of 0 is an open end of B, approached from below only.
  bool zero = false;
  auto s = regions::phase_arc_sum(Arc{0.0, 0.0}, Arc{kPi - 0.5, 0.5, false, true}, zero);
  EXPECT_FALSE(zero);
  EXPECT_TRUE(s.contains(kPi / 2));
  EXPECT_FALSE(s.contains(3 * kPi / 2));
  EXPECT_FALSE(s.contains(kPi));
}

TEST(Hypersum, Examples) {
  std::vector<Element> s{sym(1), sym(-1), sym(-1)};
  EXPECT_EQ(signs().hypersum(s), ValueSet::finite({-1, 0, 1}));
  const auto& h = tropical_complex();
  std::vector<Element> c{tc(0, 0), tc(0, kPi), tc(0, 0)};
  EXPECT_TRUE(h.hypersum(c).contains(PolarComplex::zero()));
  std::vector<Element> one{tr(2.5)};
  EXPECT_EQ(tropical().hypersum(one), tropical().singleton(tr(2.5)));
  EXPECT_THROW(tropical().hypersum(std::vector<Element>{}), EmptyHypersum);
}

TEST(Contains, BoundaryConventions) {
  EXPECT_TRUE(ValueSet::tropical({4.0, {}}).contains(tr(kBottom)));
  ComplexRegionSet d;
  d.disk = 0.0;
  EXPECT_TRUE(ValueSet::complex(d).contains(PolarComplex::zero()));
  ComplexRegionSet a;
  a.layers.push_back({0.0, CircleSet::arc(0.5, 1.0, true, true)});
  EXPECT_FALSE(ValueSet::complex(a).contains(tc(0.0, 0.5)));
  EXPECT_FALSE(ValueSet::complex(a).contains(tc(0.0, 1.5)));
  EXPECT_TRUE(ValueSet::complex(a).contains(tc(0.0, 1.0)));
}

TEST(Multiplication, GroupOperations) {
  EXPECT_DOUBLE_EQ(std::get<TropNum>(tropical().mul(tr(2), tr(3))).value, 5.0);
  auto p = std::get<PolarComplex>(tropical_complex().mul(tc(0.5, 5.0), tc(0.25, 2.0)));
  EXPECT_NEAR(p.log_mag, 0.75, 1e-12);
  EXPECT_NEAR(p.angle, 7.0 - kTwoPi, 1e-12);
  EXPECT_EQ(std::get<FiniteSym>(signs().neg(sym(1))).value, -1);
  EXPECT_THROW(tropical().inverse(tr(kBottom)), DivisionByZero);
  EXPECT_THROW(phase().inverse(Phase::origin()), DivisionByZero);
  EXPECT_THROW(tropical().mul(tr(1), ph(0.0)), CarrierMismatch);
  EXPECT_THROW(krasner().check_member(sym(-1)), CarrierMismatch);
}

TEST(Sampling, RepresentativesAreMembers) {
  Rng rng(5);
  for (const Hyperfield* h : catalog()) {
    for (int i = 0; i < 300; ++i) {
      auto s = h->hyperadd(random_element(*h, rng), random_element(*h, rng));
      for (const auto& x : representatives(s)) EXPECT_TRUE(s.contains(x)) << h->name() << " " << to_string(s);
    }
  }
}

TEST(Axioms, FiniteHyperfieldsPassExhaustively) {
  for (const Hyperfield* h : {&krasner(), &signs()}) {
    auto r = check_axioms(*h);
    EXPECT_TRUE(r.exhaustive);
    EXPECT_TRUE(r.all_passed()) << h->name();
  }
}

TEST(Axioms, TropicalComplexAssociativityOnTenThousandTriples) {
  auto r = check_axioms(tropical_complex(), 10000, 0);
  EXPECT_TRUE(r.result("associativity").passed) << r.result("associativity").witness;
  EXPECT_GE(r.result("associativity").checked, 10000u);
}

TEST(Axioms, InfiniteCarriersPassSampled) {
  for (const Hyperfield* h : {&tropical(), &phase(), &tropical_complex(), &rationals()}) {
    auto r = check_axioms(*h, 1000, 11);
    EXPECT_FALSE(r.exhaustive);
    for (const auto& a : r.results) EXPECT_TRUE(a.passed) << h->name() << " " << a.axiom << ": " << a.witness;
  }
}
