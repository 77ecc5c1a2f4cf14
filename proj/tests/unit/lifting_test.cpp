#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "hyperion/catalog.hpp"
#include "hyperion/conjectures.hpp"
#include "hyperion/error.hpp"
#include "hyperion/homomorphism.hpp"
#include "hyperion/lifting.hpp"
#include "hyperion/roots.hpp"
#include "hyperion/sampling.hpp"
#include "hyperion/text.hpp"
#include "hyperion/tolerance.hpp"

using namespace hyperion;

namespace {

const char* kWorked = "mag1@90 X1^2 + mag1@120 X1 + mag1@180";

}  // namespace

TEST(Lift, WorkedExample) {
  auto p = parse_polynomial(kWorked, tropical_complex());
  auto r = lift_root_eta(p, TropNum{0.0});
  auto a = std::get<PolarComplex>(r.a_tilde);
  EXPECT_NEAR(a.log_mag, 0.0, 1e-9);
  EXPECT_NEAR(a.angle, 7 * kPi / 6, 1e-9);
  EXPECT_EQ(r.t, 2u);
  EXPECT_EQ(r.t_prime, 1u);
  EXPECT_TRUE(r.certificate.is_root);
  // ã = (1 - i√3) / (2i) in Cartesian form.
  auto z = a.to_complex();
  auto want = std::complex<double>(1.0, -std::sqrt(3.0)) / std::complex<double>(0.0, 2.0);
  EXPECT_NEAR(std::abs(z - want), 0.0, 1e-12);
}

TEST(Lift, LinearAndDegenerateCases) {
  auto p = parse_polynomial("1 X1 + 1", tropical_complex());
  auto r = lift_root_eta(p, TropNum{0.0});
  auto a = std::get<PolarComplex>(r.a_tilde);
  EXPECT_NEAR(a.log_mag, 0.0, 1e-12);
  EXPECT_NEAR(a.angle, kPi, 1e-12);
  EXPECT_TRUE(r.certificate.is_root);

  EXPECT_THROW(lift_root_eta(p, TropNum{1.0}), NotARoot);
  EXPECT_THROW(lift_root_eta(parse_polynomial("mag2@10 X1^3", tropical_complex()), TropNum{0.0}), NotARoot);

  auto shifted = parse_polynomial("1 X1^2 + 1 X1", tropical_complex());
  auto z = lift_root_eta(shifted, TropNum{kBottom});
  EXPECT_TRUE(std::get<PolarComplex>(z.a_tilde).is_zero());
  EXPECT_FALSE(z.t.has_value());
  EXPECT_TRUE(z.certificate.is_root);
}

// Every tropical root of η∗(p) lifts to a certified root over the fibre.
TEST(Lift, RandomUnivariateClosure) {
  Rng rng(8);
  const auto& h = tropical_complex();
  for (int i = 0; i < 100; ++i) {
    unsigned deg = std::uniform_int_distribution<unsigned>(1, 5)(rng);
    std::vector<Element> c;
    for (unsigned j = 0; j <= deg; ++j) c.push_back(random_element(h, rng));
    c[deg] = random_nonzero(h, rng);
    auto p = Polynomial::univariate(h, c);
    auto trop = pushforward(lookup_hom("eta"), p);
    for (const auto& root : tropical_roots(trop).roots) {
      auto r = lift_root_eta(p, root.root);
      EXPECT_TRUE(r.certificate.is_root) << to_string(p);
      EXPECT_TRUE(tropical().equal(lookup_hom("eta")(r.a_tilde), root.root));
    }
  }
}

TEST(Direction, Examples) {
  EXPECT_EQ(choose_direction({{1, 0}, {0, 1}}), (std::vector<long long>{1, 2}));
  EXPECT_EQ(choose_direction({{2, 0}, {0, 1}}), (std::vector<long long>{1, 3}));
  EXPECT_EQ(choose_direction({{3}, {0}}), (std::vector<long long>{1}));
  // Dot products are pairwise distinct.
  std::vector<Exponent> s{{1, 2, 0}, {2, 0, 1}, {0, 1, 2}, {1, 1, 1}, {3, 0, 0}};
  auto d = choose_direction(s);
  std::set<long long> dots;
  for (const auto& e : s) dots.insert(d[0] * e[0] + d[1] * e[1] + d[2] * e[2]);
  EXPECT_EQ(dots.size(), s.size());
}

TEST(Kapranov, Examples) {
  const auto& h = tropical_complex();
  auto p = parse_polynomial("1 X1 + 1 X2 + 1", h);
  std::vector<Element> origin{TropNum{0.0}, TropNum{0.0}};
  auto c = kapranov_lift(p, origin);
  EXPECT_TRUE(c.certified);
  EXPECT_EQ(c.direction, (std::vector<long long>{1, 2}));
  ASSERT_EQ(c.eta_image.size(), 2u);
  EXPECT_NEAR(std::get<TropNum>(c.eta_image[0]).value, 0.0, 1e-9);
  EXPECT_NEAR(std::get<TropNum>(c.eta_image[1]).value, 0.0, 1e-9);
  EXPECT_TRUE(c.evaluation.is_root);

  std::vector<Element> off{TropNum{5.0}, TropNum{-3.0}};
  EXPECT_THROW(kapranov_lift(p, off), NotARoot);

  auto uni = parse_polynomial(kWorked, h);
  std::vector<Element> zero{TropNum{0.0}};
  auto u = kapranov_lift(uni, zero);
  EXPECT_TRUE(u.certified);
  EXPECT_NEAR(std::get<PolarComplex>(u.point[0]).angle, 7 * kPi / 6, 1e-9);
}

TEST(Kapranov, InfiniteCoordinates) {
  auto p = parse_polynomial("1 X1 X2 + 1 X1 + mag2@30 X2^2", tropical_complex());
  std::vector<Element> a{TropNum{kBottom}, TropNum{kBottom}};
  auto c = kapranov_lift(p, a);
  EXPECT_TRUE(c.certified);
  EXPECT_TRUE(c.active.empty());

  auto q = parse_polynomial("1 X1 X2 + 1 X1 + 1 X2^2 + 1", tropical_complex());
  std::vector<Element> b{TropNum{0.0}, TropNum{kBottom}};
  auto d = kapranov_lift(q, b);
  EXPECT_TRUE(d.certified);
  EXPECT_EQ(d.active, (std::vector<std::size_t>{0}));
}

TEST(ForwardInclusion, EtaOnCertifiedRoots) {
  const auto& h = tropical_complex();
  auto p = parse_polynomial("1 X1^2 + 1 X1 + 1", h);
  std::vector<std::vector<Element>> roots;
  for (double t : {kPi, kPi / 2, 3 * kPi / 2, 0.0}) roots.push_back({PolarComplex::polar(0.0, t)});
  auto r = forward_inclusion_check(lookup_hom("eta"), p, roots);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.checked, 3u);
  EXPECT_EQ(r.skipped, 1u);

  auto empty = forward_inclusion_check(lookup_hom("eta"), p, {});
  EXPECT_TRUE(empty.passed());
  EXPECT_EQ(empty.checked, 0u);
}

TEST(ForwardInclusion, SignsToKrasnerExhaustive) {
  const auto& f = lookup_hom("toK:S");
  std::size_t checked = 0;
  for (const auto& p : enumerate_polynomials(signs(), 3)) {
    std::vector<std::vector<Element>> roots;
    for (const auto& r : finite_roots(p).roots) roots.push_back({r.root});
    auto rep = forward_inclusion_check(f, p, roots);
    EXPECT_TRUE(rep.passed()) << to_string(p);
    EXPECT_EQ(rep.contained, rep.checked);
    checked += rep.checked;
  }
  EXPECT_GT(checked, 0u);
}

TEST(Rac, Counterexamples) {
  auto r = rac_counterexamples();
  EXPECT_TRUE(r.reproduced());
  EXPECT_TRUE(r.sign_root);
  EXPECT_EQ(r.discriminant, Rational(-3));
  EXPECT_FALSE(r.rational_root_exists);
  EXPECT_TRUE(r.phase_root);
  EXPECT_TRUE(r.phase_nonroot);
  EXPECT_EQ(r.sign_value_at_one, ValueSet::finite({-1, 0, 1}));
}
