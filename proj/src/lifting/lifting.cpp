#include "hyperion/lifting.hpp"

#include <algorithm>
#include <set>

#include "hyperion/catalog.hpp"
#include "hyperion/error.hpp"
#include "hyperion/tolerance.hpp"

namespace hyperion {

LiftResult lift_root_eta(const Polynomial& p, const Element& b) {
  if (p.field().carrier() != CarrierKind::PolarComplex) throw CarrierMismatch("lift_root_eta needs a polynomial over TC");
  if (p.nvars() != 1) throw DimensionMismatch("lift_root_eta needs a univariate polynomial");
  tropical().check_member(b);
  const Homomorphism& eta = lookup_hom("eta");
  Polynomial q = pushforward(eta, p);
  if (!evaluate(q, b).is_root) throw NotARoot(to_string(b) + " is not a root of " + to_string(q));

  double bv = std::get<TropNum>(b).value;
  if (bv == kBottom) {
    Element zero = PolarComplex::zero();
    return {zero, std::nullopt, std::nullopt, {p.min_exponent()}, certify_root_tc(p, zero)};
  }
  if (p.size() < 2) throw DegeneratePolynomial("a single-term polynomial has no nonzero root");

  double top = kBottom;
  for (const auto& [e, c] : q.terms()) top = std::max(top, std::get<TropNum>(c).value + e[0] * bv);
  std::vector<unsigned> dominant;
  for (const auto& [e, c] : q.terms()) {
    if (log_mags_equal(std::get<TropNum>(c).value + e[0] * bv, top)) dominant.push_back(e[0]);
  }
  // evaluate() already certified at least two maximal terms.
  unsigned t = dominant[dominant.size() - 1];
  unsigned tp = dominant[dominant.size() - 2];

  const auto& ct = std::get<PolarComplex>(p.coefficient({t}));
  const auto& ctp = std::get<PolarComplex>(p.coefficient({tp}));
  double k = static_cast<double>(t - tp);
  double log_mag = (ctp.log_mag - ct.log_mag) / k;
  double angle = canonical_angle(ctp.angle + kPi - ct.angle) / k;
  Element a = PolarComplex::polar(log_mag, angle);
  return {a, t, tp, std::move(dominant), certify_root_tc(p, a)};
}

std::vector<long long> choose_direction(const std::vector<Exponent>& support) {
  if (support.empty()) throw DegeneratePolynomial("empty support");
  std::size_t n = support.front().size();
  long long m = 1;
  for (const auto& e : support) {
    for (unsigned x : e) m = std::max(m, 1 + static_cast<long long>(x));
  }
  for (;; ++m) {
    std::vector<long long> d(n);
    long long w = 1;
    for (std::size_t k = 0; k < n; ++k, w *= m) d[k] = w;
    std::set<long long> dots;
    for (const auto& e : support) {
      long long dot = 0;
      for (std::size_t k = 0; k < n; ++k) dot += d[k] * e[k];
      dots.insert(dot);
    }
    if (dots.size() == support.size()) return d;
  }
}

InclusionReport forward_inclusion_check(const Homomorphism& f, const Polynomial& p,
                                        const std::vector<std::vector<Element>>& roots) {
  InclusionReport report;
  report.hom = f.name;
  Polynomial pushed = pushforward(f, p);
  for (const auto& root : roots) {
    if (!evaluate(p, root).is_root) {
      ++report.skipped;
      continue;
    }
    ++report.checked;
    std::vector<Element> image;
    for (const auto& x : root) image.push_back(f(x));
    if (evaluate(pushed, image).is_root) {
      ++report.contained;
    } else {
      std::string s;
      for (const auto& x : root) s += (s.empty() ? "" : ", ") + to_string(x);
      report.failures.push_back(to_string(p) + " at (" + s + ")");
    }
  }
  return report;
}

RacReport rac_counterexamples() {
  // ℝ → 𝕊: X² - X + 1 has no real (so no rational) root, yet sgn∗ has root 1.
  const Hyperfield& q = rationals();
  std::vector<Rational> coeffs{1, -1, 1};
  Polynomial real_p = Polynomial::univariate(q, {ExactRational{coeffs[0]}, ExactRational{coeffs[1]}, ExactRational{coeffs[2]}});
  Polynomial sign_p = pushforward(lookup_hom("sgn"), real_p);
  EvalResult at_one = evaluate(sign_p, FiniteSym{1});
  Rational disc = coeffs[1] * coeffs[1] - 4 * coeffs[2] * coeffs[0];
  // Rational root test: candidates ±1 are the only divisors of c₀ / c₂.
  bool rational_root = false;
  for (int r : {1, -1}) rational_root = rational_root || evaluate(real_p, ExactRational{Rational(r)}).is_root;
  rational_root = rational_root && disc >= 0;

  // ℙ: X² ⊞ X ⊞ 1 at e^{3πi/4} and e^{πi/2}.
  const Hyperfield& ph = phase();
  Polynomial phase_p = Polynomial::univariate(ph, {ph.one(), ph.one(), ph.one()});
  EvalResult root = evaluate(phase_p, Phase::unit(3 * kPi / 4));
  EvalResult nonroot = evaluate(phase_p, Phase::unit(kPi / 2));

  return {to_string(sign_p), at_one.value,        at_one.is_root,  disc,
          rational_root,     root.value,          root.is_root,    nonroot.value,
          !nonroot.is_root};
}

}  // namespace hyperion
