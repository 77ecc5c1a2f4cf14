#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperion/homomorphism.hpp"
#include "hyperion/polynomial.hpp"
#include "hyperion/roots.hpp"

namespace hyperion {

struct LiftResult {
  Element a_tilde;
  // Exponent pair used in ã = (-c_{t'}/c_t)^{1/(t-t')}; absent when b = -inf
  // and ã is zero.
  std::optional<unsigned> t;
  std::optional<unsigned> t_prime;
  std::vector<unsigned> tropical_dominant;  // maximal terms of η∗(p) at b
  CertifyReport certificate;
};

// Lifts a root b of η∗(p) to a root ã of p with η(ã) = b. The fractional
// power is the principal polar root. Throws NotARoot when b is not a root,
// DegeneratePolynomial for a single-term p at finite b.
LiftResult lift_root_eta(const Polynomial& p, const Element& b);

// D = (1, M, ..., M^{n-1}) with M starting at 1 + the largest coordinate and
// increased until the dot products with the support are pairwise distinct.
std::vector<long long> choose_direction(const std::vector<Exponent>& support);

struct LiftContext {
  Polynomial original;
  Polynomial tropicalization;
  std::vector<Element> target;
  // Coordinates with a finite target; the others are set to zero before the
  // line restriction.
  std::vector<std::size_t> active;
  std::vector<Element> lambda;
  std::vector<long long> direction;  // one entry per active coordinate
  std::optional<LineRestriction> pullback;
  std::optional<LiftResult> lift;
  std::vector<Element> point;        // φ(ã)
  EvalResult evaluation;             // p at point
  std::vector<Element> eta_image;
  bool certified = false;            // point is a root and η(point) = target
};

// Constructive reverse inclusion V(η∗(p)) ⊆ η(V(p)) at one point. Throws
// NotARoot when `a` is not a root of η∗(p).
LiftContext kapranov_lift(const Polynomial& p, std::span<const Element> a);

struct InclusionReport {
  std::string hom;
  std::size_t checked = 0;
  std::size_t contained = 0;  // images that are roots of f∗(p)
  std::size_t skipped = 0;    // supplied points that were not roots of p
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

// f(V(p)) ⊆ V(f∗(p)) on the supplied roots.
InclusionReport forward_inclusion_check(const Homomorphism& f, const Polynomial& p,
                                        const std::vector<std::vector<Element>>& roots);

struct RacReport {
  // ℝ → 𝕊 via sgn, p = X² - X + 1.
  std::string sign_polynomial;
  ValueSet sign_value_at_one;
  bool sign_root = false;
  Rational discriminant;
  bool rational_root_exists = true;
  // ℙ, p = X² ⊞ X ⊞ 1.
  ValueSet phase_value_root;     // at e^{3πi/4}
  bool phase_root = false;
  ValueSet phase_value_nonroot;  // at e^{πi/2}
  bool phase_nonroot = false;    // true when e^{πi/2} is not a root

  bool reproduced() const { return sign_root && !rational_root_exists && phase_root && phase_nonroot; }
};

RacReport rac_counterexamples();

}  // namespace hyperion
