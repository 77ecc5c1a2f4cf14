#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hyperion/homomorphism.hpp"
#include "hyperion/polynomial.hpp"

namespace hyperion {

struct Violation {
  std::string polynomial;
  std::string detail;
};

// One polynomial of a push-forward sweep at one codomain element b.
struct PushforwardCase {
  std::string polynomial;
  std::string b;
  unsigned pushed_mult = 0;   // mult_b(f∗(p))
  unsigned fibre_mult = 0;    // Σ_{a ∈ f⁻¹(b)} mult_a(p)
  bool holds = true;          // pushed_mult >= fibre_mult
  bool hypotheses = true;     // the domain meets the bound and inheritance at p
};

struct ConjectureReport {
  std::string check;
  std::string hyperfield;  // or homomorphism name
  unsigned degree_max = 0;
  std::size_t checked = 0;
  std::size_t equalities = 0;  // polynomials with Σ mult = deg (bound check only)
  bool applicable = true;
  std::string note;
  std::vector<Violation> violations;
  std::vector<PushforwardCase> cases;

  bool passed() const { return violations.empty(); }
};

// Every univariate polynomial over a finite carrier with degree at most
// `degree_max`, constant term first.
std::vector<Polynomial> enumerate_polynomials(const Hyperfield& h, unsigned degree_max);

// Σ_a mult_a(p) <= deg(p) for every polynomial of degree <= degree_max.
ConjectureReport check_multiplicity_bound(const Hyperfield& h, unsigned degree_max, unsigned threads = 1);

// Whether p factors as (X - a_1) ⊙ ... ⊙ (X - a_m) ⊙ q for the multiset
// `roots`, trying every order of the factors. Fills `witness` with q.
bool inheritance_witness(const Polynomial& p, const std::vector<Element>& roots, std::vector<Element>* witness = nullptr);

// Inheritance at every sub-multiset of the root list of every polynomial.
ConjectureReport check_inheritance(const Hyperfield& h, unsigned degree_max, unsigned threads = 1);

// mult_b(f∗(p)) >= Σ_{a ∈ f⁻¹(b)} mult_a(p); a violation is only recorded when
// the domain satisfies the multiplicity bound and inheritance at p. Infinite
// carriers are reported as not applicable.
ConjectureReport check_pushforward_mult(const Homomorphism& f, unsigned degree_max, unsigned threads = 1);

// X² ⊞ X ⊞ 1 over 𝕋ℂ with the three certified roots -1, i, -i: the
// multiplicity bound cannot hold over 𝕋ℂ.
ConjectureReport tc_three_roots_witness();

}  // namespace hyperion
