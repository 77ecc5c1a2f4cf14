#pragma once

#include <optional>
#include <vector>

#include "hyperion/polynomial.hpp"

namespace hyperion {

struct RootEntry {
  Element root;
  unsigned multiplicity = 0;
};

struct RootReport {
  std::vector<RootEntry> roots;
  unsigned total_multiplicity = 0;
  unsigned degree = 0;
  bool exhaustive = false;
};

// Finite roots are the slopes of the upper Newton polygon of (i, c_i), each
// with multiplicity equal to the exponent length of its edge; -inf is a root
// of multiplicity min_exponent() when that is positive.
RootReport tropical_roots(const Polynomial& p);

// Exhaustive scan of a finite carrier.
RootReport finite_roots(const Polynomial& p);

// Dense coefficient vectors (constant first) of every q with
// p ∈ (X ⊞ -a) ⊙ q, where q's coefficients range over `candidates`.
std::vector<std::vector<Element>> quotients(const Hyperfield& h, const std::vector<Element>& p, const Element& a,
                                            const std::vector<Element>& candidates);

// The recursive multiplicity, maximising over quotients drawn from
// `candidates`. Exact when the candidates are the whole carrier.
unsigned multiplicity_with_candidates(const Polynomial& p, const Element& a, const std::vector<Element>& candidates);

// Exact multiplicity over a finite carrier; throws CarrierMismatch otherwise.
unsigned multiplicity(const Polynomial& p, const Element& a);

struct CertifyReport {
  Element point;
  std::vector<unsigned> dominant;  // exponents of maximal |c_j a^j| over all terms
  bool fast_path = false;          // the positive-exponent dominance pattern applies
  std::optional<bool> fast_verdict;
  bool is_root = false;            // from full evaluation
  ValueSet value;
  bool consistent() const { return !fast_verdict || *fast_verdict == is_root; }
};

// Root certificate for a univariate polynomial over 𝕋ℂ. The fast path fires
// when the maximum M of |c_j a^j| over j >= 1 is finite and at least |c_0|; its
// verdict is whether -c_0 lies in the hypersum of the dominant terms.
CertifyReport certify_root_tc(const Polynomial& p, const Element& a);

}  // namespace hyperion
