#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hyperion/hyperfield.hpp"
#include "hyperion/sampling.hpp"

// Monte-Carlo reference for set-level hyperaddition. Membership of a probe in
// the union of a ⊞ b over a ∈ A, b ∈ B is decided from finitely many sampled
// pairs with a from-scratch implementation of the two-point rules, so it shares
// nothing with the closed forms it is compared against.
namespace oracle {

using hyperion::Element;
using hyperion::Hyperfield;
using hyperion::Rng;
using hyperion::ValueSet;

// x ∈ a ⊞ b, straight from the definition of the hyperfield named by h.name().
bool pair_contains(const Hyperfield& h, const Element& a, const Element& b, const Element& x);

// Random set of one or two primitive regions (points, rays, disks, arcs).
ValueSet random_region_set(const Hyperfield& h, Rng& rng);

class PairwiseUnion {
 public:
  PairwiseUnion(const Hyperfield& h, ValueSet a, ValueSet b);
  bool contains(const Element& x) const;
  std::size_t sample_count() const { return sa_.size() + sb_.size(); }

 private:
  const Hyperfield* h_;
  ValueSet a_;
  ValueSet b_;
  std::vector<Element> sa_;
  std::vector<Element> sb_;
};

// Probes for comparing `result` = A ⊞ B against the oracle: generic points kept
// at least 1e-6 away from every boundary, plus points sitting exactly on
// boundaries (endpoints, isolated points, zero).
std::vector<Element> probes(const Hyperfield& h, const ValueSet& a, const ValueSet& b, const ValueSet& result,
                            std::size_t count, Rng& rng);

struct Agreement {
  std::size_t pairs = 0;
  std::size_t probes = 0;
  std::size_t disagreements = 0;
  std::string witness;
};

// Random region pairs over an infinite carrier; exhaustive over all subset
// pairs and elements of a finite one (then `pairs` and `probes_per_pair` are
// ignored).
Agreement compare_with_closed_form(const Hyperfield& h, std::size_t pairs, std::size_t probes_per_pair,
                                   std::uint64_t seed);

}  // namespace oracle
