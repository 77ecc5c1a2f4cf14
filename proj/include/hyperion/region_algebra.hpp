#pragma once

#include <optional>

#include "hyperion/circle_set.hpp"
#include "hyperion/value_set.hpp"

// Closed-form set-level hyperaddition for the infinite carriers. Each routine
// computes the union of x ⊞ y over x in the first set and y in the second by
// combining primitive regions pairwise.
namespace hyperion::regions {

TropSet tropical_sum(const TropSet& a, const TropSet& b);
ComplexRegionSet complex_sum(const ComplexRegionSet& a, const ComplexRegionSet& b);
PhaseSet phase_sum(const PhaseSet& a, const PhaseSet& b);

// Two arcs on one circle of the tropical complex hyperfield. Returns nullopt
// when the arcs hold an antipodal pair (the sum is then the whole closed disk),
// otherwise the closed hull arc.
std::optional<Arc> same_circle_sum(const Arc& a, const Arc& b);

// Set of angles reached by x ⊞ y in the phase hyperfield for x in `a`, y in `b`
// (both nonzero); `reaches_zero` is set when some pair is antipodal.
CircleSet phase_arc_sum(const Arc& a, const Arc& b, bool& reaches_zero);

}  // namespace hyperion::regions
