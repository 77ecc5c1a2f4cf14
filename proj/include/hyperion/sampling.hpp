#pragma once

#include <random>
#include <vector>

#include "hyperion/hyperfield.hpp"

namespace hyperion {

using Rng = std::mt19937_64;

// Random carrier element biased towards coincidences (equal magnitudes,
// antipodes, repeated tropical values, zero) so that the degenerate branches
// of hyperaddition are exercised.
Element random_element(const Hyperfield& h, Rng& rng);

// Random nonzero element.
Element random_nonzero(const Hyperfield& h, Rng& rng);

// A finite list of members of `set` touching every region: isolated points,
// closed endpoints, arc interiors, disk centres, boundaries and interiors.
std::vector<Element> representatives(const ValueSet& set);

}  // namespace hyperion
