#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hyperion/element.hpp"

namespace hyperion {

using ElementPair = std::pair<Element, Element>;

// The three hyperaddition cases in 𝕋ℂ: antipodal, different magnitudes,
// equal magnitudes.
std::vector<ElementPair> figure_pairs();

// One row per pair: the operands z, w on the left and z ⊞ w on the right as
// vector paths (filled disk, arc stroke or point markers). Output is a
// deterministic SVG document.
std::string emit_regions(const std::vector<ElementPair>& pairs);

}  // namespace hyperion
