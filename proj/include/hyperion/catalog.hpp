#pragma once

#include <string_view>
#include <vector>

#include "hyperion/hyperfield.hpp"

namespace hyperion {

const Hyperfield& krasner();           // "K"
const Hyperfield& signs();             // "S"
const Hyperfield& tropical();          // "T"
const Hyperfield& phase();             // "P"
const Hyperfield& tropical_complex();  // "TC"
const Hyperfield& rationals();         // "Qtriv": ℚ with x ⊞ y = {x + y}

// All six instances in a fixed order: K, S, T, P, TC, Qtriv.
std::vector<const Hyperfield*> catalog();

// Throws UnknownName.
const Hyperfield& lookup(std::string_view name);

}  // namespace hyperion
