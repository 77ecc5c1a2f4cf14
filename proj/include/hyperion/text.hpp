#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "hyperion/polynomial.hpp"

namespace hyperion {

// One coefficient or point literal over `h` (see format_coefficient). Over TC
// "re,im" and a bare real are accepted too; over P "1" and "-1".
Element parse_element(const Hyperfield& h, std::string_view text);

// A point: a single literal or a parenthesised tuple. Tuple entries are split
// on ';' when present and otherwise on ',' (except over TC, where ',' belongs
// to the "re,im" literal).
std::vector<Element> parse_point(const Hyperfield& h, std::string_view text);

// Terms joined by "+", each an optional coefficient followed by factors
// X<k> or X<k>^<e>. With `nvars` unset the variable count is the largest
// index used. Throws ParseError with the offending position, DuplicateTerm.
Polynomial parse_polynomial(std::string_view text, const Hyperfield& h, std::optional<std::size_t> nvars = std::nullopt);

}  // namespace hyperion
