#include "hyperion/hyperfield.hpp"

#include "hyperion/error.hpp"

namespace hyperion {

bool Hyperfield::equal(const Element& x, const Element& y) const {
  check_member(x);
  check_member(y);
  return approx_equal(x, y);
}

Element Hyperfield::pow(const Element& x, unsigned exponent) const {
  check_member(x);
  Element result = one();
  Element base = x;
  while (exponent > 0) {
    if (exponent & 1u) result = mul(result, base);
    exponent >>= 1u;
    if (exponent > 0) base = mul(base, base);
  }
  return result;
}

bool Hyperfield::contains(const ValueSet& set, const Element& x) const {
  check_member(x);
  if (set.family() != family()) throw FamilyMismatch("value set does not belong to " + std::string(name()));
  return set.contains(x);
}

ValueSet Hyperfield::hypersum(std::span<const Element> xs) const {
  if (xs.empty()) throw EmptyHypersum("hypersum of an empty list");
  ValueSet acc = singleton(xs.front());
  for (std::size_t i = 1; i < xs.size(); ++i) acc = set_hyperadd(acc, singleton(xs[i]));
  return acc;
}

}  // namespace hyperion
