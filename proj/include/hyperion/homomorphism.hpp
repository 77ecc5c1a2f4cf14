#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hyperion/hyperfield.hpp"
#include "hyperion/sampling.hpp"

namespace hyperion {

// A hyperfield homomorphism f: domain -> codomain together with a chosen
// section of f on its image and a way to draw points from each fibre.
struct Homomorphism {
  std::string name;
  const Hyperfield* domain = nullptr;
  const Hyperfield* codomain = nullptr;
  std::function<Element(const Element&)> map;
  // map(canonical_lift(y)) == y for every y in the image.
  std::function<Element(const Element&)> canonical_lift;
  std::string fiber_description;
  std::function<Element(const Element&, Rng&)> fiber_sampler;
  // Exact image of a value set of the domain.
  std::function<ValueSet(const ValueSet&)> image;
  // Addition of the source structure when it is not domain->hyperadd: ph is
  // defined on the field ℂ, which shares the polar carrier of 𝕋ℂ.
  std::function<ValueSet(const Element&, const Element&)> domain_sum;

  Element operator()(const Element& x) const { return map(x); }
};

// toK:<H> for every catalogued H, id:<H>, sgn, ph and eta.
const std::vector<Homomorphism>& hom_catalog();

// Throws UnknownName.
const Homomorphism& lookup_hom(const std::string& name);

struct HomReport {
  std::string name;
  bool exhaustive = false;
  std::size_t checked = 0;
  bool units_preserved = true;      // f(0) = 0 and f(1) = 1
  bool multiplicative = true;       // f(xy) = f(x) f(y)
  bool additive_containment = true; // f(x ⊞ y) ⊆ f(x) ⊞ f(y)
  bool section_ok = true;           // f(canonical_lift(y)) = y
  std::string witness;

  bool passed() const { return units_preserved && multiplicative && additive_containment && section_ok; }
};

// Exhaustive over pairs when the domain is finite, over a rational grid for
// Qtriv, otherwise `budget` random pairs.
HomReport hom_check(const Homomorphism& f, std::size_t budget = 10000, std::uint64_t seed = 0);

}  // namespace hyperion
