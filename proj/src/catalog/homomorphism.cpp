#include "hyperion/homomorphism.hpp"

#include "hyperion/error.hpp"

namespace hyperion {

namespace {

std::vector<Element> rational_grid() {
  std::vector<Element> out;
  for (int p = -6; p <= 6; ++p) {
    for (int q = 1; q <= 3; ++q) out.push_back(ExactRational{Rational(p, q)});
  }
  return out;
}

void note(HomReport& r, bool& flag, const std::string& what, const Element& x, const Element& y) {
  if (!flag) return;
  flag = false;
  if (r.witness.empty()) r.witness = what + " fails at (" + to_string(x) + ", " + to_string(y) + ")";
}

void check_pair(const Homomorphism& f, const Element& x, const Element& y, HomReport& r) {
  const Hyperfield& d = *f.domain;
  const Hyperfield& c = *f.codomain;
  ++r.checked;
  Element fx = f(x);
  Element fy = f(y);
  if (!c.equal(f(d.mul(x, y)), c.mul(fx, fy))) note(r, r.multiplicative, "multiplicativity", x, y);
  ValueSet lhs = f.image(f.domain_sum ? f.domain_sum(x, y) : d.hyperadd(x, y));
  if (!lhs.subset_of(c.hyperadd(fx, fy))) note(r, r.additive_containment, "additive containment", x, y);
  if (!c.equal(f(f.canonical_lift(fx)), fx)) note(r, r.section_ok, "section", x, fx);
}

}  // namespace

HomReport hom_check(const Homomorphism& f, std::size_t budget, std::uint64_t seed) {
  HomReport r;
  r.name = f.name;
  const Hyperfield& d = *f.domain;
  const Hyperfield& c = *f.codomain;
  if (!c.equal(f(d.zero()), c.zero()) || !c.equal(f(d.one()), c.one())) {
    r.units_preserved = false;
    r.witness = "f(0) or f(1) is wrong";
  }
  std::optional<std::vector<Element>> grid = d.elements();
  if (!grid && d.carrier() == CarrierKind::ExactRational) grid = rational_grid();
  if (grid) {
    r.exhaustive = true;
    for (const auto& x : *grid) {
      for (const auto& y : *grid) check_pair(f, x, y, r);
    }
    return r;
  }
  Rng rng(seed);
  for (std::size_t i = 0; i < budget; ++i) {
    Element x = random_element(d, rng);
    Element y = random_element(d, rng);
    check_pair(f, x, y, r);
  }
  return r;
}

}  // namespace hyperion
