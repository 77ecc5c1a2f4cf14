#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hyperion/element.hpp"
#include "hyperion/value_set.hpp"

namespace hyperion {

enum class CarrierKind { FiniteSym, TropNum, PolarComplex, Phase, ExactRational };

enum class EqualityPolicy { Exact, Toleranced };

// A hyperfield (H, ⊙, ⊞, 1, 0). Instances are immutable singletons obtained
// from the catalog; every operation is a pure function of its arguments.
class Hyperfield {
 public:
  virtual ~Hyperfield() = default;

  virtual std::string_view name() const = 0;
  virtual CarrierKind carrier() const = 0;
  virtual Family family() const = 0;
  virtual EqualityPolicy equality_policy() const = 0;

  virtual Element zero() const = 0;
  virtual Element one() const = 0;

  // Throws CarrierMismatch unless `x` is an element of this carrier.
  virtual void check_member(const Element& x) const = 0;

  virtual Element neg(const Element& x) const = 0;
  virtual Element mul(const Element& x, const Element& y) const = 0;
  // Throws DivisionByZero for the zero element.
  virtual Element inverse(const Element& x) const = 0;

  virtual ValueSet hyperadd(const Element& x, const Element& y) const = 0;
  virtual ValueSet set_hyperadd(const ValueSet& a, const ValueSet& b) const = 0;
  // {c ⊙ s : s ∈ set}.
  virtual ValueSet scale(const ValueSet& set, const Element& c) const = 0;
  virtual ValueSet singleton(const Element& x) const = 0;

  // Whole carrier for finite hyperfields, nullopt otherwise.
  virtual std::optional<std::vector<Element>> elements() const { return std::nullopt; }

  bool is_finite() const { return elements().has_value(); }
  bool equal(const Element& x, const Element& y) const;
  bool is_zero(const Element& x) const { return equal(x, zero()); }
  Element pow(const Element& x, unsigned exponent) const;
  bool contains(const ValueSet& set, const Element& x) const;

  // x₁ ⊞ ... ⊞ x_k as a left fold of set_hyperadd; throws EmptyHypersum.
  ValueSet hypersum(std::span<const Element> xs) const;
};

}  // namespace hyperion
