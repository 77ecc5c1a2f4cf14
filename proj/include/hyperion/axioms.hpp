#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hyperion/hyperfield.hpp"

namespace hyperion {

struct AxiomResult {
  std::string axiom;
  bool passed = true;
  std::size_t checked = 0;
  std::string witness;  // first counterexample, empty on success
};

struct AxiomReport {
  std::string hyperfield;
  bool exhaustive = false;
  std::size_t budget = 0;
  std::uint64_t seed = 0;
  std::vector<AxiomResult> results;

  bool all_passed() const;
  const AxiomResult& result(const std::string& axiom) const;
};

inline constexpr std::size_t kDefaultAxiomBudget = 10000;

// Checks (H0), (H1), commutativity, associativity, reversibility,
// distributivity, absorption, the multiplicative group laws and 0 != 1.
// Finite carriers are checked on every triple; otherwise `budget` random
// triples are drawn from a generator seeded with `seed`.
AxiomReport check_axioms(const Hyperfield& h, std::size_t budget = kDefaultAxiomBudget, std::uint64_t seed = 0);

}  // namespace hyperion
