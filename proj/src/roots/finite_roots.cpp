#include "hyperion/error.hpp"
#include "hyperion/roots.hpp"

namespace hyperion {

RootReport finite_roots(const Polynomial& p) {
  auto elems = p.field().elements();
  if (!elems) throw CarrierMismatch("finite_roots needs a finite carrier");
  if (p.nvars() != 1) throw DimensionMismatch("finite_roots needs a univariate polynomial");
  RootReport report;
  report.degree = p.degree();
  report.exhaustive = true;
  for (const auto& a : *elems) {
    if (unsigned m = multiplicity(p, a); m > 0) {
      report.roots.push_back({a, m});
      report.total_multiplicity += m;
    }
  }
  return report;
}

}  // namespace hyperion
