#include "hyperion/error.hpp"
#include "hyperion/roots.hpp"
#include "hyperion/tolerance.hpp"

namespace hyperion {

CertifyReport certify_root_tc(const Polynomial& p, const Element& a) {
  const Hyperfield& h = p.field();
  if (h.carrier() != CarrierKind::PolarComplex) throw CarrierMismatch("certify_root_tc needs a polynomial over TC");
  if (p.nvars() != 1) throw DimensionMismatch("certify_root_tc needs a univariate polynomial");

  EvalResult full = evaluate(p, a);
  CertifyReport report{a, {}, false, std::nullopt, full.is_root, std::move(full.value)};

  std::vector<Element> values = monomial_values(p, std::span<const Element>(&a, 1));
  std::vector<unsigned> exps;
  for (const auto& [e, c] : p.terms()) exps.push_back(e[0]);

  double top = kBottom;
  double top_pos = kBottom;
  for (std::size_t k = 0; k < values.size(); ++k) {
    double lm = std::get<PolarComplex>(values[k]).log_mag;
    top = std::max(top, lm);
    if (exps[k] > 0) top_pos = std::max(top_pos, lm);
  }
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (log_mags_equal(std::get<PolarComplex>(values[k]).log_mag, top)) report.dominant.push_back(exps[k]);
  }

  Element c0 = p.coefficient({0});
  double lm0 = std::get<PolarComplex>(c0).log_mag;
  if (top_pos != kBottom && (lm0 <= top_pos || log_mags_equal(lm0, top_pos))) {
    std::vector<Element> dominant_terms;
    for (std::size_t k = 0; k < values.size(); ++k) {
      if (exps[k] > 0 && log_mags_equal(std::get<PolarComplex>(values[k]).log_mag, top_pos)) {
        dominant_terms.push_back(values[k]);
      }
    }
    report.fast_path = true;
    report.fast_verdict = h.hypersum(dominant_terms).contains(h.neg(c0));
  }
  return report;
}

}  // namespace hyperion
