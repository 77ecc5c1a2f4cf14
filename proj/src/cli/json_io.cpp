#include "hyperion/json_io.hpp"

#include <cmath>

namespace hyperion {

Json number_json(double v) {
  if (v == kBottom) return "-inf";
  return v;
}

Json to_json(const Element& x) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FiniteSym>) {
          return v.value;
        } else if constexpr (std::is_same_v<T, TropNum>) {
          return number_json(v.value);
        } else if constexpr (std::is_same_v<T, PolarComplex>) {
          return Json{{"log_mag", number_json(v.log_mag)}, {"angle", v.angle}};
        } else if constexpr (std::is_same_v<T, Phase>) {
          if (v.zero) return Json{{"zero", true}};
          return Json{{"angle", v.angle}};
        } else {
          return to_string(v.value);
        }
      },
      x);
}

Json to_json(const ValueSet& s) {
  Json regions = Json::array();
  for (const Region& r : s.regions()) {
    Json j;
    switch (r.kind) {
      case RegionKind::Point:
        j["kind"] = "point";
        j["value"] = to_json(r.point);
        break;
      case RegionKind::DownRay:
        j["kind"] = "downray";
        j["top"] = number_json(r.level);
        break;
      case RegionKind::Disk:
        j["kind"] = "disk";
        j["log_radius"] = number_json(r.level);
        break;
      case RegionKind::Arc:
        j["kind"] = "arc";
        if (s.family() == Family::Complex) j["log_radius"] = number_json(r.level);
        j["theta_lo"] = r.theta_lo;
        j["theta_hi"] = r.theta_hi;
        break;
    }
    j["open_lo"] = r.open_lo;
    j["open_hi"] = r.open_hi;
    regions.push_back(std::move(j));
  }
  return Json{{"family", std::string(family_name(s.family()))}, {"regions", std::move(regions)}};
}

Json to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exponent", e}, {"coefficient", to_json(c)}});
  return Json{{"hyperfield", std::string(p.field().name())},
              {"nvars", p.nvars()},
              {"text", to_string(p)},
              {"terms", std::move(terms)}};
}

Json to_json(const EvalResult& r) { return Json{{"value", to_json(r.value)}, {"is_root", r.is_root}}; }

Json to_json(const RootReport& r) {
  Json roots = Json::array();
  for (const auto& e : r.roots) roots.push_back(Json{{"root", to_json(e.root)}, {"multiplicity", e.multiplicity}});
  return Json{{"roots", std::move(roots)},
              {"total_multiplicity", r.total_multiplicity},
              {"degree", r.degree},
              {"exhaustive", r.exhaustive}};
}

Json to_json(const CertifyReport& r) {
  Json j{{"point", to_json(r.point)}, {"dominant", r.dominant}, {"fast_path", r.fast_path}};
  j["fast_verdict"] = r.fast_verdict ? Json(*r.fast_verdict) : Json(nullptr);
  j["is_root"] = r.is_root;
  j["value"] = to_json(r.value);
  return j;
}

Json to_json(const AxiomReport& r) {
  Json results = Json::array();
  for (const auto& a : r.results) {
    results.push_back(Json{{"axiom", a.axiom}, {"passed", a.passed}, {"checked", a.checked}, {"witness", a.witness}});
  }
  return Json{{"hyperfield", r.hyperfield}, {"exhaustive", r.exhaustive}, {"budget", r.budget},
              {"seed", r.seed},             {"all_passed", r.all_passed()}, {"results", std::move(results)}};
}

Json to_json(const HomReport& r) {
  return Json{{"hom", r.name},
              {"exhaustive", r.exhaustive},
              {"checked", r.checked},
              {"units_preserved", r.units_preserved},
              {"multiplicative", r.multiplicative},
              {"additive_containment", r.additive_containment},
              {"section_ok", r.section_ok},
              {"passed", r.passed()},
              {"witness", r.witness}};
}

Json to_json(const ConjectureReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back(Json{{"polynomial", v.polynomial}, {"detail", v.detail}});
  Json j{{"check", r.check},
         {"hyperfield", r.hyperfield},
         {"degree_max", r.degree_max},
         {"checked", r.checked},
         {"violations", std::move(violations)},
         {"applicable", r.applicable}};
  if (r.check == "multiplicity_bound") j["equalities"] = r.equalities;
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.cases.empty()) {
    Json cases = Json::array();
    for (const auto& c : r.cases) {
      cases.push_back(Json{{"polynomial", c.polynomial},
                           {"b", c.b},
                           {"pushed_mult", c.pushed_mult},
                           {"fibre_mult", c.fibre_mult},
                           {"holds", c.holds},
                           {"hypotheses", c.hypotheses}});
    }
    j["cases"] = std::move(cases);
  }
  return j;
}

Json to_json(const LiftResult& r) {
  Json j{{"a_tilde", to_json(r.a_tilde)}};
  j["t"] = r.t ? Json(*r.t) : Json(nullptr);
  j["t_prime"] = r.t_prime ? Json(*r.t_prime) : Json(nullptr);
  j["tropical_dominant"] = r.tropical_dominant;
  j["certificate"] = to_json(r.certificate);
  return j;
}

Json to_json(const LiftContext& c) {
  auto list = [](const std::vector<Element>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(to_json(x));
    return a;
  };
  Json j{{"original", to_json(c.original)},
         {"tropicalization", to_json(c.tropicalization)},
         {"target", list(c.target)},
         {"active", c.active},
         {"lambda", list(c.lambda)},
         {"direction", c.direction}};
  if (c.pullback) {
    j["pullback"] = to_json(c.pullback->poly);
    j["offset"] = c.pullback->offset;
  } else {
    j["pullback"] = nullptr;
    j["offset"] = nullptr;
  }
  j["lift"] = c.lift ? to_json(*c.lift) : Json(nullptr);
  j["point"] = list(c.point);
  j["evaluation"] = to_json(c.evaluation);
  j["eta_image"] = list(c.eta_image);
  j["certified"] = c.certified;
  return j;
}

Json to_json(const InclusionReport& r) {
  return Json{{"hom", r.hom},           {"checked", r.checked},   {"contained", r.contained},
              {"skipped", r.skipped},   {"failures", r.failures}, {"passed", r.passed()}};
}

Json to_json(const RacReport& r) {
  return Json{{"sign",
               {{"polynomial", r.sign_polynomial},
                {"value_at_1", to_json(r.sign_value_at_one)},
                {"is_root", r.sign_root},
                {"discriminant", to_string(r.discriminant)},
                {"rational_root_exists", r.rational_root_exists}}},
              {"phase",
               {{"polynomial", "1 X1^2 + 1 X1 + 1"},
                {"value_at_3pi_4", to_json(r.phase_value_root)},
                {"root_at_3pi_4", r.phase_root},
                {"value_at_pi_2", to_json(r.phase_value_nonroot)},
                {"root_at_pi_2", !r.phase_nonroot}}},
              {"reproduced", r.reproduced()}};
}

}  // namespace hyperion
