// Acceptance suite: prints one PASS/FAIL line per criterion and exits nonzero
// when any criterion fails or overruns its time limit.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "hyperion/axioms.hpp"
#include "hyperion/catalog.hpp"
#include "hyperion/cli.hpp"
#include "hyperion/conjectures.hpp"
#include "hyperion/error.hpp"
#include "hyperion/homomorphism.hpp"
#include "hyperion/json_io.hpp"
#include "hyperion/lifting.hpp"
#include "hyperion/roots.hpp"
#include "hyperion/sampling.hpp"
#include "hyperion/text.hpp"
#include "hyperion/tolerance.hpp"
#include "union_oracle.hpp"

using namespace hyperion;

namespace {

constexpr double kAngleTol = 1e-9;   // criterion 1
constexpr double kEtaTol = 1e-9;     // criterion 4
constexpr double kGridStep = 0.5;    // criterion 4
constexpr double kGridBox = 10.0;    // criterion 4
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;
};

const char* kWorked = "mag1@90 X1^2 + mag1@120 X1 + mag1@180";

Element tc(double log_mag, double angle) { return PolarComplex::polar(log_mag, angle); }

Polynomial random_univariate_tc(Rng& rng, unsigned max_degree) {
  const auto& h = tropical_complex();
  unsigned deg = std::uniform_int_distribution<unsigned>(1, max_degree)(rng);
  std::vector<Element> c;
  for (unsigned j = 0; j <= deg; ++j) c.push_back(random_element(h, rng));
  c[deg] = random_nonzero(h, rng);
  return Polynomial::univariate(h, c);
}

// ---------------------------------------------------------------- 1
Outcome worked_example() {
  auto p = parse_polynomial(kWorked, tropical_complex());
  auto r = lift_root_eta(p, TropNum{0.0});
  auto a = std::get<PolarComplex>(r.a_tilde);
  Outcome o;
  o.pass = std::fabs(a.log_mag) <= kAngleTol && std::fabs(a.angle - 7 * kPi / 6) <= kAngleTol && r.certificate.is_root;

  std::ostringstream out, err;
  int code = run({"lift", "TC", kWorked, "--root", "0"}, out, err);
  auto j = Json::parse(out.str());
  o.pass = o.pass && code == kExitOk && std::fabs(j["a_tilde"]["angle"].get<double>() - 7 * kPi / 6) <= kAngleTol &&
           err.str().find("certification: root") != std::string::npos;
  std::ostringstream d;
  d.precision(12);
  d << "log|a|=" << a.log_mag << " arg=" << a.angle << " (7pi/6=" << 7 * kPi / 6 << ")";
  o.detail = d.str();
  return o;
}

// ---------------------------------------------------------------- 2
Outcome three_roots() {
  auto p = parse_polynomial("1 X1^2 + 1 X1 + 1", tropical_complex());
  Outcome o;
  int found = 0;
  for (double angle : {kPi, kPi / 2, 3 * kPi / 2}) {
    auto r = certify_root_tc(p, tc(0.0, angle));
    if (r.is_root && r.consistent()) ++found;
  }
  auto w = tc_three_roots_witness();
  std::ostringstream out, err;
  int code = run({"conjectures", "TC"}, out, err);
  auto j = Json::parse(out.str());
  o.pass = found == 3 && !w.applicable && code == kExitOk && !j["reports"][0]["applicable"].get<bool>();
  o.detail = std::to_string(found) + "/3 certified; bound reported " + (w.applicable ? "applicable" : "inapplicable");
  return o;
}

// ---------------------------------------------------------------- 3
Outcome forward_inclusion() {
  std::size_t checked = 0;
  std::size_t contained = 0;
  for (const Hyperfield* h : {&signs(), &krasner()}) {
    const auto& f = lookup_hom("toK:" + std::string(h->name()));
    for (const auto& p : enumerate_polynomials(*h, 3)) {
      std::vector<std::vector<Element>> roots;
      for (const auto& r : finite_roots(p).roots) roots.push_back({r.root});
      auto rep = forward_inclusion_check(f, p, roots);
      checked += rep.checked;
      contained += rep.contained;
    }
  }
  const std::size_t finite_checked = checked;

  // η: roots from lifting plus roots met by structured random search.
  Rng rng(kSeed + 3);
  const auto& eta = lookup_hom("eta");
  const auto& h = tropical_complex();
  std::size_t cases = 0;
  while (cases < 200) {
    Polynomial p = random_univariate_tc(rng, 4);
    std::vector<std::vector<Element>> roots;
    for (const auto& t : tropical_roots(pushforward(eta, p)).roots) roots.push_back({lift_root_eta(p, t.root).a_tilde});
    for (int k = 0; k < 40; ++k) {
      Element a = random_element(h, rng);
      if (evaluate(p, a).is_root) roots.push_back({a});
    }
    auto rep = forward_inclusion_check(eta, p, roots);
    checked += rep.checked;
    contained += rep.contained;
    ++cases;
  }
  Outcome o;
  o.pass = checked > 0 && contained == checked;
  o.detail = std::to_string(contained) + "/" + std::to_string(checked) + " roots map to roots (" +
             std::to_string(finite_checked) + " from S,K degree<=3; rest from 200 eta cases)";
  return o;
}

// ---------------------------------------------------------------- 4
struct TropTerm {
  std::vector<double> exp;
  double c;
};

bool trop_root(const std::vector<TropTerm>& terms, const std::vector<double>& x, double tol) {
  double best = kBottom;
  for (const auto& t : terms) {
    double v = t.c;
    for (std::size_t i = 0; i < x.size(); ++i) v += t.exp[i] * x[i];
    best = std::max(best, v);
  }
  int hits = 0;
  for (const auto& t : terms) {
    double v = t.c;
    for (std::size_t i = 0; i < x.size(); ++i) v += t.exp[i] * x[i];
    if (std::fabs(v - best) <= tol) ++hits;
  }
  return hits >= 2;
}

Polynomial random_kapranov_poly(Rng& rng) {
  const auto& h = tropical_complex();
  for (;;) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    int want = std::uniform_int_distribution<int>(2, 6)(rng);
    Polynomial::Terms terms;
    for (int k = 0; k < want; ++k) {
      Exponent e(n);
      unsigned total = 0;
      for (auto& x : e) {
        x = std::uniform_int_distribution<unsigned>(0, 4 - total)(rng);
        total += x;
      }
      std::shuffle(e.begin(), e.end(), rng);
      double lm = 0.5 * std::uniform_int_distribution<int>(-4, 4)(rng);
      terms[e] = tc(lm, std::uniform_real_distribution<double>(0.0, kTwoPi)(rng));
    }
    if (terms.size() >= 2) return Polynomial(h, n, terms);
  }
}

std::vector<std::vector<double>> grid_roots(const Polynomial& p) {
  std::vector<TropTerm> terms;
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({std::vector<double>(e.begin(), e.end()), std::get<PolarComplex>(c).log_mag});
  }
  const std::size_t n = p.nvars();
  const int steps = static_cast<int>(2 * kGridBox / kGridStep);
  std::vector<std::vector<double>> roots;
  std::vector<int> idx(n, 0);
  for (;;) {
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = -kGridBox + idx[i] * kGridStep;
    if (trop_root(terms, x, 0.0)) roots.push_back(x);
    std::size_t k = 0;
    while (k < n && ++idx[k] > steps) idx[k++] = 0;
    if (k == n) break;
  }
  // Balance points of term pairs off the grid.
  auto in_box = [](const std::vector<double>& x) {
    return std::all_of(x.begin(), x.end(), [](double v) { return std::fabs(v) <= kGridBox; });
  };
  std::set<std::vector<double>> extra;
  if (n == 1) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      for (std::size_t j = i + 1; j < terms.size(); ++j) {
        double x = (terms[i].c - terms[j].c) / (terms[j].exp[0] - terms[i].exp[0]);
        extra.insert({x});
      }
    }
  } else if (n == 2) {
    std::vector<std::array<double, 3>> lines;  // a·x = b
    for (std::size_t i = 0; i < terms.size(); ++i) {
      for (std::size_t j = i + 1; j < terms.size(); ++j) {
        lines.push_back({terms[i].exp[0] - terms[j].exp[0], terms[i].exp[1] - terms[j].exp[1], terms[j].c - terms[i].c});
      }
    }
    for (std::size_t a = 0; a < lines.size(); ++a) {
      for (std::size_t b = a + 1; b < lines.size(); ++b) {
        double det = lines[a][0] * lines[b][1] - lines[a][1] * lines[b][0];
        if (det == 0) continue;
        double x = (lines[a][2] * lines[b][1] - lines[a][1] * lines[b][2]) / det;
        double y = (lines[a][0] * lines[b][2] - lines[a][2] * lines[b][0]) / det;
        extra.insert({x, y});
      }
    }
  }
  for (const auto& x : extra) {
    if (in_box(x) && trop_root(terms, x, 1e-12)) roots.push_back(x);
  }
  return roots;
}

Outcome kapranov_round_trip() {
  Rng rng(kSeed + 4);
  std::size_t lifted = 0;
  std::size_t total = 0;
  std::string first;
  for (int i = 0; i < 200; ++i) {
    Polynomial p = random_kapranov_poly(rng);
    for (const auto& x : grid_roots(p)) {
      ++total;
      std::vector<Element> a;
      for (double v : x) a.push_back(TropNum{v});
      bool ok = false;
      try {
        auto c = kapranov_lift(p, a);
        ok = c.certified;
        for (std::size_t k = 0; k < x.size() && ok; ++k) {
          ok = std::fabs(std::get<TropNum>(c.eta_image[k]).value - x[k]) <= kEtaTol;
        }
      } catch (const Error& e) {
        if (first.empty()) first = e.what();
      }
      if (ok) {
        ++lifted;
      } else if (first.empty()) {
        first = to_string(p);
      }
    }
  }
  Outcome o;
  o.pass = total > 0 && lifted == total;
  o.detail = std::to_string(lifted) + "/" + std::to_string(total) + " tropical roots of 200 polynomials lifted";
  if (!first.empty()) o.detail += "; first failure: " + first;
  return o;
}

// ---------------------------------------------------------------- 5
Outcome algebraic_closure() {
  Rng rng(kSeed + 5);
  const auto& eta = lookup_hom("eta");
  int ok = 0;
  for (int i = 0; i < 500; ++i) {
    Polynomial p = random_univariate_tc(rng, 6);
    auto roots = tropical_roots(pushforward(eta, p)).roots;
    if (roots.empty()) continue;
    auto r = lift_root_eta(p, roots.front().root);
    if (r.certificate.is_root && evaluate(p, r.a_tilde).is_root) ++ok;
  }
  return {ok == 500, std::to_string(ok) + "/500 polynomials with a certified root"};
}

// ---------------------------------------------------------------- 6
Outcome multiplicity_sweeps() {
  auto k = check_multiplicity_bound(krasner(), 3);
  auto s = check_multiplicity_bound(signs(), 3);
  Outcome o;
  o.pass = k.passed() && k.equalities == k.checked && k.checked == 15 && s.passed() && s.checked == 80;
  o.detail = "K: " + std::to_string(k.equalities) + "/" + std::to_string(k.checked) + " with sum = deg; S: " +
             std::to_string(s.violations.size()) + " violations over " + std::to_string(s.checked);
  return o;
}

// ---------------------------------------------------------------- 7
Outcome rac() {
  auto r = rac_counterexamples();
  Outcome o;
  o.pass = r.reproduced() && r.discriminant == -3 && r.sign_value_at_one.contains(FiniteSym{0});
  o.detail = std::string("S: 1 is a root, disc=") + to_string(r.discriminant) +
             "; P: 3pi/4 " + (r.phase_root ? "root" : "non-root") + ", pi/2 " +
             (r.phase_nonroot ? "non-root" : "root");
  return o;
}

// ---------------------------------------------------------------- 8
Outcome axioms_and_oracle() {
  static const std::vector<std::string> required{"commutativity", "associativity", "reversibility", "distributivity",
                                                 "absorption"};
  Outcome o;
  std::ostringstream d;
  for (const Hyperfield* h : {&krasner(), &signs()}) {
    auto r = check_axioms(*h);
    o.pass = o.pass && r.exhaustive && r.all_passed();
  }
  for (const Hyperfield* h : {&tropical(), &phase(), &tropical_complex()}) {
    auto r = check_axioms(*h, 10000, kSeed);
    for (const auto& name : required) {
      const auto& a = r.result(name);
      if (!a.passed || a.checked < 10000) {
        o.pass = false;
        d << h->name() << " " << name << " failed: " << a.witness << "; ";
      }
    }
  }
  std::size_t pairs = 0;
  std::size_t probes = 0;
  std::size_t disagreements = 0;
  for (const Hyperfield* h : {&krasner(), &signs(), &tropical(), &phase(), &tropical_complex()}) {
    auto g = oracle::compare_with_closed_form(*h, 10000, 1000, kSeed);
    pairs += g.pairs;
    probes += g.probes;
    disagreements += g.disagreements;
    if (g.disagreements) d << h->name() << ": " << g.witness << "; ";
  }
  o.pass = o.pass && disagreements == 0;
  d << "axioms pass (K,S exhaustive; T,P,TC 1e4 triples); oracle " << disagreements << " disagreements over "
    << pairs << " pairs, " << probes << " probes";
  o.detail = d.str();
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "worked-example lift", 1.0, worked_example},
      {2, "three roots over TC", 1.0, three_roots},
      {3, "forward inclusion", 60.0, forward_inclusion},
      {4, "Kapranov round trip", 300.0, kapranov_round_trip},
      {5, "algebraic closure", 120.0, algebraic_closure},
      {6, "multiplicity sweeps", 300.0, multiplicity_sweeps},
      {7, "non-RAC witnesses", 1.0, rac},
      {8, "axioms and region oracle", 300.0, axioms_and_oracle},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = o.pass && s < c.limit_s;
    if (!pass) ++failed;
    std::printf("%s C%d %s: %s [%.3f s, limit %.0f s]\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), s,
                c.limit_s);
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
