#include "hyperion/cli.hpp"

#include <fstream>
#include <ostream>

#include "CLI11.hpp"

#include "hyperion/catalog.hpp"
#include "hyperion/error.hpp"
#include "hyperion/json_io.hpp"
#include "hyperion/svg.hpp"
#include "hyperion/text.hpp"
#include "hyperion/tolerance.hpp"

namespace hyperion {

namespace {

struct Options {
  std::string field;
  std::string hom;
  std::string poly;
  std::string at;
  std::string root;
  std::string target;
  std::string out_file;
  std::vector<std::string> pairs;
  std::size_t budget = kDefaultAxiomBudget;
  std::uint64_t seed = 0;
  unsigned degree = 3;
  unsigned threads = 1;
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

void require_tc(const Hyperfield& h) {
  if (h.carrier() != CarrierKind::PolarComplex) throw UnknownName("this command needs the TC hyperfield");
}

std::string certificate_text(const CertifyReport& c) {
  std::string s = "point " + to_string(c.point) + ": value " + to_string(c.value) + "; dominant exponents {";
  for (std::size_t i = 0; i < c.dominant.size(); ++i) s += (i ? "," : "") + std::to_string(c.dominant[i]);
  s += "}; ";
  if (c.fast_verdict) s += std::string("dominance test says ") + (*c.fast_verdict ? "root" : "not a root") + "; ";
  return s + "certification: " + (c.is_root ? "root" : "not a root") + "\n";
}

int cmd_eval(const Options& o, std::ostream& out) {
  const Hyperfield& h = lookup(o.field);
  Polynomial p = parse_polynomial(o.poly, h);
  EvalResult r = evaluate(p, parse_point(h, o.at));
  emit(out, to_json(r));
  return r.is_root ? kExitOk : kExitNegative;
}

int cmd_roots(const Options& o, std::ostream& out) {
  const Hyperfield& h = lookup(o.field);
  Polynomial p = parse_polynomial(o.poly, h, 1);
  if (h.is_finite()) {
    emit(out, to_json(finite_roots(p)));
  } else if (h.carrier() == CarrierKind::TropNum) {
    emit(out, to_json(tropical_roots(p)));
  } else if (h.carrier() == CarrierKind::PolarComplex) {
    // One lifted root per root of the tropicalization.
    RootReport trop = tropical_roots(pushforward(lookup_hom("eta"), p));
    Json roots = Json::array();
    for (const auto& r : trop.roots) {
      LiftResult lift = lift_root_eta(p, r.root);
      roots.push_back(Json{{"root", to_json(lift.a_tilde)},
                           {"tropical_root", to_json(r.root)},
                           {"tropical_multiplicity", r.multiplicity},
                           {"certified", lift.certificate.is_root}});
    }
    emit(out, Json{{"roots", std::move(roots)}, {"degree", p.degree()}, {"exhaustive", false}});
  } else {
    throw UnknownName("roots are not enumerable over " + o.field);
  }
  return kExitOk;
}

int cmd_mult(const Options& o, std::ostream& out) {
  const Hyperfield& h = lookup(o.field);
  Polynomial p = parse_polynomial(o.poly, h, 1);
  Element a = parse_element(h, o.at);
  unsigned m = 0;
  if (h.is_finite()) {
    m = multiplicity(p, a);
  } else if (h.carrier() == CarrierKind::TropNum) {
    for (const auto& r : tropical_roots(p).roots) {
      if (log_mags_equal(std::get<TropNum>(r.root).value, std::get<TropNum>(a).value)) m = r.multiplicity;
    }
  } else {
    throw UnknownName("multiplicities are not computable over " + o.field);
  }
  emit(out, Json{{"polynomial", to_string(p)}, {"at", to_json(a)}, {"multiplicity", m}});
  return kExitOk;
}

int cmd_push(const Options& o, std::ostream& out) {
  const Homomorphism& f = lookup_hom(o.hom);
  Polynomial p = parse_polynomial(o.poly, *f.domain);
  emit(out, Json{{"hom", f.name}, {"source", to_json(p)}, {"pushforward", to_json(pushforward(f, p))}});
  return kExitOk;
}

int cmd_lift(const Options& o, std::ostream& out, std::ostream& err) {
  const Hyperfield& h = lookup(o.field);
  require_tc(h);
  Polynomial p = parse_polynomial(o.poly, h, 1);
  LiftResult r = lift_root_eta(p, parse_element(tropical(), o.root));
  emit(out, to_json(r));
  err << certificate_text(r.certificate);
  return r.certificate.is_root ? kExitOk : kExitNegative;
}

int cmd_kapranov(const Options& o, std::ostream& out, std::ostream& err) {
  const Hyperfield& h = lookup(o.field);
  require_tc(h);
  Polynomial p = parse_polynomial(o.poly, h);
  LiftContext c = kapranov_lift(p, parse_point(tropical(), o.root));
  emit(out, to_json(c));
  std::string pt;
  for (const auto& x : c.point) pt += (pt.empty() ? "" : ", ") + to_string(x);
  err << "lifted point (" << pt << "): " << (c.evaluation.is_root ? "root" : "not a root") << ", eta image "
      << (c.certified || !c.evaluation.is_root ? "matches" : "differs") << "; certification: "
      << (c.certified ? "root" : "failed") << '\n';
  return c.certified ? kExitOk : kExitNegative;
}

int cmd_axioms(const Options& o, std::ostream& out) {
  AxiomReport r = check_axioms(lookup(o.field), o.budget, o.seed);
  emit(out, to_json(r));
  return r.all_passed() ? kExitOk : kExitNegative;
}

int cmd_homcheck(const Options& o, std::ostream& out) {
  HomReport r = hom_check(lookup_hom(o.hom), o.budget, o.seed);
  emit(out, to_json(r));
  return r.passed() ? kExitOk : kExitNegative;
}

int cmd_conjectures(const Options& o, std::ostream& out) {
  std::vector<ConjectureReport> reports;
  auto for_field = [&](const Hyperfield& h) {
    if (h.carrier() == CarrierKind::PolarComplex) {
      reports.push_back(tc_three_roots_witness());
    } else {
      reports.push_back(check_multiplicity_bound(h, o.degree, o.threads));
      reports.push_back(check_inheritance(h, o.degree, o.threads));
    }
  };
  if (o.target.empty()) {
    for_field(krasner());
    for_field(signs());
    for_field(tropical_complex());
    reports.push_back(check_pushforward_mult(lookup_hom("toK:S"), o.degree, o.threads));
    reports.push_back(check_pushforward_mult(lookup_hom("id:K"), o.degree, o.threads));
    reports.push_back(check_pushforward_mult(lookup_hom("toK:P"), o.degree, o.threads));
  } else {
    bool is_field = false;
    for (const Hyperfield* h : catalog()) is_field = is_field || h->name() == o.target;
    if (is_field) {
      for_field(lookup(o.target));
    } else {
      reports.push_back(check_pushforward_mult(lookup_hom(o.target), o.degree, o.threads));
    }
  }
  Json arr = Json::array();
  bool clean = true;
  for (const auto& r : reports) {
    arr.push_back(to_json(r));
    clean = clean && (!r.applicable || r.passed());
  }
  emit(out, Json{{"reports", std::move(arr)}});
  return clean ? kExitOk : kExitNegative;
}

int cmd_regions(const Options& o, std::ostream& out) {
  const Hyperfield& h = tropical_complex();
  std::vector<ElementPair> pairs;
  for (const auto& text : o.pairs) {
    auto pt = parse_point(h, text);
    if (pt.size() != 2) throw ParseError("a pair needs two TC literals separated by ';'", 0);
    pairs.emplace_back(pt[0], pt[1]);
  }
  if (pairs.empty()) pairs = figure_pairs();
  std::string svg = emit_regions(pairs);
  if (o.out_file.empty()) {
    out << svg;
    return kExitOk;
  }
  std::ofstream file(o.out_file);
  if (!file || !(file << svg)) throw Error("cannot write " + o.out_file);
  Json rows = Json::array();
  for (const auto& [z, w] : pairs) {
    rows.push_back(Json{{"z", to_json(z)}, {"w", to_json(w)}, {"sum", to_json(h.hyperadd(z, w))}});
  }
  emit(out, Json{{"svg", o.out_file}, {"rows", std::move(rows)}});
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperfield arithmetic, roots and lifting", "hyperion"};
  app.require_subcommand(1);
  Options o;

  auto field = [&](CLI::App* sub) { sub->add_option("hyperfield", o.field, "K, S, T, P, TC or Qtriv")->required(); };
  auto poly = [&](CLI::App* sub) { sub->add_option("polynomial", o.poly, "polynomial text")->required(); };

  auto* eval = app.add_subcommand("eval", "evaluate a polynomial at a point");
  field(eval);
  poly(eval);
  eval->add_option("--at", o.at, "point literal or tuple")->required();

  auto* roots = app.add_subcommand("roots", "roots of a univariate polynomial");
  field(roots);
  poly(roots);

  auto* mult = app.add_subcommand("mult", "multiplicity of a root");
  field(mult);
  poly(mult);
  mult->add_option("--at", o.at, "element literal")->required();

  auto* push = app.add_subcommand("push", "push a polynomial forward along a homomorphism");
  push->add_option("hom", o.hom, "homomorphism name")->required();
  poly(push);

  auto* lift = app.add_subcommand("lift", "lift a tropical root along eta");
  field(lift);
  poly(lift);
  lift->add_option("--root", o.root, "tropical root")->required();

  auto* kap = app.add_subcommand("kapranov", "lift a tropical point of a multivariate polynomial");
  field(kap);
  poly(kap);
  kap->add_option("--root", o.root, "tropical point, e.g. (0,-1.5)")->required();

  auto* axioms = app.add_subcommand("axioms", "check the hyperfield axioms");
  field(axioms);
  axioms->add_option("--budget", o.budget, "sampled triples for infinite carriers");
  axioms->add_option("--seed", o.seed, "random seed");

  auto* homcheck = app.add_subcommand("homcheck", "check a homomorphism");
  homcheck->add_option("hom", o.hom, "homomorphism name")->required();
  homcheck->add_option("--budget", o.budget, "sampled pairs for infinite domains");
  homcheck->add_option("--seed", o.seed, "random seed");

  auto* conj = app.add_subcommand("conjectures", "multiplicity bound, inheritance and push-forward sweeps");
  conj->add_option("target", o.target, "hyperfield or homomorphism; all when omitted");
  conj->add_option("--degree", o.degree, "largest degree enumerated");
  conj->add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 256u));
  conj->add_option("--seed", o.seed, "random seed (the sweeps are exhaustive)");

  auto* regions = app.add_subcommand("regions", "SVG paths of TC hyperaddition regions");
  regions->add_option("--pair", o.pairs, "two TC literals, e.g. \"(mag1@0;mag1@90)\"");
  regions->add_option("--out", o.out_file, "write the SVG here and print a JSON summary");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (roots->parsed()) return cmd_roots(o, out);
    if (mult->parsed()) return cmd_mult(o, out);
    if (push->parsed()) return cmd_push(o, out);
    if (lift->parsed()) return cmd_lift(o, out, err);
    if (kap->parsed()) return cmd_kapranov(o, out, err);
    if (axioms->parsed()) return cmd_axioms(o, out);
    if (homcheck->parsed()) return cmd_homcheck(o, out);
    if (conj->parsed()) return cmd_conjectures(o, out);
    if (regions->parsed()) return cmd_regions(o, out);
  } catch (const NotARoot& e) {
    err << "not a root: " << e.what() << '\n';
    return kExitNegative;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hyperion
