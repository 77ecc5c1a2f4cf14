#include "hyperion/conjectures.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "hyperion/catalog.hpp"
#include "hyperion/error.hpp"
#include "hyperion/roots.hpp"
#include "hyperion/tolerance.hpp"

namespace hyperion {

namespace {

// Runs fn(i) for i in [0, n) over `threads` workers; results keep index order.
template <typename R>
std::vector<R> parallel_map(std::size_t n, unsigned threads, const std::function<R(std::size_t)>& fn) {
  std::vector<R> out(n);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += threads) out[i] = fn(i);
    });
  }
  for (auto& th : pool) th.join();
  return out;
}

const std::vector<Element>& finite_carrier(const Hyperfield& h) {
  static std::map<const Hyperfield*, std::vector<Element>> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto it = cache.find(&h);
  if (it != cache.end()) return it->second;
  auto elems = h.elements();
  if (!elems) throw CarrierMismatch(std::string(h.name()) + " is not finite");
  return cache.emplace(&h, std::move(*elems)).first->second;
}

bool factor_out(const Hyperfield& h, const std::vector<Element>& p, std::vector<Element> roots,
                std::vector<Element>* witness) {
  if (roots.empty()) {
    if (witness) *witness = p;
    return true;
  }
  const auto& carrier = finite_carrier(h);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    bool repeated = false;
    for (std::size_t j = 0; j < k; ++j) repeated = repeated || h.equal(roots[j], roots[k]);
    if (repeated) continue;
    std::vector<Element> rest = roots;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
    for (const auto& q : quotients(h, p, roots[k], carrier)) {
      if (factor_out(h, q, rest, witness)) return true;
    }
  }
  return false;
}

std::string show_list(const std::vector<Element>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + to_string(xs[i]);
  return s + "]";
}

// Every nonempty sub-multiset of `roots` (grouped by value) of size <= cap.
std::vector<std::vector<Element>> sub_multisets(const RootReport& r, unsigned cap) {
  std::vector<std::vector<Element>> out{{}};
  for (const auto& e : r.roots) {
    std::vector<std::vector<Element>> next;
    for (const auto& base : out) {
      for (unsigned k = 0; k <= e.multiplicity && base.size() + k <= cap; ++k) {
        auto s = base;
        s.insert(s.end(), k, e.root);
        next.push_back(std::move(s));
      }
    }
    out = std::move(next);
  }
  out.erase(out.begin());  // the empty multiset
  return out;
}

std::vector<Violation> inheritance_failures(const Polynomial& p) {
  std::vector<Violation> out;
  RootReport r = finite_roots(p);
  for (const auto& subset : sub_multisets(r, p.degree())) {
    if (!inheritance_witness(p, subset)) out.push_back({to_string(p), "no quotient for roots " + show_list(subset)});
  }
  return out;
}

}  // namespace

std::vector<Polynomial> enumerate_polynomials(const Hyperfield& h, unsigned degree_max) {
  const auto& carrier = finite_carrier(h);
  std::vector<Polynomial> out;
  for (unsigned d = 0; d <= degree_max; ++d) {
    std::vector<std::size_t> idx(d + 1, 0);
    for (;;) {
      std::vector<Element> coeffs;
      for (auto i : idx) coeffs.push_back(carrier[i]);
      if (!h.is_zero(coeffs.back())) out.push_back(Polynomial::univariate(h, coeffs));
      std::size_t k = 0;
      while (k <= d && ++idx[k] == carrier.size()) idx[k++] = 0;
      if (k > d) break;
    }
  }
  return out;
}

ConjectureReport check_multiplicity_bound(const Hyperfield& h, unsigned degree_max, unsigned threads) {
  ConjectureReport report;
  report.check = "multiplicity_bound";
  report.hyperfield = std::string(h.name());
  report.degree_max = degree_max;
  if (!h.is_finite()) {
    report.applicable = false;
    report.note = "infinite carrier: not enumerable";
    return report;
  }
  auto polys = enumerate_polynomials(h, degree_max);
  auto totals = parallel_map<unsigned>(polys.size(), threads,
                                       [&](std::size_t i) { return finite_roots(polys[i]).total_multiplicity; });
  for (std::size_t i = 0; i < polys.size(); ++i) {
    unsigned deg = polys[i].degree();
    if (totals[i] == deg) ++report.equalities;
    if (totals[i] > deg) {
      report.violations.push_back(
          {to_string(polys[i]), "sum of multiplicities " + std::to_string(totals[i]) + " > degree " + std::to_string(deg)});
    }
  }
  report.checked = polys.size();
  return report;
}

bool inheritance_witness(const Polynomial& p, const std::vector<Element>& roots, std::vector<Element>* witness) {
  if (p.nvars() != 1) throw DimensionMismatch("inheritance needs a univariate polynomial");
  return factor_out(p.field(), p.dense(), roots, witness);
}

ConjectureReport check_inheritance(const Hyperfield& h, unsigned degree_max, unsigned threads) {
  ConjectureReport report;
  report.check = "inheritance";
  report.hyperfield = std::string(h.name());
  report.degree_max = degree_max;
  if (!h.is_finite()) {
    report.applicable = false;
    report.note = "infinite carrier: not enumerable";
    return report;
  }
  auto polys = enumerate_polynomials(h, degree_max);
  auto failures = parallel_map<std::vector<Violation>>(polys.size(), threads,
                                                       [&](std::size_t i) { return inheritance_failures(polys[i]); });
  for (auto& f : failures) report.violations.insert(report.violations.end(), f.begin(), f.end());
  report.checked = polys.size();
  return report;
}

ConjectureReport check_pushforward_mult(const Homomorphism& f, unsigned degree_max, unsigned threads) {
  ConjectureReport report;
  report.check = "pushforward_multiplicity";
  report.hyperfield = f.name;
  report.degree_max = degree_max;
  if (!f.domain->is_finite() || !f.codomain->is_finite()) {
    report.applicable = false;
    report.note = "infinite carrier: not checkable exhaustively";
    return report;
  }
  const auto& targets = finite_carrier(*f.codomain);
  auto polys = enumerate_polynomials(*f.domain, degree_max);
  auto cases = parallel_map<std::vector<PushforwardCase>>(polys.size(), threads, [&](std::size_t i) {
    const Polynomial& p = polys[i];
    RootReport roots = finite_roots(p);
    bool hypotheses = roots.total_multiplicity <= p.degree() && inheritance_failures(p).empty();
    Polynomial pushed = pushforward(f, p);
    std::vector<PushforwardCase> out;
    for (const auto& b : targets) {
      PushforwardCase c;
      c.polynomial = to_string(p);
      c.b = to_string(b);
      c.pushed_mult = multiplicity(pushed, b);
      for (const auto& r : roots.roots) {
        if (f.codomain->equal(f(r.root), b)) c.fibre_mult += r.multiplicity;
      }
      c.holds = c.pushed_mult >= c.fibre_mult;
      c.hypotheses = hypotheses;
      out.push_back(std::move(c));
    }
    return out;
  });
  std::size_t unexplained = 0;
  for (auto& per : cases) {
    for (auto& c : per) {
      if (!c.holds && c.hypotheses) {
        report.violations.push_back({c.polynomial, "mult at " + c.b + " is " + std::to_string(c.pushed_mult) +
                                                       " < fibre sum " + std::to_string(c.fibre_mult)});
      }
      if (!c.holds && !c.hypotheses) ++unexplained;
      report.cases.push_back(std::move(c));
    }
  }
  report.checked = polys.size();
  if (unexplained > 0) {
    report.note = std::to_string(unexplained) + " failures where the domain lacks the bound or inheritance";
  }
  return report;
}

ConjectureReport tc_three_roots_witness() {
  const Hyperfield& h = tropical_complex();
  ConjectureReport report;
  report.check = "multiplicity_bound";
  report.hyperfield = "TC";
  report.degree_max = 2;
  Polynomial p = Polynomial::univariate(h, {h.one(), h.one(), h.one()});
  std::vector<Element> roots{PolarComplex::polar(0.0, kPi), PolarComplex::polar(0.0, kPi / 2),
                             PolarComplex::polar(0.0, 3 * kPi / 2)};
  std::vector<Element> certified;
  for (const auto& a : roots) {
    if (certify_root_tc(p, a).is_root) certified.push_back(a);
  }
  report.checked = roots.size();
  if (certified.size() > p.degree()) {
    report.applicable = false;
    report.note = "bound inapplicable: " + std::to_string(certified.size()) + " distinct roots of a degree " +
                  std::to_string(p.degree()) + " polynomial";
    report.violations.push_back({to_string(p), "distinct roots " + show_list(certified)});
  }
  return report;
}

}  // namespace hyperion
