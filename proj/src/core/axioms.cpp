#include "hyperion/axioms.hpp"

#include <functional>
#include <sstream>

#include "hyperion/error.hpp"
#include "hyperion/sampling.hpp"

namespace hyperion {

namespace {

std::string show(std::initializer_list<Element> xs) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (const auto& x : xs) {
    if (!first) os << ", ";
    first = false;
    os << to_string(x);
  }
  os << ')';
  return os.str();
}

class Checker {
 public:
  explicit Checker(const Hyperfield& h) : h_(h) {
    for (const char* name : {"zero_ne_one", "H0_zero_identity", "H1_unique_negative", "commutativity", "associativity",
                             "reversibility", "distributivity", "absorption", "multiplicative_group"}) {
      results_.push_back({name, true, 0, {}});
    }
  }

  void run(const Element& x, const Element& y, const Element& z) {
    check(2, [&] { return h_.hyperadd(h_.zero(), x) == h_.singleton(x); }, {x});

    check(3, [&] {
      if (!h_.hyperadd(x, h_.neg(x)).contains(h_.zero())) return false;
      // Any y that cancels x must be -x.
      return !h_.hyperadd(x, y).contains(h_.zero()) || h_.equal(y, h_.neg(x));
    }, {x, y});

    check(4, [&] { return h_.hyperadd(x, y) == h_.hyperadd(y, x); }, {x, y});

    check(5, [&] {
      ValueSet ref = h_.set_hyperadd(h_.hyperadd(x, y), h_.singleton(z));
      const Element* t[3] = {&x, &y, &z};
      for (int r = 0; r < 3; ++r) {
        const Element& a = *t[r];
        const Element& b = *t[(r + 1) % 3];
        const Element& c = *t[(r + 2) % 3];
        if (!(h_.set_hyperadd(h_.singleton(a), h_.hyperadd(b, c)) == ref)) return false;
        if (!(h_.set_hyperadd(h_.hyperadd(b, a), h_.singleton(c)) == ref)) return false;
      }
      return true;
    }, {x, y, z});

    check(6, [&] {
      Element ny = h_.neg(y);
      for (const Element& w : representatives(h_.hyperadd(y, z))) {
        if (!h_.hyperadd(w, ny).contains(z)) {
          last_extra_ = "member " + to_string(w);
          return false;
        }
      }
      return true;
    }, {y, z});

    check(7, [&] { return h_.scale(h_.hyperadd(y, z), x) == h_.hyperadd(h_.mul(x, y), h_.mul(x, z)); }, {x, y, z});

    check(8, [&] { return h_.equal(h_.mul(h_.zero(), x), h_.zero()) && h_.equal(h_.mul(x, h_.zero()), h_.zero()); },
          {x});

    check(9, [&] {
      if (!h_.equal(h_.mul(x, y), h_.mul(y, x))) return false;
      if (!h_.equal(h_.mul(h_.mul(x, y), z), h_.mul(x, h_.mul(y, z)))) return false;
      if (!h_.equal(h_.mul(h_.one(), x), x)) return false;
      if (!h_.equal(h_.mul(h_.neg(h_.one()), x), h_.neg(x))) return false;
      return h_.is_zero(x) || h_.equal(h_.mul(x, h_.inverse(x)), h_.one());
    }, {x, y, z});
  }

  void finish(AxiomReport& report) {
    check(0, [&] { return !h_.equal(h_.zero(), h_.one()); }, {});
    report.results = std::move(results_);
  }

 private:
  void check(std::size_t idx, const std::function<bool()>& test, std::initializer_list<Element> args) {
    AxiomResult& r = results_[idx];
    ++r.checked;
    last_extra_.clear();
    bool ok = false;
    try {
      ok = test();
    } catch (const Error& e) {
      last_extra_ = e.what();
    }
    if (!ok && r.passed) {
      r.passed = false;
      r.witness = show(args);
      if (!last_extra_.empty()) r.witness += ": " + last_extra_;
    }
  }

  const Hyperfield& h_;
  std::vector<AxiomResult> results_;
  std::string last_extra_;
};

}  // namespace

bool AxiomReport::all_passed() const {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

const AxiomResult& AxiomReport::result(const std::string& axiom) const {
  for (const auto& r : results) {
    if (r.axiom == axiom) return r;
  }
  throw UnknownName("no axiom named '" + axiom + "'");
}

AxiomReport check_axioms(const Hyperfield& h, std::size_t budget, std::uint64_t seed) {
  AxiomReport report;
  report.hyperfield = std::string(h.name());
  report.budget = budget;
  report.seed = seed;
  Checker checker(h);
  if (auto elems = h.elements()) {
    report.exhaustive = true;
    for (const auto& x : *elems) {
      for (const auto& y : *elems) {
        for (const auto& z : *elems) checker.run(x, y, z);
      }
    }
  } else {
    Rng rng(seed);
    for (std::size_t i = 0; i < budget; ++i) {
      Element x = random_element(h, rng);
      Element y = random_element(h, rng);
      Element z = random_element(h, rng);
      checker.run(x, y, z);
    }
  }
  checker.finish(report);
  return report;
}

}  // namespace hyperion
