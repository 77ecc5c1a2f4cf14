#include <algorithm>
#include <map>
#include <string>

#include "hyperion/error.hpp"
#include "hyperion/roots.hpp"

namespace hyperion {

namespace {

class Search {
 public:
  Search(const Hyperfield& h, const Element& a, const std::vector<Element>& candidates)
      : h_(h), a_(a), candidates_(candidates) {}

  unsigned mult(const std::vector<Element>& p) {
    std::string key = key_of(p);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    unsigned best = 0;
    if (is_root(p)) {
      unsigned inner = 0;
      for (const auto& q : quotients(h_, p, a_, candidates_)) inner = std::max(inner, mult(q));
      best = 1 + inner;
    }
    memo_.emplace(std::move(key), best);
    return best;
  }

 private:
  bool is_root(const std::vector<Element>& p) const {
    if (p.size() <= 1) return false;
    std::vector<Element> terms;
    for (std::size_t i = 0; i < p.size(); ++i) terms.push_back(h_.mul(p[i], h_.pow(a_, static_cast<unsigned>(i))));
    return h_.hypersum(terms).contains(h_.zero());
  }

  static std::string key_of(const std::vector<Element>& p) {
    std::string key;
    for (const auto& c : p) key += to_string(c) + '|';
    return key;
  }

  const Hyperfield& h_;
  Element a_;
  const std::vector<Element>& candidates_;
  std::map<std::string, unsigned> memo_;
};

void extend(const Hyperfield& h, const std::vector<Element>& p, const Element& neg_a,
            const std::vector<Element>& candidates, std::vector<Element>& q, std::size_t i,
            std::vector<std::vector<Element>>& out) {
  // q[i] is fixed; choose q[i-1] so that c_i ∈ q_{i-1} ⊞ (-a)q_i.
  if (i == 0) {
    if (h.equal(p[0], h.mul(neg_a, q[0]))) out.push_back(q);
    return;
  }
  Element shifted = h.mul(neg_a, q[i]);
  for (const auto& x : candidates) {
    if (!h.hyperadd(x, shifted).contains(p[i])) continue;
    q[i - 1] = x;
    extend(h, p, neg_a, candidates, q, i - 1, out);
  }
}

}  // namespace

std::vector<std::vector<Element>> quotients(const Hyperfield& h, const std::vector<Element>& p, const Element& a,
                                            const std::vector<Element>& candidates) {
  std::vector<std::vector<Element>> out;
  if (p.size() < 2) return out;
  std::size_t d = p.size() - 1;
  std::vector<Element> q(d, h.zero());
  q[d - 1] = p[d];
  extend(h, p, h.neg(a), candidates, q, d - 1, out);
  return out;
}

unsigned multiplicity_with_candidates(const Polynomial& p, const Element& a, const std::vector<Element>& candidates) {
  if (p.nvars() != 1) throw DimensionMismatch("multiplicity needs a univariate polynomial");
  p.field().check_member(a);
  Search search(p.field(), a, candidates);
  return search.mult(p.dense());
}

unsigned multiplicity(const Polynomial& p, const Element& a) {
  auto elems = p.field().elements();
  if (!elems) throw CarrierMismatch("multiplicity is only enumerable over a finite carrier");
  return multiplicity_with_candidates(p, a, *elems);
}

}  // namespace hyperion
