#include <algorithm>

#include "hyperion/catalog.hpp"
#include "hyperion/error.hpp"
#include "hyperion/lifting.hpp"
#include "hyperion/tolerance.hpp"

namespace hyperion {

LiftContext kapranov_lift(const Polynomial& p, std::span<const Element> a) {
  const Hyperfield& h = p.field();
  if (h.carrier() != CarrierKind::PolarComplex) throw CarrierMismatch("kapranov_lift needs a polynomial over TC");
  if (a.size() != p.nvars()) throw DimensionMismatch("target point has the wrong dimension");
  const Homomorphism& eta = lookup_hom("eta");
  Polynomial trop = pushforward(eta, p);
  if (!evaluate(trop, a).is_root) throw NotARoot("target is not a root of the tropicalization");

  std::size_t n = p.nvars();
  std::vector<Element> lambda(n);
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < n; ++i) {
    lambda[i] = eta.canonical_lift(a[i]);
    if (!std::get<TropNum>(a[i]).is_bottom()) active.push_back(i);
  }

  // Terms not involving a zero coordinate, projected onto the active ones.
  Polynomial::Terms reduced;
  for (const auto& [e, c] : p.terms()) {
    bool survives = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (e[i] > 0 && std::get<TropNum>(a[i]).is_bottom()) survives = false;
    }
    if (!survives) continue;
    Exponent f;
    for (std::size_t i : active) f.push_back(e[i]);
    reduced.emplace(std::move(f), c);
  }

  std::vector<Element> point = lambda;
  std::vector<long long> direction;
  std::optional<LineRestriction> pullback;
  std::optional<LiftResult> lift;
  if (!reduced.empty() && !active.empty()) {
    Polynomial sub(h, active.size(), std::move(reduced));
    std::vector<Exponent> support;
    for (const auto& [e, c] : sub.terms()) support.push_back(e);
    direction = choose_direction(support);
    std::vector<Element> sub_lambda;
    for (std::size_t i : active) sub_lambda.push_back(lambda[i]);
    pullback = restrict_to_line(sub, sub_lambda, direction);
    lift = lift_root_eta(pullback->poly, TropNum{0.0});
    for (std::size_t k = 0; k < active.size(); ++k) {
      std::size_t i = active[k];
      point[i] = h.mul(lambda[i], h.pow(lift->a_tilde, static_cast<unsigned>(direction[k])));
    }
  } else if (!reduced.empty()) {
    throw NotARoot("only a constant term survives at the target");
  }

  EvalResult value = evaluate(p, point);
  std::vector<Element> image;
  bool matches = true;
  for (std::size_t i = 0; i < n; ++i) {
    image.push_back(eta(point[i]));
    matches = matches && log_mags_equal(std::get<TropNum>(image[i]).value, std::get<TropNum>(a[i]).value);
  }
  bool certified = value.is_root && matches;
  return {p,
          trop,
          std::vector<Element>(a.begin(), a.end()),
          std::move(active),
          std::move(lambda),
          std::move(direction),
          std::move(pullback),
          std::move(lift),
          std::move(point),
          std::move(value),
          std::move(image),
          certified};
}

}  // namespace hyperion
