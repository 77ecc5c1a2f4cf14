#include "hyperion/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "hyperion/error.hpp"
#include "hyperion/tolerance.hpp"

namespace hyperion {

Polynomial::Polynomial(const Hyperfield& field, std::size_t nvars, Terms terms) : field_(&field), nvars_(nvars) {
  if (nvars == 0) throw DimensionMismatch("a polynomial needs at least one variable");
  for (auto& [e, c] : terms) {
    if (e.size() != nvars) throw DimensionMismatch("exponent vector length differs from the number of variables");
    field.check_member(c);
    if (!field.is_zero(c)) terms_.emplace(e, std::move(c));
  }
  if (terms_.empty()) throw DegeneratePolynomial("polynomial has no nonzero coefficient");
}

Polynomial Polynomial::univariate(const Hyperfield& field, const std::vector<Element>& coeffs) {
  Terms terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i) terms.emplace(Exponent{static_cast<unsigned>(i)}, coeffs[i]);
  return Polynomial(field, 1, std::move(terms));
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
  return d;
}

Element Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? field_->zero() : it->second;
}

std::vector<Element> Polynomial::dense() const {
  if (nvars_ != 1) throw DimensionMismatch("dense() needs a univariate polynomial");
  std::vector<Element> out(degree() + 1, field_->zero());
  for (const auto& [e, c] : terms_) out[e[0]] = c;
  return out;
}

unsigned Polynomial::min_exponent() const {
  if (nvars_ != 1) throw DimensionMismatch("min_exponent() needs a univariate polynomial");
  return terms_.begin()->first[0];
}

bool approx_equal(const Polynomial& p, const Polynomial& q) {
  if (&p.field() != &q.field() || p.nvars() != q.nvars() || p.size() != q.size()) return false;
  auto it = q.terms().begin();
  for (const auto& [e, c] : p.terms()) {
    if (e != it->first || !approx_equal(c, it->second)) return false;
    ++it;
  }
  return true;
}

namespace {

std::string shortest(double v) {
  char buf[32];
  for (int prec = 6; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::string degrees(double angle) {
  double deg = angle * 180.0 / kPi;
  double rounded = std::round(deg * 1e9) / 1e9;
  return shortest(std::abs(rounded - deg) < 1e-9 ? rounded : deg);
}

}  // namespace

std::string format_coefficient(const Element& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FiniteSym>) {
          return std::to_string(v.value);
        } else if constexpr (std::is_same_v<T, TropNum>) {
          return v.is_bottom() ? "-inf" : shortest(v.value);
        } else if constexpr (std::is_same_v<T, PolarComplex>) {
          return v.is_zero() ? "0" : "mag" + shortest(std::exp(v.log_mag)) + "@" + degrees(v.angle);
        } else if constexpr (std::is_same_v<T, Phase>) {
          return v.zero ? "0" : "@" + degrees(v.angle);
        } else {
          return to_string(v.value);
        }
      },
      c);
}

std::string to_string(const Polynomial& p) {
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += format_coefficient(it->second);
    for (std::size_t k = 0; k < it->first.size(); ++k) {
      unsigned e = it->first[k];
      if (e == 0) continue;
      out += " X" + std::to_string(k + 1);
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

std::vector<Element> monomial_values(const Polynomial& p, std::span<const Element> point) {
  const Hyperfield& h = p.field();
  if (point.size() != p.nvars()) throw DimensionMismatch("evaluation point has the wrong dimension");
  for (const auto& x : point) h.check_member(x);
  std::vector<Element> out;
  out.reserve(p.size());
  for (const auto& [e, c] : p.terms()) {
    Element m = c;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] > 0) m = h.mul(m, h.pow(point[k], e[k]));
    }
    out.push_back(std::move(m));
  }
  return out;
}

EvalResult evaluate(const Polynomial& p, std::span<const Element> point) {
  ValueSet v = p.field().hypersum(monomial_values(p, point));
  bool root = v.contains(p.field().zero());
  return {std::move(v), root};
}

EvalResult evaluate(const Polynomial& p, const Element& x) { return evaluate(p, std::span<const Element>(&x, 1)); }

Polynomial pushforward(const Homomorphism& f, const Polynomial& p) {
  if (&p.field() != f.domain) {
    throw CarrierMismatch("polynomial over " + std::string(p.field().name()) + " pushed along " + f.name);
  }
  Polynomial::Terms terms;
  for (const auto& [e, c] : p.terms()) terms.emplace(e, f(c));
  return Polynomial(*f.codomain, p.nvars(), std::move(terms));
}

LineRestriction restrict_to_line(const Polynomial& p, std::span<const Element> lambda, std::span<const long long> d) {
  if (lambda.size() != p.nvars() || d.size() != p.nvars()) {
    throw DimensionMismatch("line data has the wrong dimension");
  }
  const Hyperfield& h = p.field();
  std::map<long long, Element> raw;
  for (const auto& [e, c] : p.terms()) {
    long long dot = 0;
    Element coeff = c;
    for (std::size_t k = 0; k < e.size(); ++k) {
      dot += d[k] * static_cast<long long>(e[k]);
      if (e[k] > 0) coeff = h.mul(coeff, h.pow(lambda[k], e[k]));
    }
    if (!raw.emplace(dot, std::move(coeff)).second) {
      throw DotProductCollision("two support vectors share the dot product " + std::to_string(dot));
    }
  }
  long long offset = raw.begin()->first;
  Polynomial::Terms terms;
  for (auto& [dot, c] : raw) terms.emplace(Exponent{static_cast<unsigned>(dot - offset)}, std::move(c));
  return {Polynomial(h, 1, std::move(terms)), offset};
}

}  // namespace hyperion
