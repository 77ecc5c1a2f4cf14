#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hyperion/homomorphism.hpp"
#include "hyperion/hyperfield.hpp"

namespace hyperion {

using Exponent = std::vector<unsigned>;

// Sparse polynomial ⊞_I c_I ⊙ X^I over a hyperfield. Zero coefficients are
// never stored and at least one term is always present.
class Polynomial {
 public:
  using Terms = std::map<Exponent, Element>;

  // Throws DimensionMismatch, CarrierMismatch, or DegeneratePolynomial when
  // no nonzero coefficient remains.
  Polynomial(const Hyperfield& field, std::size_t nvars, Terms terms);

  // coeffs[i] multiplies X^i; zeros are dropped.
  static Polynomial univariate(const Hyperfield& field, const std::vector<Element>& coeffs);

  const Hyperfield& field() const { return *field_; }
  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  unsigned degree() const;  // total degree
  Element coefficient(const Exponent& e) const;

  // Univariate helpers; throw DimensionMismatch when nvars() != 1.
  std::vector<Element> dense() const;  // length degree() + 1, zeros filled in
  unsigned min_exponent() const;

 private:
  const Hyperfield* field_;
  std::size_t nvars_;
  Terms terms_;
};

bool approx_equal(const Polynomial& p, const Polynomial& q);

// Coefficient literal in the text grammar: integers for finite symbols,
// decimals or "-inf" over T, "mag<m>@<deg>" over TC, "@<deg>" over P and
// "p/q" over Qtriv; zero over TC and P is "0".
std::string format_coefficient(const Element& c);

// Canonical text, e.g. "mag1@90 X1^2 + mag1@-60 X1 + mag1@180".
std::string to_string(const Polynomial& p);
inline bool operator==(const Polynomial& p, const Polynomial& q) { return approx_equal(p, q); }

struct EvalResult {
  ValueSet value;
  bool is_root = false;
};

// c_I ⊙ a^I for every term, in term order.
std::vector<Element> monomial_values(const Polynomial& p, std::span<const Element> point);

EvalResult evaluate(const Polynomial& p, std::span<const Element> point);
EvalResult evaluate(const Polynomial& p, const Element& x);

// f∗(p); throws CarrierMismatch when p is not over f's domain.
Polynomial pushforward(const Homomorphism& f, const Polynomial& p);

struct LineRestriction {
  Polynomial poly;      // univariate, lowest exponent 0
  long long offset = 0; // subtracted from every D·I
};

// ⊞_I c_I ⊙ λ^I ⊙ X^{D·I - offset}; throws DotProductCollision when two
// support vectors share D·I.
LineRestriction restrict_to_line(const Polynomial& p, std::span<const Element> lambda, std::span<const long long> d);

}  // namespace hyperion
