#include "hyperion/text.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "hyperion/error.hpp"
#include "hyperion/tolerance.hpp"

namespace hyperion {

namespace {

bool parse_double(std::string_view s, double& out) {
  if (s.empty()) return false;
  std::string buf(s);
  char* end = nullptr;
  out = std::strtod(buf.c_str(), &end);
  return end == buf.c_str() + buf.size() && !std::isnan(out);
}

bool parse_int(std::string_view s, long long& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

[[noreturn]] void bad_literal(const Hyperfield& h, std::string_view text, std::size_t pos) {
  throw ParseError("invalid " + std::string(h.name()) + " literal '" + std::string(text) + "'", pos);
}

Element parse_literal(const Hyperfield& h, std::string_view text, std::size_t pos) {
  switch (h.carrier()) {
    case CarrierKind::FiniteSym: {
      long long v = 0;
      if (!parse_int(text, v)) bad_literal(h, text, pos);
      Element e = FiniteSym{static_cast<int>(v)};
      try {
        h.check_member(e);
      } catch (const CarrierMismatch&) {
        bad_literal(h, text, pos);
      }
      return e;
    }
    case CarrierKind::TropNum: {
      if (text == "-inf") return TropNum{kBottom};
      double v = 0;
      if (!parse_double(text, v) || !std::isfinite(v)) bad_literal(h, text, pos);
      return TropNum{v};
    }
    case CarrierKind::PolarComplex: {
      if (text.starts_with("mag")) {
        auto at = text.find('@');
        double m = 0;
        double deg = 0;
        if (at == std::string_view::npos || !parse_double(text.substr(3, at - 3), m) ||
            !parse_double(text.substr(at + 1), deg) || m < 0 || !std::isfinite(m) || !std::isfinite(deg)) {
          bad_literal(h, text, pos);
        }
        if (m == 0) return PolarComplex::zero();
        return PolarComplex::polar(std::log(m), deg * kPi / 180.0);
      }
      double re = 0;
      double im = 0;
      auto comma = text.find(',');
      bool ok = comma == std::string_view::npos
                    ? parse_double(text, re)
                    : parse_double(text.substr(0, comma), re) && parse_double(text.substr(comma + 1), im);
      if (!ok || !std::isfinite(re) || !std::isfinite(im)) bad_literal(h, text, pos);
      return PolarComplex::from_cartesian(re, im);
    }
    case CarrierKind::Phase: {
      if (text == "0") return Phase::origin();
      if (text == "1") return Phase::unit(0.0);
      if (text == "-1") return Phase::unit(kPi);
      double deg = 0;
      if (!text.starts_with('@') || !parse_double(text.substr(1), deg) || !std::isfinite(deg)) {
        bad_literal(h, text, pos);
      }
      return Phase::unit(deg * kPi / 180.0);
    }
    case CarrierKind::ExactRational: {
      auto slash = text.find('/');
      long long num = 0;
      long long den = 1;
      if (!parse_int(text.substr(0, slash), num)) bad_literal(h, text, pos);
      if (slash != std::string_view::npos && (!parse_int(text.substr(slash + 1), den) || den == 0)) {
        bad_literal(h, text, pos);
      }
      return ExactRational{Rational(num, den)};
    }
  }
  bad_literal(h, text, pos);
}

class Parser {
 public:
  Parser(std::string_view text, const Hyperfield& h) : s_(text), h_(h) {}

  Polynomial run(std::optional<std::size_t> nvars) {
    std::vector<std::pair<std::vector<std::pair<std::size_t, unsigned>>, Element>> raw;
    std::size_t max_var = 0;
    skip_ws();
    if (i_ == s_.size()) throw ParseError("empty polynomial", i_);
    for (;;) {
      const std::size_t term_start = i_;
      Element coeff = h_.one();
      if (peek() != 'X') coeff = literal();
      skip_ws();
      std::vector<std::pair<std::size_t, unsigned>> factors;
      while (peek() == 'X') {
        ++i_;
        std::size_t at = i_;
        unsigned var = number();
        if (var == 0) throw ParseError("variables are numbered from 1", at);
        unsigned e = 1;
        if (peek() == '^') {
          ++i_;
          e = number();
        }
        max_var = std::max<std::size_t>(max_var, var);
        factors.emplace_back(var - 1, e);
        skip_ws();
      }
      raw.emplace_back(std::move(factors), std::move(coeff));
      term_starts_.push_back(term_start);
      if (i_ == s_.size()) break;
      if (peek() != '+') throw ParseError("expected '+'", i_);
      ++i_;
      skip_ws();
      if (i_ == s_.size()) throw ParseError("dangling '+'", i_);
    }

    std::size_t n = nvars.value_or(std::max<std::size_t>(max_var, 1));
    if (max_var > n) {
      throw DimensionMismatch("variable X" + std::to_string(max_var) + " exceeds the dimension " + std::to_string(n));
    }
    Polynomial::Terms terms;
    for (std::size_t t = 0; t < raw.size(); ++t) {
      Exponent e(n, 0);
      for (auto [var, pow] : raw[t].first) e[var] += pow;
      if (!terms.emplace(std::move(e), raw[t].second).second) {
        throw DuplicateTerm("duplicate monomial in term starting at position " + std::to_string(term_starts_[t]));
      }
    }
    return Polynomial(h_, n, std::move(terms));
  }

 private:
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  unsigned number() {
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    long long v = 0;
    if (!parse_int(s_.substr(start, i_ - start), v) || v > 100000) throw ParseError("expected a number", start);
    return static_cast<unsigned>(v);
  }

  Element literal() {
    std::size_t start = i_;
    while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_]))) {
      char c = s_[i_];
      // "1e+5": a '+' directly after a mantissa exponent marker is part of the number.
      bool exponent_sign = c == '+' && i_ >= start + 2 && (s_[i_ - 1] == 'e' || s_[i_ - 1] == 'E') &&
                           (std::isdigit(static_cast<unsigned char>(s_[i_ - 2])) || s_[i_ - 2] == '.');
      if (c == '+' && !exponent_sign) break;
      ++i_;
    }
    if (i_ == start) throw ParseError("expected a coefficient", start);
    return parse_literal(h_, s_.substr(start, i_ - start), start);
  }

  std::string_view s_;
  const Hyperfield& h_;
  std::size_t i_ = 0;
  std::vector<std::size_t> term_starts_;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Element parse_element(const Hyperfield& h, std::string_view text) { return parse_literal(h, trim(text), 0); }

std::vector<Element> parse_point(const Hyperfield& h, std::string_view text) {
  std::string_view s = trim(text);
  bool tuple = s.starts_with('(') && s.ends_with(')');
  if (!tuple) return {parse_element(h, s)};
  s = s.substr(1, s.size() - 2);
  char sep = s.find(';') != std::string_view::npos ? ';' : ',';
  if (sep == ',' && h.carrier() == CarrierKind::PolarComplex) return {parse_element(h, s)};
  std::vector<Element> out;
  std::size_t offset = 1;
  for (;;) {
    auto cut = s.find(sep);
    std::string_view part = s.substr(0, cut);
    out.push_back(parse_literal(h, trim(part), offset));
    if (cut == std::string_view::npos) break;
    offset += cut + 1;
    s.remove_prefix(cut + 1);
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text, const Hyperfield& h, std::optional<std::size_t> nvars) {
  return Parser(text, h).run(nvars);
}

}  // namespace hyperion
