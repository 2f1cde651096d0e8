#pragma once

// Text form of polynomials.
//
//   poly  := term ('+' term)*
//   term  := coeff ['*' mono] | mono
//   mono  := 'T' ['^' int]
//   coeff := int | '(' int (',' int)* ')'
//
// Whitespace is ignored. Integers are reduced mod p. A parenthesized coefficient
// lists the generator coordinates of an F_{p^e} element highest first,
// (c_{e-1},...,c_0), and must have exactly e entries; a bare integer is an element
// of the prime subfield. Rendering uses descending powers, omits coefficient 1 on
// nonconstant terms, and writes every extension-field coefficient as a vector.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fibpow/error.hpp"
#include "fibpow/ff.hpp"
#include "fibpow/poly.hpp"

namespace fibpow {

inline std::string render(const Field& field, Element c) {
  if (field.is_prime_field()) return std::to_string(c.v);
  const std::vector<std::uint32_t> v = field.coeffs(c);
  std::string out = "(";
  for (std::size_t i = v.size(); i-- > 0;) {
    out += std::to_string(v[i]);
    if (i > 0) out += ",";
  }
  return out + ")";
}

inline std::string render(const FieldElement& c) { return render(*c.field(), c.raw()); }

inline std::string render(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const Field& F = f.f();
  std::string out;
  for (std::size_t i = f.size(); i-- > 0;) {
    const Element c = f.raw(i);
    if (c.v == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += render(F, c);
      continue;
    }
    if (c != F.one()) out += render(F, c) + "*";
    out += "T";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

namespace detail {

class PolyParser {
 public:
  PolyParser(FieldPtr field, std::string_view text) : field_(std::move(field)), text_(text) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty polynomial");
    std::vector<Element> coeffs;
    while (true) {
      parse_term(coeffs);
      skip_ws();
      if (at_end()) break;
      if (peek() != '+') throw ParseError(pos_, std::string("expected '+' but found '") + peek() + "'");
      ++pos_;
      skip_ws();
      if (at_end()) throw ParseError(pos_, "expected a term after '+'");
    }
    return {field_, std::move(coeffs)};
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::uint64_t parse_int() {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError(pos_, "expected an integer");
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      const auto digit = static_cast<std::uint64_t>(peek() - '0');
      if (value > (UINT64_MAX - digit) / 10) throw ParseError(start, "integer too large");
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  Element reduce(std::uint64_t v) const {
    return field_->from_int(static_cast<std::int64_t>(v % field_->characteristic()));
  }

  Element parse_coeff() {
    skip_ws();
    if (peek() != '(') return reduce(parse_int());
    const std::size_t open = pos_;
    ++pos_;
    std::vector<std::int64_t> high_first;
    while (true) {
      high_first.push_back(static_cast<std::int64_t>(parse_int() % field_->characteristic()));
      skip_ws();
      if (at_end()) throw ParseError(pos_, "unterminated coefficient vector");
      if (peek() == ')') {
        ++pos_;
        break;
      }
      if (peek() != ',') throw ParseError(pos_, "expected ',' or ')' in coefficient vector");
      ++pos_;
    }
    if (high_first.size() != field_->degree()) {
      throw ParseError(open, "coefficient vector needs exactly " + std::to_string(field_->degree()) + " entries");
    }
    std::vector<std::int64_t> low_first(high_first.rbegin(), high_first.rend());
    return field_->from_coeffs(low_first);
  }

  std::size_t parse_mono() {
    skip_ws();
    if (at_end() || peek() != 'T') throw ParseError(pos_, "expected 'T'");
    ++pos_;
    skip_ws();
    if (at_end() || peek() != '^') return 1;
    ++pos_;
    const std::size_t at = pos_;
    const std::uint64_t k = parse_int();
    if (k > (1u << 24)) throw ParseError(at, "exponent too large");
    return static_cast<std::size_t>(k);
  }

  void parse_term(std::vector<Element>& coeffs) {
    skip_ws();
    Element c = field_->one();
    std::size_t k = 0;
    if (peek() == 'T') {
      k = parse_mono();
    } else if (peek() == '(' || std::isdigit(static_cast<unsigned char>(peek()))) {
      c = parse_coeff();
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        k = parse_mono();
      }
    } else {
      throw ParseError(pos_, std::string("unexpected character '") + peek() + "'");
    }
    if (coeffs.size() <= k) coeffs.resize(k + 1, field_->zero());
    coeffs[k] = field_->add(coeffs[k], c);
  }

  FieldPtr field_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the text form; throws ParseError with the offending position.
inline Polynomial parse_polynomial(const FieldPtr& field, std::string_view text) {
  return detail::PolyParser(field, text).parse();
}

/// Parses a single coefficient (bare integer or vector).
inline FieldElement parse_element(const FieldPtr& field, std::string_view text) {
  const Polynomial f = parse_polynomial(field, text);
  if (f.degree() > 0) throw ParseError(0, "expected a constant");
  return f.coeff(0);
}

}  // namespace fibpow
