#pragma once

/**
 * @file expression.hpp
 * @brief Text form of cohomology classes.
 *
 * Grammar (whitespace insignificant, factor indices 1-based):
 *
 *     class  := [sign] term (sign term)*
 *     term   := [integer '*'] factor ('*' factor)* | integer
 *     factor := ('u' | 'v') index ['^' natural]
 *
 * 'v' stands for the exterior generator nu. Factors multiply left to right,
 * so "v2*v1" parses to -v1*v2. The optional leading sign lets signed output
 * parse back.
 */

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "thomcx/algebra.hpp"
#include "thomcx/errors.hpp"

namespace thomcx {

namespace detail {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const SpaceModel& space) : text_(text), space_(space) {}

  CohomologyClass parse() {
    CohomologyClass result(space_);
    skip_ws();
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = take() == '-' ? -1 : 1;
    }
    if (at_end()) fail("expected a term");
    result += term().scaled(Fp(sign, space_.prime()));
    while (true) {
      skip_ws();
      if (at_end()) break;
      const char op = peek();
      if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
      take();
      result += term().scaled(Fp(op == '-' ? -1 : 1, space_.prime()));
    }
    return result;
  }

 private:
  CohomologyClass term() {
    skip_ws();
    CohomologyClass t = CohomologyClass::one(space_);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::uint64_t c = natural();
      t = t.scaled(Fp(static_cast<std::int64_t>(c % space_.prime().value()), space_.prime()));
      skip_ws();
      if (peek() != '*') return t;
      take();
    }
    t *= factor();
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      take();
      t *= factor();
    }
    return t;
  }

  CohomologyClass factor() {
    skip_ws();
    const std::size_t start = pos_;
    const char g = peek();
    if (g != 'u' && g != 'v') fail("expected a factor 'u<i>' or 'v<i>'");
    take();
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a factor index");
    const std::uint64_t index = natural();
    if (index < 1 || index > space_.factor_count())
      fail_at("factor index " + std::to_string(index) + " out of range 1.." +
                  std::to_string(space_.factor_count()),
              start);
    std::uint64_t power = 1;
    skip_ws();
    if (peek() == '^') {
      take();
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
      power = natural();
    }
    const std::size_t i = static_cast<std::size_t>(index - 1);
    if (g == 'v') {
      if (power == 0) return CohomologyClass::one(space_);
      return power == 1 ? CohomologyClass::v(space_, i) : CohomologyClass::zero(space_);
    }
    // exponents beyond the truncation vanish; clamp to keep the monomial representable
    const std::uint64_t limit = static_cast<std::uint64_t>(space_.truncation(i)) + 1;
    return CohomologyClass::u(space_, i, static_cast<int>(power > limit ? limit : power));
  }

  std::uint64_t natural() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const unsigned d = static_cast<unsigned>(take() - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) fail_at("integer too large", start);
      v = v * 10 + d;
    }
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return text_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw parse_error(msg, at); }

  std::string_view text_;
  const SpaceModel& space_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline CohomologyClass parse_class(std::string_view text, const SpaceModel& space) {
  return detail::ExpressionParser(text, space).parse();
}

struct FormatOptions {
  /// Render the residue p-1 as a minus sign instead of "(p-1)*".
  bool signed_coefficients = false;
};

inline std::string format_monomial(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const std::string idx = std::to_string(i + 1);
    if (m[i].eps) out += (out.empty() ? "" : "*") + ("v" + idx);
    if (m[i].a > 0) {
      out += (out.empty() ? "" : "*") + ("u" + idx);
      if (m[i].a > 1) out += "^" + std::to_string(m[i].a);
    }
  }
  return out.empty() ? "1" : out;
}

namespace detail {

/// Joins "coefficient*body" terms with " + " / " - " in the documented style.
template <typename Terms, typename Body>
std::string format_linear(const Terms& terms, std::uint32_t p, FormatOptions opts, Body&& body,
                          const char* times, bool parenthesize = false) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, coeff] : terms) {
    const std::string b = body(key);
    const bool negative = opts.signed_coefficients && coeff == p - 1 && p > 2;
    std::string piece;
    if (negative || coeff == 1)
      piece = b;
    else if (b == "1")
      piece = std::to_string(coeff);
    else
      piece = std::to_string(coeff) + times +
              (parenthesize && b.find(' ') != std::string::npos ? "(" + b + ")" : b);
    if (first)
      out = negative ? "-" + piece : piece;
    else
      out += (negative ? " - " : " + ") + piece;
    first = false;
  }
  return out;
}

}  // namespace detail

inline std::string to_string(const CohomologyClass& x, FormatOptions opts = {}) {
  return detail::format_linear(x.terms(), x.prime().value(), opts,
                               [](const Monomial& m) { return format_monomial(m); }, "*");
}

}  // namespace thomcx
