#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace sqvis {

using Integer = boost::multiprecision::cpp_int;

// Exact arbitrary-precision rational. The backend keeps every value in
// canonical form: gcd(|num|, den) = 1, den > 0, sign carried by the
// numerator. All coordinate arithmetic in this library goes through this
// type; there is no floating point anywhere in the pipeline.
using Rational = boost::multiprecision::cpp_rational;

// Canonical text form: "a" when the denominator is 1, "a/b" otherwise.
inline std::string format_rational(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

// Accepts an optionally signed integer "a", a fraction "a/b" with b > 0,
// or an exact decimal like "-3.25". Returns nullopt on malformed input.
inline std::optional<Rational> parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto read_digits = [&](std::string& out) {
    const std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      out += text[pos++];
    }
    return pos > start;
  };
  // the bigint parser treats a leading 0 as an octal prefix; strip it
  auto to_integer = [](const std::string& digits) {
    const std::size_t nonzero = digits.find_first_not_of('0');
    return Integer(nonzero == std::string::npos ? "0" : digits.substr(nonzero));
  };
  std::string int_digits;
  if (!read_digits(int_digits)) return std::nullopt;
  Integer num = to_integer(int_digits);
  Integer den(1);
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::string den_digits;
    if (!read_digits(den_digits) || pos != text.size()) return std::nullopt;
    den = to_integer(den_digits);
    if (den == 0) return std::nullopt;
  } else if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::string frac_digits;
    if (!read_digits(frac_digits) || pos != text.size()) return std::nullopt;
    for (char c : frac_digits) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
  } else if (pos != text.size()) {
    return std::nullopt;
  }
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

}  // namespace sqvis
