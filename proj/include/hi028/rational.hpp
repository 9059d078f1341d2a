#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "hi028/error.hpp"

namespace hi028::exactnum {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const Integer& n) { return n.sign(); }
inline int sign_of(const Rational& q) { return q.sign(); }

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Builds num/den with den != 0; sign is normalised onto the numerator.
inline Rational make_rational(Integer num, Integer den) {
  if (den.is_zero()) throw Error(ErrorCode::division_by_zero, "rational with zero denominator");
  if (den < 0) { num = -num; den = -den; }
  return Rational(num, den);
}

inline std::string to_string(const Rational& q) {
  std::string s = numerator(q).str();
  Integer den = denominator(q);
  if (den != 1) {
    s += '/';
    s += den.str();
  }
  return s;
}

/// Accepts `-? digits (/ digits)?` only.  A zero denominator is reported as
/// DIVISION_BY_ZERO rather than PARSE_ERROR: the text is well formed, the value is not.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw Error(ErrorCode::parse_error, "bad rational '" + std::string(text) + "'"); };
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  auto read_digits = [&]() -> Integer {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) fail();
    Integer value = 0;
    for (std::size_t i = start; i < pos; ++i) value = value * 10 + (text[i] - '0');
    return value;
  };
  Integer num = read_digits();
  Integer den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_digits();
  }
  if (pos != text.size()) fail();
  if (negative) num = -num;
  return make_rational(std::move(num), std::move(den));
}

}  // namespace hi028::exactnum
