// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#include "twistlab/rational.hpp"

#include <cctype>

#include "twistlab/errors.hpp"

namespace twistlab {

Rational mod1(const Rational& q) {
  Integer num = numerator(q);
  Integer den = denominator(q);
  // floor division; cpp_int '/' truncates toward zero.
  Integer fl = num / den;
  if (num < 0 && fl * den != num) fl -= 1;
  return q - Rational(fl);
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text))
      fail(ErrorKind::invalid_fraction, "not a fraction: '" + text + "'");
    return Rational(Integer(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den))
    fail(ErrorKind::invalid_fraction, "not a fraction: '" + text + "'");
  Integer d(den);
  if (d == 0) fail(ErrorKind::invalid_fraction, "zero denominator in '" + text + "'");
  return Rational(Integer(num), d);
}

std::string format_rational(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

double rational_to_double(const Rational& q) {
  return q.convert_to<double>();
}

Integer lcm_with_denominator(const Integer& acc, const Rational& q) {
  Integer den = denominator(q);  // canonical: always positive
  Integer g = gcd(acc, den);
  return acc / g * den;
}

}  // namespace twistlab
