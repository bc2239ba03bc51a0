// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#include "twistlab/circle.hpp"

#include <cmath>

#include "twistlab/errors.hpp"

namespace twistlab {

CircleValue CircleValue::from_rational(const Rational& q) {
  CircleValue v;
  v.rational_part_ = mod1(q);
  return v;
}

CircleValue CircleValue::from_exponent(const Rational& q, const Rational& r,
                                       const std::string& theta_id) {
  CircleValue v;
  v.rational_part_ = mod1(q);
  v.theta_coeff_ = r;
  if (r != 0) v.theta_id_ = theta_id;
  return v;
}

CircleValue CircleValue::mul(const CircleValue& other) const {
  if (theta_id_ && other.theta_id_ && *theta_id_ != *other.theta_id_)
    fail(ErrorKind::mismatched_formal_parameter,
         "cannot combine formal irrationals '" + *theta_id_ + "' and '" +
             *other.theta_id_ + "'");
  CircleValue v;
  v.rational_part_ = mod1(rational_part_ + other.rational_part_);
  v.theta_coeff_ = theta_coeff_ + other.theta_coeff_;
  if (v.theta_coeff_ != 0) v.theta_id_ = theta_id_ ? theta_id_ : other.theta_id_;
  return v;
}

CircleValue CircleValue::inverse() const {
  CircleValue v;
  v.rational_part_ = mod1(-rational_part_);
  v.theta_coeff_ = -theta_coeff_;
  v.theta_id_ = theta_id_;
  if (v.theta_coeff_ == 0) v.theta_id_.reset();
  return v;
}

CircleValue CircleValue::pow(const Integer& k) const {
  CircleValue v;
  v.rational_part_ = mod1(rational_part_ * Rational(k));
  v.theta_coeff_ = theta_coeff_ * Rational(k);
  if (v.theta_coeff_ != 0) v.theta_id_ = theta_id_;
  return v;
}

std::complex<double> CircleValue::eval_numeric(std::optional<double> theta) const {
  double exponent = rational_to_double(rational_part_);
  if (theta_coeff_ != 0) {
    if (!theta)
      fail(ErrorKind::missing_theta_value,
           "value depends on formal irrational '" + *theta_id_ +
               "' but no numeric substitution was given");
    exponent += rational_to_double(theta_coeff_) * *theta;
  }
  const double two_pi = 6.283185307179586476925286766559;
  return std::polar(1.0, two_pi * exponent);
}

std::string CircleValue::to_string() const {
  if (theta_coeff_ == 0) return format_rational(rational_part_);
  std::string theta_part;
  if (theta_coeff_ == 1)
    theta_part = "theta";
  else if (theta_coeff_ == -1)
    theta_part = "-theta";
  else
    theta_part = format_rational(theta_coeff_) + "*theta";
  if (rational_part_ == 0) return theta_part;
  if (theta_coeff_ > 0)
    return format_rational(rational_part_) + "+" + theta_part;
  // theta_part already starts with '-'
  return format_rational(rational_part_) + theta_part;
}

namespace {

// Splits "q+r*theta" / "q-r*theta" at the sign joining the two terms, which is
// the first '+' or '-' not at position 0.
std::size_t find_join_sign(const std::string& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] == '+' || s[i] == '-') return i;
  return std::string::npos;
}

Rational parse_theta_term(const std::string& term, bool* ok) {
  *ok = true;
  if (term == "theta") return Rational(1);
  if (term == "-theta") return Rational(-1);
  const std::string suffix = "*theta";
  if (term.size() > suffix.size() &&
      term.compare(term.size() - suffix.size(), suffix.size(), suffix) == 0)
    return parse_rational(term.substr(0, term.size() - suffix.size()));
  *ok = false;
  return Rational(0);
}

}  // namespace

CircleValue CircleValue::parse(const std::string& text, const std::string& theta_id) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) fail(ErrorKind::invalid_fraction, "empty circle value");

  if (s.find("theta") == std::string::npos)
    return from_rational(parse_rational(s));

  // The coefficient of a lone theta term carries at most a leading '-', so a
  // sign past position 0 can only be the join between the two terms.
  std::size_t join = find_join_sign(s);
  bool ok = false;
  if (join == std::string::npos) {
    Rational r = parse_theta_term(s, &ok);
    if (!ok) fail(ErrorKind::invalid_fraction, "not a circle value: '" + text + "'");
    return from_exponent(Rational(0), r, theta_id);
  }
  Rational q = parse_rational(s.substr(0, join));
  std::string rest = s.substr(join);  // keeps the sign
  if (!rest.empty() && rest[0] == '+') rest = rest.substr(1);
  Rational r = parse_theta_term(rest, &ok);
  if (!ok) fail(ErrorKind::invalid_fraction, "not a circle value: '" + text + "'");
  return from_exponent(q, r, theta_id);
}

}  // namespace twistlab
