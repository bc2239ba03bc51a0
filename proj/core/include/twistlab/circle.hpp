// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <optional>
#include <string>

#include "twistlab/rational.hpp"

namespace twistlab {

// Element of the circle group written additively in the exponent:
//     value = exp(2*pi*i * (rational_part + theta_coeff * theta))
// where theta is a single formal irrational. rational_part is kept in [0, 1);
// theta_coeff is exact and NOT reduced mod 1 (theta irrational implies
// r1*theta = r2*theta mod 1 only when r1 == r2, so reduction would be wrong).
// Equality is decidable: both components compare exactly.
//
// theta_id names the formal irrational. It is present iff theta_coeff != 0;
// mixing two different ids in one operation is an error
// (ErrorKind::mismatched_formal_parameter). One formal irrational per
// computation is supported.
//
// Textual form: "q", "r*theta", "q+r*theta", "q-r*theta" with q, r fractions
// ("theta" alone means "1*theta"). Examples: "1/3+1/2*theta", "-2/3*theta".
class CircleValue {
 public:
  CircleValue() = default;  // identity

  static CircleValue one() { return CircleValue(); }

  // exp(2*pi*i*q), q reduced mod 1.
  static CircleValue from_rational(const Rational& q);

  // exp(2*pi*i*(q + r*theta)).
  static CircleValue from_exponent(const Rational& q, const Rational& r,
                                   const std::string& theta_id = "theta");

  static CircleValue parse(const std::string& text,
                           const std::string& theta_id = "theta");

  const Rational& rational_part() const { return rational_part_; }
  const Rational& theta_coeff() const { return theta_coeff_; }
  const std::optional<std::string>& theta_id() const { return theta_id_; }

  bool is_identity() const { return rational_part_ == 0 && theta_coeff_ == 0; }
  bool has_theta() const { return theta_coeff_ != 0; }

  CircleValue mul(const CircleValue& other) const;
  CircleValue inverse() const;
  CircleValue pow(const Integer& k) const;
  // Complex conjugate; on the unit circle this equals inverse().
  CircleValue conj() const { return inverse(); }

  // Principal value with theta substituted. theta may be omitted only when
  // theta_coeff == 0 (else ErrorKind::missing_theta_value).
  std::complex<double> eval_numeric(std::optional<double> theta = std::nullopt) const;

  std::string to_string() const;

  bool operator==(const CircleValue& other) const {
    return rational_part_ == other.rational_part_ &&
           theta_coeff_ == other.theta_coeff_ && theta_id_ == other.theta_id_;
  }

 private:
  Rational rational_part_;  // in [0, 1)
  Rational theta_coeff_;
  std::optional<std::string> theta_id_;  // engaged iff theta_coeff_ != 0
};

inline CircleValue operator*(const CircleValue& a, const CircleValue& b) {
  return a.mul(b);
}

}  // namespace twistlab
