// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace twistlab {

// Exact arithmetic backing for circle-group values. cpp_rational keeps
// numerator/denominator canonical (lowest terms, positive denominator), which
// the equality semantics of the whole library lean on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Representative of q + Z in [0, 1).
Rational mod1(const Rational& q);

// Parses "a", "-a", "a/b" with arbitrary-precision integers. Throws
// ErrorKind::invalid_fraction on anything else (including b == 0).
Rational parse_rational(const std::string& text);

// "a/b" in lowest terms, or "a" when the denominator is 1.
std::string format_rational(const Rational& q);

double rational_to_double(const Rational& q);

// lcm of |denominator(q)| with acc, for cyclic-subgroup order computations.
Integer lcm_with_denominator(const Integer& acc, const Rational& q);

}  // namespace twistlab
