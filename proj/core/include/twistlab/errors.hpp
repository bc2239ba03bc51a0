// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace twistlab {

// Every expected failure mode carries one of these tags so callers (and the
// CLI exit-code mapping) can dispatch without parsing message text.
enum class ErrorKind {
  mismatched_formal_parameter,  // circle ops on values with different formal irrationals
  invalid_fraction,             // unparseable exact value literal
  family_mismatch,              // group op applied to elements of another group
  not_commuting,                // regularity defect demanded for a non-commuting pair
  unsupported_family,           // no exact method for this family/op combination
  unsupported_subgroup,         // subgroup not in the recognized closed-form list
  unsupported_quotient,         // quotient pair outside the whitelist
  not_normal,                   // quotient by a non-normal subgroup
  infinite_group,               // finite-only op applied to an infinite group
  group_too_large,              // order above the dense-representation cap
  infinite_d_sigma,             // cocycle image generates an infinite subgroup of the circle
  missing_theta_value,          // numeric evaluation with no value for the formal irrational
  ill_conditioned,              // numerical rank decision fell inside the guard band
  invalid_trace,                // trace vector fails normalization/positivity
  invalid_cocycle,              // cocycle identity or normalization violated where validity is required
  internal_inconsistency,       // two independent routes disagreed; always a bug, never an input error
  syntax_error,                 // malformed analysis document
  unknown_family,               // family name not recognized
  unknown_cocycle_type,         // cocycle kind not recognized
  invalid_argument,             // precondition violated (documented per op)
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace twistlab
