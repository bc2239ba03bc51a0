// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#include "twistlab/errors.hpp"

namespace twistlab {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::mismatched_formal_parameter: return "MismatchedFormalParameter";
    case ErrorKind::invalid_fraction: return "InvalidFraction";
    case ErrorKind::family_mismatch: return "FamilyMismatch";
    case ErrorKind::not_commuting: return "NotCommuting";
    case ErrorKind::unsupported_family: return "UnsupportedFamily";
    case ErrorKind::unsupported_subgroup: return "UnsupportedSubgroup";
    case ErrorKind::unsupported_quotient: return "UnsupportedQuotient";
    case ErrorKind::not_normal: return "NotNormal";
    case ErrorKind::infinite_group: return "InfiniteGroup";
    case ErrorKind::group_too_large: return "GroupTooLarge";
    case ErrorKind::infinite_d_sigma: return "InfiniteDSigma";
    case ErrorKind::missing_theta_value: return "MissingThetaValue";
    case ErrorKind::ill_conditioned: return "IllConditioned";
    case ErrorKind::invalid_trace: return "InvalidTrace";
    case ErrorKind::invalid_cocycle: return "InvalidCocycle";
    case ErrorKind::internal_inconsistency: return "InternalInconsistency";
    case ErrorKind::syntax_error: return "SyntaxError";
    case ErrorKind::unknown_family: return "UnknownFamily";
    case ErrorKind::unknown_cocycle_type: return "UnknownCocycleType";
    case ErrorKind::invalid_argument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace twistlab
