// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "twistlab/group.hpp"
#include "twistlab/subgroup.hpp"

namespace twistlab {

// Elements whose conjugacy class is finite. Closed forms per family; the
// class-size oracle cross-checks each reported generator at the given effort.
Subgroup fc_center(const Group& g, int effort = 20);

// F_0 = {e}, F_{k+1} = preimage of the FC-center of G / F_k. Every family
// here stabilizes within two steps; the step limit guards the iteration all
// the same. When stabilization is witnessed by a repeated step, that repeat
// is kept in `steps` so the invariant is visible in the output.
struct FcSeries {
  std::vector<Subgroup> steps;
  bool stabilized = false;
  // first index whose step already equals the limit (meaningful only when
  // stabilized)
  std::size_t stabilization_index = 0;
  std::string note;  // truncation reason when not stabilized
};

FcSeries upper_fc_series(const Group& g, int max_steps = 8);

struct FcHypercenter {
  Subgroup subgroup;
  bool certified = false;  // false when the series was truncated
  std::string note;
};

// Union of the series, i.e. its last step once stabilized.
FcHypercenter fc_hypercenter(const Group& g, int max_steps = 8);

// G modulo its FC-hypercenter. The result is checked against the class-size
// oracle: a quotient that reports a finite nontrivial class is an internal
// inconsistency, never a value.
Group icc_quotient(const Group& g, int max_steps = 8);

// Harness for the minimality of the FC-hypercenter: whenever G/N is ICC, the
// FC-hypercenter must sit inside N. InvalidArgument when G/N is not
// certified ICC (the precondition), NotNormal / UnsupportedQuotient from the
// quotient construction.
bool check_icc_quotient_minimality(const Group& g, const Subgroup& n, int max_steps = 8);

// Harness for heredity: a subgroup of an FC-hypercentral group is again
// FC-hypercentral. Vacuously true when the ambient group is not
// FC-hypercentral.
bool check_subgroup_closure(const Group& g, const Subgroup& h, int max_steps = 8);

}  // namespace twistlab
