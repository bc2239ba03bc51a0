// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistlab/cocycle.hpp"
#include "twistlab/group.hpp"
#include "twistlab/kleppner.hpp"

namespace twistlab {

// Catalog metadata. Amenability per family: finite, free-abelian,
// infinite-dihedral (virtually abelian), Heisenberg (nilpotent) and the
// lamplighter (metabelian) groups are amenable; Z * Z_n is not, and neither
// is BS(n,n), which surjects onto Z * Z_n. Products are amenable exactly
// when every factor is. Never Unknown on the catalog.
Truth is_amenable(const Group& g);

// Catalog metadata for the Powers-type class used by the quotient rules:
// groups whose reduced algebras are simple with a unique trace for every
// cocycle. Z * Z_n is a member; the trivial group is not; everything else is
// Unknown. There is no algorithmic membership test.
Truth in_class_p(const Group& g);

// One rule application. `rule` is a stable token (R1..R6), `citation` states
// the mathematical fact the rule encodes, `used` lists the hypotheses that
// were consumed, including witnesses for the negative rules.
struct RuleFiring {
  std::string rule;
  std::string citation;
  std::vector<std::string> used;
};

// Snapshot of the structural facts the rules ran against.
struct EngineInputs {
  std::string group;
  std::string cocycle;
  Truth amenable = Truth::unknown;
  // Certified FC-series reaching the whole group.
  bool fc_hypercentral = false;
  std::optional<std::string> icc_quotient_name;
  Truth icc_quotient_in_p = Truth::unknown;
};

struct ClassificationResult {
  KleppnerVerdict kleppner;
  Truth simple = Truth::unknown;
  Truth unique_trace = Truth::unknown;
  std::vector<RuleFiring> justification;
  EngineInputs inputs;
};

// Decides simplicity and uniqueness of the tracial state for the reduced
// twisted algebra of c's group, as far as the implemented rules reach.
// Rules run in a fixed order and only ever fill Unknown fields; a rule whose
// conclusion contradicts an already-decided field is a bug and raises
// InternalInconsistency. Every Yes/No in the output is backed by at least
// one entry in `justification`.
ClassificationResult classify(const Cocycle& c, int effort = 20);

}  // namespace twistlab
