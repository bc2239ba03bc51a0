// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>

#include "twistlab/cocycle.hpp"
#include "twistlab/group.hpp"

namespace twistlab {

// Options block of an analysis document. `report` selects the emitted
// format; `theta_numeric` supplies the value substituted for the formal
// irrational when numerics ask for one.
struct AnalysisOptions {
  int effort = 20;
  std::int64_t seed = 0;
  bool oracle = false;
  std::optional<double> theta_numeric;
  std::string report = "json";
};

struct AnalysisSpec {
  Group group;
  Cocycle cocycle;
  AnalysisOptions options;
};

// Parses a strict analysis document:
//
//   {"group":   {"family": "free_abelian", "rank": 2},
//    "cocycle": {"type": "bicharacter",
//                "theta_matrix": [["0", "theta"], ["0", "0"]]},
//    "options": {"effort": 20, "oracle": true}}
//
// The grammar is standard JSON. Validation is strict: unknown or duplicate
// keys are rejected, every diagnostic carries the line and column of the
// offending token, and misspelled family or cocycle names come back with a
// nearest-match suggestion. SyntaxError, UnknownFamily, UnknownCocycleType,
// InvalidFraction.
AnalysisSpec parse_spec(const std::string& document);

}  // namespace twistlab
