// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "twistlab/dsl.hpp"

namespace twistlab {

// Outcome of one analysis. `json_text` is the versioned machine report
// (schema "1", stable key order, no timestamps: identical spec and seed give
// byte-identical output). `text` is the human rendering of the same facts.
//
// exit_code: 0 success, 3 invalid cocycle, 4 internal inconsistency (an
// engine/oracle disagreement or a contradiction sentinel), 5 resource cap.
// Parse failures never reach this type; they surface as exceptions from
// parse_spec and map to exit code 2 in the driver.
struct RunResult {
  std::string json_text;
  std::string text;
  int exit_code = 0;
};

// Validates the cocycle, computes the FC-structure, decides Kleppner's
// condition, runs the classification rules, and, when requested on a finite
// group, cross-checks everything against the spectral oracle. A formal
// irrational is given the value 0.6180339887498949 for oracle numerics when
// the document supplies no theta_numeric.
RunResult run_analysis(const AnalysisSpec& spec);

// Built-in demonstration scenarios; `document` is a complete analysis
// document accepted by parse_spec.
struct CatalogScenario {
  std::string name;
  std::string title;
  std::string document;
};

const std::vector<CatalogScenario>& catalog_scenarios();

}  // namespace twistlab
