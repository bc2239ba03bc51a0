// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#include "twistlab/report.hpp"

#include <string>

#include "doctest.h"
#include "json.hpp"
#include "twistlab/dsl.hpp"
#include "twistlab/errors.hpp"

using namespace twistlab;
using njson = nlohmann::ordered_json;

namespace {

RunResult run_doc(const std::string& doc) { return run_analysis(parse_spec(doc)); }

njson as_json(const RunResult& r) { return njson::parse(r.json_text); }

}  // namespace

// ============================================================================
// Shape and determinism
// ============================================================================

TEST_CASE("report carries every top-level section in a stable shape") {
  RunResult r = run_doc(R"({"group": {"family": "free_abelian", "rank": 2},
                            "cocycle": {"type": "bicharacter",
                                        "theta_matrix": [["0", "theta"], ["0", "0"]]}})");
  CHECK(r.exit_code == 0);
  njson j = as_json(r);
  CHECK(j["schema"] == "1");
  CHECK(j["group"]["name"] == "free_abelian(2)");
  CHECK(j["group"]["family"] == "free_abelian");
  CHECK(j["group"]["order"] == "infinite");
  CHECK(j["cocycle"]["kind"] == "bicharacter");
  CHECK(j["cocycle"]["uses_theta"] == true);
  CHECK(j["options"]["effort"] == 20);
  CHECK(j["options"]["seed"] == 0);
  CHECK(j["options"]["oracle"] == false);
  CHECK(j["options"]["theta_numeric"].is_null());
  CHECK(j["options"]["report"] == "json");
  CHECK(j["validation"]["valid"] == true);
  CHECK(j["validation"]["mode"] == "sampled");
  CHECK(j["validation"]["checked"].get<std::uint64_t>() > 0);
  CHECK(j["fc_structure"]["fc_hypercenter"] == "whole group");
  CHECK(j["fc_structure"]["certified"] == true);
  CHECK(j["fc_structure"]["series_stabilized"] == true);
  CHECK(j["kleppner"]["status"] == "holds");
  CHECK(j["kleppner"]["witness"].is_null());
  CHECK(j["classification"]["simple"] == "yes");
  CHECK(j["classification"]["unique_trace"] == "yes");
  CHECK(j["classification"]["amenable"] == "yes");
  CHECK(j["classification"]["justification"].size() == 1);
  CHECK(j["classification"]["justification"][0]["rule"] == "R2");
  CHECK(j["oracle"].is_null());
  CHECK(!j.contains("error"));

  // Key order is part of the contract: goldens depend on it.
  auto it = j.begin();
  CHECK(it.key() == "schema");
  ++it;
  CHECK(it.key() == "group");
  ++it;
  CHECK(it.key() == "cocycle");
  ++it;
  CHECK(it.key() == "options");
  ++it;
  CHECK(it.key() == "validation");
  ++it;
  CHECK(it.key() == "fc_structure");
  ++it;
  CHECK(it.key() == "kleppner");
  ++it;
  CHECK(it.key() == "classification");
  ++it;
  CHECK(it.key() == "oracle");
}

TEST_CASE("identical document and seed give byte-identical output") {
  const std::string doc = R"({"group": {"family": "baumslag_solitar", "n": 2},
    "cocycle": {"type": "pullback",
                "inner": {"type": "bicharacter",
                          "theta_matrix": [["0", "theta"], ["0", "0"]]}},
    "options": {"seed": 77, "effort": 40}})";
  RunResult a = run_doc(doc);
  RunResult b = run_doc(doc);
  CHECK(a.exit_code == 0);
  CHECK(a.json_text == b.json_text);
  CHECK(a.text == b.text);
}

TEST_CASE("text rendering mirrors the json verdicts") {
  RunResult r = run_doc(R"({"group": {"family": "lamplighter"},
                            "cocycle": {"type": "trivial"}})");
  CHECK(r.exit_code == 0);
  CHECK(r.text.find("twistlab analysis") != std::string::npos);
  CHECK(r.text.find("lamplighter") != std::string::npos);
  CHECK(r.text.find("kleppner:   holds") != std::string::npos);
  CHECK(r.text.find("simple:       no") != std::string::npos);
  CHECK(r.text.find("unique trace: no") != std::string::npos);
  CHECK(r.text.find("R5") != std::string::npos);
  // The renderer never emits an em-dash.
  CHECK(r.text.find("—") == std::string::npos);
}

// ============================================================================
// Verdict wiring
// ============================================================================

TEST_CASE("rational rotation reports the failure witness") {
  RunResult r = run_doc(R"({"group": {"family": "free_abelian", "rank": 2},
                            "cocycle": {"type": "bicharacter",
                                        "theta_matrix": [["0", "1/3"], ["0", "0"]]}})");
  CHECK(r.exit_code == 0);
  njson j = as_json(r);
  CHECK(j["kleppner"]["status"] == "fails");
  REQUIRE(!j["kleppner"]["witness"].is_null());
  const auto& w = j["kleppner"]["witness"];
  CHECK(w["element"] == "(3,0)");
  CHECK(w["status"] == "regular");
  CHECK(w["class_size"] == "finite(1)");
  // The commuting-partner evidence certifies irregularity; a regular witness
  // carries none.
  CHECK(w["commuting_witness"].is_null());
  CHECK(w["defect"].is_null());
  CHECK(j["classification"]["simple"] == "no");
  CHECK(j["classification"]["unique_trace"] == "no");
  CHECK(j["classification"]["justification"][0]["rule"] == "R1");
  CHECK(r.text.find("witness: element (3,0)") != std::string::npos);
}

TEST_CASE("baumslag-solitar reports the icc quotient and the partial verdict") {
  RunResult r = run_doc(R"({"group": {"family": "baumslag_solitar", "n": 2},
    "cocycle": {"type": "pullback",
                "inner": {"type": "bicharacter",
                          "theta_matrix": [["0", "theta"], ["0", "0"]]}}})");
  njson j = as_json(r);
  CHECK(j["fc_structure"]["icc_quotient"]["family"] == "free_product_z_zn");
  CHECK(j["classification"]["simple"] == "unknown");
  CHECK(j["classification"]["unique_trace"] == "yes");
  CHECK(j["classification"]["amenable"] == "no");
  CHECK(j["classification"]["icc_quotient_in_class_p"] == "yes");
  CHECK(j["classification"]["justification"].size() == 1);
  CHECK(j["classification"]["justification"][0]["rule"] == "R3");
}

// ============================================================================
// Oracle block
// ============================================================================

TEST_CASE("oracle cross-check on the pauli table agrees with the engine") {
  RunResult r = run_doc(R"({"group": {"family": "elementary_abelian", "p": 2, "k": 2},
    "cocycle": {"type": "table",
                "values": [["0", "0", "0", "0"],
                           ["0", "0", "0", "0"],
                           ["0", "1/2", "0", "1/2"],
                           ["0", "1/2", "0", "1/2"]]},
    "options": {"oracle": true}})");
  CHECK(r.exit_code == 0);
  njson j = as_json(r);
  const auto& orc = j["oracle"];
  REQUIRE(!orc.is_null());
  CHECK(orc["center_dimension"] == 1);
  CHECK(orc["sigma_regular_classes"] == 1);
  CHECK(orc["blocks"] == njson::array({2}));
  CHECK(orc["invariant_trace_dim"] == 1);
  CHECK(orc["canonical_trace_valid"] == true);
  CHECK(!orc.contains("theta_value_used"));
  CHECK(orc["agreement"] == true);
  for (const auto& kv : orc["checks"].items()) CHECK(kv.value() == true);
  CHECK(j["classification"]["simple"] == "yes");
}

TEST_CASE("oracle on an untwisted finite group sees the full dual") {
  RunResult r = run_doc(R"({"group": {"family": "cyclic", "n": 6},
                            "cocycle": {"type": "trivial"},
                            "options": {"oracle": true}})");
  CHECK(r.exit_code == 0);
  njson j = as_json(r);
  const auto& orc = j["oracle"];
  CHECK(orc["center_dimension"] == 6);
  CHECK(orc["blocks"].size() == 6);
  CHECK(orc["invariant_trace_dim"] == 6);
  CHECK(orc["agreement"] == true);
}

TEST_CASE("oracle is skipped with a note on infinite groups") {
  RunResult r = run_doc(R"({"group": {"family": "infinite_dihedral"},
                            "cocycle": {"type": "trivial"},
                            "options": {"oracle": true}})");
  CHECK(r.exit_code == 0);
  njson j = as_json(r);
  CHECK(j["oracle"].contains("skipped"));
  CHECK(!j.contains("error"));
}

TEST_CASE("theta substitute defaults and can be pinned") {
  // On Z_2 the single nontrivial identity triple is (g, g, g), and any value
  // of sigma(g, g) satisfies it, so a theta entry survives validation.
  const std::string doc = R"({"group": {"family": "cyclic", "n": 2},
    "cocycle": {"type": "table", "values": [["0", "0"], ["0", "theta"]]},
    "options": {"oracle": true)";

  njson dflt = as_json(run_doc(doc + "}}"));
  REQUIRE(dflt["oracle"].contains("theta_value_used"));
  CHECK(dflt["oracle"]["theta_value_used"] == 0.6180339887498949);
  CHECK(dflt["oracle"]["agreement"] == true);
  // Coboundary in disguise: the twist does not merge any blocks on Z_2.
  CHECK(dflt["oracle"]["center_dimension"] == 2);
  CHECK(dflt["classification"]["simple"] == "no");

  njson pinned = as_json(run_doc(doc + ", \"theta_numeric\": 0.25}}"));
  CHECK(pinned["oracle"]["theta_value_used"] == 0.25);
}

// ============================================================================
// Failure exits
// ============================================================================

TEST_CASE("an invalid table stops the run with exit 3") {
  RunResult r = run_doc(R"({"group": {"family": "cyclic", "n": 3},
    "cocycle": {"type": "table",
                "values": [["0", "0", "0"],
                           ["0", "1/3", "0"],
                           ["0", "0", "0"]]}})");
  CHECK(r.exit_code == 3);
  njson j = as_json(r);
  CHECK(j["validation"]["valid"] == false);
  CHECK(j["validation"]["message"].get<std::string>().find("cocycle identity") !=
        std::string::npos);
  CHECK(j["error"]["kind"] == "InvalidCocycle");
  CHECK(!j.contains("fc_structure"));
  CHECK(!j.contains("classification"));
  CHECK(r.text.find("validation: FAILED") != std::string::npos);
}

TEST_CASE("a finite group above the dense cap exits 5 with a partial report") {
  // 17 * 16 = 272 stays constructible as a lazy product but refuses every
  // dense-table stage.
  RunResult r = run_doc(R"({"group": {"family": "direct_product",
                                      "factors": [{"family": "cyclic", "n": 17},
                                                  {"family": "cyclic", "n": 16}]},
                            "cocycle": {"type": "trivial"},
                            "options": {"oracle": true}})");
  CHECK(r.exit_code == 5);
  njson j = as_json(r);
  CHECK(j["error"]["kind"] == "GroupTooLarge");
  CHECK(j["error"]["message"].get<std::string>().find("256") != std::string::npos);
  CHECK(j["validation"]["valid"] == true);
  CHECK(r.text.find("GroupTooLarge") != std::string::npos);
}

TEST_CASE("groups that cannot even be built surface the cap at parse time") {
  // The driver maps a parse-phase GroupTooLarge to the same exit as a
  // run-phase one, so both oversize surfaces behave alike for callers.
  try {
    parse_spec(R"({"group": {"family": "elementary_abelian", "p": 2, "k": 9},
                   "cocycle": {"type": "trivial"}})");
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::group_too_large);
  }
}

// ============================================================================
// Catalog
// ============================================================================

TEST_CASE("every catalog scenario parses, runs clean, and stays deterministic") {
  const auto& scenarios = catalog_scenarios();
  REQUIRE(scenarios.size() == 5);
  for (const auto& s : scenarios) {
    CAPTURE(s.name);
    AnalysisSpec spec = parse_spec(s.document);
    RunResult a = run_analysis(spec);
    RunResult b = run_analysis(spec);
    CHECK(a.exit_code == 0);
    CHECK(a.json_text == b.json_text);
    njson j = as_json(a);
    CHECK(j["schema"] == "1");
    CHECK(j["validation"]["valid"] == true);
  }
}

TEST_CASE("catalog names are unique and kebab-case") {
  const auto& scenarios = catalog_scenarios();
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    for (std::size_t k = i + 1; k < scenarios.size(); ++k)
      CHECK(scenarios[i].name != scenarios[k].name);
    for (char ch : scenarios[i].name)
      CHECK(((ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '-'));
  }
}

TEST_CASE("catalog verdicts match the published examples") {
  auto find = [](const std::string& name) {
    for (const auto& s : catalog_scenarios())
      if (s.name == name) return s;
    FAIL("missing scenario ", name);
    return catalog_scenarios()[0];
  };

  njson pauli = as_json(run_doc(find("pauli-z2z2").document));
  CHECK(pauli["classification"]["simple"] == "yes");
  CHECK(pauli["oracle"]["agreement"] == true);

  njson torus = as_json(run_doc(find("nc-torus-irrational").document));
  CHECK(torus["classification"]["simple"] == "yes");
  CHECK(torus["classification"]["unique_trace"] == "yes");

  njson bs = as_json(run_doc(find("bs22-irrational").document));
  CHECK(bs["classification"]["simple"] == "unknown");
  CHECK(bs["classification"]["unique_trace"] == "yes");

  njson lamp = as_json(run_doc(find("lamplighter-trivial").document));
  CHECK(lamp["classification"]["simple"] == "no");
  CHECK(lamp["classification"]["unique_trace"] == "no");

  njson dinf = as_json(run_doc(find("dinf-trivial").document));
  CHECK(dinf["kleppner"]["status"] == "fails");
  CHECK(dinf["classification"]["simple"] == "no");
}
