// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0

#include "twistlab/report.hpp"

#include <sstream>
#include <utility>

#include "json.hpp"
#include "twistlab/element.hpp"
#include "twistlab/engine.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/fc.hpp"
#include "twistlab/kleppner.hpp"
#include "twistlab/oracle.hpp"
#include "twistlab/prng.hpp"

namespace twistlab {

namespace {

using ordered = nlohmann::ordered_json;

// Substituted for the formal irrational in oracle numerics when the document
// does not pin one. Any irrational in (0,1) works; this is 1/golden ratio.
constexpr double kDefaultTheta = 0.6180339887498949;

const char* status_name(RegularityVerdict::Status s) {
  switch (s) {
    case RegularityVerdict::Status::regular: return "regular";
    case RegularityVerdict::Status::irregular: return "irregular";
    case RegularityVerdict::Status::unknown: return "unknown";
  }
  return "?";
}

ordered witness_json(const Group& g, const RegularityVerdict& v) {
  ordered w;
  w["element"] = print_element(g, v.element);
  w["status"] = status_name(v.status);
  w["class_size"] = class_size_to_string(v.cls);
  w["method"] = v.method;
  w["checked"] = v.checked;
  w["commuting_witness"] = v.witness ? ordered(print_element(g, *v.witness)) : ordered(nullptr);
  w["defect"] = v.defect ? ordered(v.defect->to_string()) : ordered(nullptr);
  return w;
}

// ---- text rendering --------------------------------------------------------

std::string pad(const std::string& s, std::size_t width) {
  std::string out = s;
  while (out.size() < width) out.push_back(' ');
  return out;
}

void maybe_error(std::ostream& os, const ordered& root) {
  if (!root.contains("error")) return;
  const auto& e = root["error"];
  os << "error: " << e["kind"].get<std::string>() << ": " << e["message"].get<std::string>()
     << "\n";
}

void render_text(std::ostream& os, const ordered& root) {
  os << "twistlab analysis\n";
  os << "=================\n";
  const auto& g = root["group"];
  os << "group:      " << g["name"].get<std::string>() << " [" << g["family"].get<std::string>()
     << "], order ";
  if (g["order"].is_string())
    os << g["order"].get<std::string>();
  else
    os << g["order"].get<std::uint64_t>();
  os << "\n";
  const auto& c = root["cocycle"];
  os << "cocycle:    " << c["kind"].get<std::string>() << ": " << c["description"].get<std::string>()
     << "\n";
  const auto& o = root["options"];
  os << "options:    effort " << o["effort"].get<int>() << ", seed " << o["seed"].get<std::int64_t>()
     << ", oracle " << (o["oracle"].get<bool>() ? "on" : "off");
  if (!o["theta_numeric"].is_null()) os << ", theta " << o["theta_numeric"].get<double>();
  os << "\n";

  const auto& val = root["validation"];
  if (val["valid"].get<bool>()) {
    os << "validation: ok (" << val["mode"].get<std::string>() << ", "
       << val["checked"].get<std::uint64_t>() << " triples)\n";
  } else {
    os << "validation: FAILED\n  " << val["message"].get<std::string>() << "\n";
    return;
  }

  if (!root.contains("fc_structure")) {
    maybe_error(os, root);
    return;
  }
  const auto& fc = root["fc_structure"];
  os << "fc structure:\n";
  os << "  fc-center:      " << fc["fc_center"].get<std::string>() << "\n";
  os << "  series:         ";
  bool first = true;
  for (const auto& s : fc["series"]) {
    if (!first) os << " -> ";
    os << s.get<std::string>();
    first = false;
  }
  os << (fc["series_stabilized"].get<bool>() ? " (stabilized)" : " (truncated)") << "\n";
  os << "  fc-hypercenter: " << fc["fc_hypercenter"].get<std::string>()
     << (fc["certified"].get<bool>() ? " (certified)" : " (uncertified)") << "\n";
  os << "  icc-quotient:   ";
  if (fc["icc_quotient"].is_null())
    os << "unavailable\n";
  else
    os << fc["icc_quotient"]["name"].get<std::string>() << " ["
       << fc["icc_quotient"]["family"].get<std::string>() << "]\n";

  if (!root.contains("kleppner")) {
    maybe_error(os, root);
    return;
  }
  const auto& k = root["kleppner"];
  os << "kleppner:   " << k["status"].get<std::string>() << "\n";
  for (const auto& e : k["evidence"]) os << "  - " << e.get<std::string>() << "\n";
  if (!k["witness"].is_null()) {
    const auto& w = k["witness"];
    os << "  witness: element " << w["element"].get<std::string>() << ", class "
       << w["class_size"].get<std::string>() << ", " << w["method"].get<std::string>() << "\n";
    if (!w["commuting_witness"].is_null())
      os << "           commutes with " << w["commuting_witness"].get<std::string>() << ", defect "
         << w["defect"].get<std::string>() << "\n";
  }

  const auto& cl = root["classification"];
  os << "classification:\n";
  os << "  simple:       " << cl["simple"].get<std::string>() << "\n";
  os << "  unique trace: " << cl["unique_trace"].get<std::string>() << "\n";
  os << "  amenable:     " << cl["amenable"].get<std::string>() << "\n";
  if (cl["justification"].empty()) {
    os << "  justification: none (outside the implemented rules)\n";
  } else {
    os << "  justification:\n";
    for (const auto& r : cl["justification"]) {
      os << "    " << pad(r["rule"].get<std::string>() + ":", 4) << " "
         << r["citation"].get<std::string>() << "\n";
      os << "         using: ";
      bool f2 = true;
      for (const auto& u : r["used"]) {
        if (!f2) os << "; ";
        os << u.get<std::string>();
        f2 = false;
      }
      os << "\n";
    }
  }

  if (root.contains("oracle") && !root["oracle"].is_null()) {
    const auto& orc = root["oracle"];
    os << "oracle cross-check:\n";
    if (orc.contains("skipped")) {
      os << "  skipped: " << orc["skipped"].get<std::string>() << "\n";
    } else {
      os << "  center dimension:      " << orc["center_dimension"].get<int>() << "\n";
      os << "  sigma-regular classes: " << orc["sigma_regular_classes"].get<int>() << "\n";
      os << "  blocks:                [";
      bool f3 = true;
      for (const auto& b : orc["blocks"]) {
        if (!f3) os << ", ";
        os << b.get<int>();
        f3 = false;
      }
      os << "]\n";
      os << "  invariant trace dim:   " << orc["invariant_trace_dim"].get<int>() << "\n";
      os << "  canonical trace:       "
         << (orc["canonical_trace_valid"].get<bool>() ? "valid" : "INVALID") << "\n";
      if (orc.contains("theta_value_used"))
        os << "  theta value used:      " << orc["theta_value_used"].get<double>() << "\n";
      bool agree = orc["agreement"].get<bool>();
      os << "  agreement:             " << (agree ? "yes" : "NO") << "\n";
      if (!agree)
        for (auto it = orc["checks"].begin(); it != orc["checks"].end(); ++it)
          if (!it.value().get<bool>()) os << "    disagrees: " << it.key() << "\n";
    }
  }

  maybe_error(os, root);
}

RunResult finish(const ordered& root, int exit_code) {
  RunResult r;
  r.exit_code = exit_code;
  r.json_text = root.dump(2) + "\n";
  std::ostringstream os;
  render_text(os, root);
  r.text = os.str();
  return r;
}

}  // namespace

RunResult run_analysis(const AnalysisSpec& spec) {
  const Group& g = spec.group;
  const Cocycle& c = spec.cocycle;

  ordered root;
  root["schema"] = "1";
  {
    ordered gj;
    gj["name"] = g.name();
    gj["family"] = family_tag_name(g.family());
    gj["order"] = g.is_finite() ? ordered(g.order()) : ordered("infinite");
    root["group"] = gj;
  }
  {
    ordered cj;
    cj["kind"] = c.kind();
    cj["description"] = c.describe();
    cj["uses_theta"] = c.uses_theta();
    root["cocycle"] = cj;
  }
  {
    ordered oj;
    oj["effort"] = spec.options.effort;
    oj["seed"] = spec.options.seed;
    oj["oracle"] = spec.options.oracle;
    oj["theta_numeric"] =
        spec.options.theta_numeric ? ordered(*spec.options.theta_numeric) : ordered(nullptr);
    oj["report"] = spec.options.report;
    root["options"] = oj;
  }

  // Validation gate: an invalid cocycle invalidates every later verdict.
  Prng rng(static_cast<std::uint64_t>(spec.options.seed));
  try {
    CocycleValidation val = validate_cocycle(c, rng, spec.options.effort);
    ordered vj;
    vj["valid"] = true;
    vj["mode"] = val.mode;
    vj["checked"] = val.checked;
    root["validation"] = vj;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::invalid_cocycle) throw;
    ordered vj;
    vj["valid"] = false;
    vj["message"] = e.what();
    root["validation"] = vj;
    ordered ej;
    ej["kind"] = error_kind_name(e.kind());
    ej["message"] = e.what();
    root["error"] = ej;
    return finish(root, 3);
  }

  int exit_code = 0;
  // A dense-cap or inconsistency failure in any later stage still yields a
  // well-formed report: sections completed so far plus an error block.
  try {
    {
      FcSeries series = upper_fc_series(g);
      FcHypercenter fch = fc_hypercenter(g);
      ordered fc;
      fc["fc_center"] = fc_center(g, spec.options.effort).describe();
      ordered steps = ordered::array();
      for (const Subgroup& s : series.steps) steps.push_back(s.describe());
      fc["series"] = steps;
      fc["series_stabilized"] = series.stabilized;
      fc["fc_hypercenter"] = fch.subgroup.describe();
      fc["certified"] = fch.certified;
      try {
        Group q = icc_quotient(g);
        ordered qj;
        qj["name"] = q.name();
        qj["family"] = family_tag_name(q.family());
        fc["icc_quotient"] = qj;
      } catch (const Error&) {
        fc["icc_quotient"] = nullptr;
      }
      root["fc_structure"] = fc;
    }

    ClassificationResult cls = classify(c, spec.options.effort);
    {
      ordered kj;
      kj["status"] = cls.kleppner.status == Truth::yes
                         ? "holds"
                         : (cls.kleppner.status == Truth::no ? "fails" : "unknown");
      ordered ev = ordered::array();
      for (const auto& e : cls.kleppner.evidence) ev.push_back(e);
      kj["evidence"] = ev;
      kj["witness"] = cls.kleppner.witness ? witness_json(g, *cls.kleppner.witness) : ordered(nullptr);
      root["kleppner"] = kj;
    }
    {
      ordered cj;
      cj["simple"] = truth_name(cls.simple);
      cj["unique_trace"] = truth_name(cls.unique_trace);
      cj["amenable"] = truth_name(cls.inputs.amenable);
      cj["fc_hypercentral"] = cls.inputs.fc_hypercentral;
      cj["icc_quotient_in_class_p"] = truth_name(cls.inputs.icc_quotient_in_p);
      ordered rules = ordered::array();
      for (const RuleFiring& f : cls.justification) {
        ordered rj;
        rj["rule"] = f.rule;
        rj["citation"] = f.citation;
        ordered used = ordered::array();
        for (const auto& u : f.used) used.push_back(u);
        rj["used"] = used;
        rules.push_back(rj);
      }
      cj["justification"] = rules;
      root["classification"] = cj;
    }

    if (!spec.options.oracle) {
      root["oracle"] = nullptr;
    } else if (!g.is_finite()) {
      ordered orc;
      orc["skipped"] = "the spectral oracle needs a finite group";
      root["oracle"] = orc;
    } else {
      try {
        std::optional<double> theta;
        if (c.uses_theta()) theta = spec.options.theta_numeric.value_or(kDefaultTheta);
        TwistedAlgebra alg = build_twisted_algebra(g, c, theta);
        int center = center_dimension(alg);
        std::vector<int> blocks = block_structure(alg);
        int trace_dim = invariant_trace_space_dim(alg);
        auto classes = sigma_regular_classes(c);
        bool trace_valid = true;
        try {
          validate_trace(alg, canonical_trace(alg));
        } catch (const Error&) {
          trace_valid = false;
        }

        ordered checks;
        checks["center_equals_regular_class_count"] = center == static_cast<int>(classes.size());
        checks["kleppner_iff_center_one"] =
            (cls.kleppner.status == Truth::yes) == (center == 1);
        checks["block_count_equals_center"] = static_cast<int>(blocks.size()) == center;
        checks["trace_dim_equals_block_count"] = trace_dim == static_cast<int>(blocks.size());
        checks["canonical_trace_valid"] = trace_valid;
        checks["simple_verdict_matches"] =
            cls.simple == Truth::unknown || (cls.simple == Truth::yes) == (blocks.size() == 1);
        checks["unique_trace_verdict_matches"] =
            cls.unique_trace == Truth::unknown || (cls.unique_trace == Truth::yes) == (trace_dim == 1);
        bool agreement = true;
        for (const auto& kv : checks.items())
          if (!kv.value().get<bool>()) agreement = false;

        ordered orc;
        orc["center_dimension"] = center;
        orc["sigma_regular_classes"] = static_cast<int>(classes.size());
        ordered bj = ordered::array();
        for (int b : blocks) bj.push_back(b);
        orc["blocks"] = bj;
        orc["invariant_trace_dim"] = trace_dim;
        orc["canonical_trace_valid"] = trace_valid;
        if (theta) orc["theta_value_used"] = *theta;
        orc["checks"] = checks;
        orc["agreement"] = agreement;
        root["oracle"] = orc;
        if (!agreement) {
          ordered ej;
          ej["kind"] = error_kind_name(ErrorKind::internal_inconsistency);
          ej["message"] = "oracle cross-check disagrees with the classification";
          root["error"] = ej;
          exit_code = 4;
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::group_too_large &&
            e.kind() != ErrorKind::internal_inconsistency)
          throw;
        ordered orc;
        orc["skipped"] = e.what();
        root["oracle"] = orc;
        ordered ej;
        ej["kind"] = error_kind_name(e.kind());
        ej["message"] = e.what();
        root["error"] = ej;
        exit_code = e.kind() == ErrorKind::group_too_large ? 5 : 4;
      }
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::group_too_large && e.kind() != ErrorKind::internal_inconsistency)
      throw;
    ordered ej;
    ej["kind"] = error_kind_name(e.kind());
    ej["message"] = e.what();
    root["error"] = ej;
    exit_code = e.kind() == ErrorKind::group_too_large ? 5 : 4;
  }

  return finish(root, exit_code);
}

const std::vector<CatalogScenario>& catalog_scenarios() {
  static const std::vector<CatalogScenario> scenarios = {
      {"pauli-z2z2", "Pauli phase table on Z_2 x Z_2, oracle cross-checked",
       R"({"group": {"family": "elementary_abelian", "p": 2, "k": 2},
  "cocycle": {"type": "table",
              "values": [["0", "0", "0", "0"],
                         ["0", "0", "0", "0"],
                         ["0", "1/2", "0", "1/2"],
                         ["0", "1/2", "0", "1/2"]]},
  "options": {"oracle": true}}
)"},
      {"nc-torus-irrational", "formal irrational rotation on Z^2",
       R"({"group": {"family": "free_abelian", "rank": 2},
  "cocycle": {"type": "bicharacter",
              "theta_matrix": [["0", "theta"], ["0", "0"]]}}
)"},
      {"bs22-irrational", "pullback of the formal rotation to BS(2,2)",
       R"({"group": {"family": "baumslag_solitar", "n": 2},
  "cocycle": {"type": "pullback",
              "hom": {"a": [1, 0], "b": [0, 1]},
              "inner": {"type": "bicharacter",
                        "theta_matrix": [["0", "theta"], ["0", "0"]]}}}
)"},
      {"lamplighter-trivial", "untwisted lamplighter group",
       R"({"group": {"family": "lamplighter"},
  "cocycle": {"type": "trivial"}}
)"},
      {"dinf-trivial", "untwisted infinite dihedral group",
       R"({"group": {"family": "infinite_dihedral"},
  "cocycle": {"type": "trivial"}}
)"},
  };
  return scenarios;
}

}  // namespace twistlab
