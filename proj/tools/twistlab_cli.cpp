// Copyright (c) the twistlab authors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Subcommands:
//   analyze   run the full pipeline on a spec file, a named scenario, or a
//             directory of spec files (parallel, per-file isolation)
//   catalog   list the built-in scenarios, or emit one as a spec document
//   validate  parse a spec and check its cocycle, nothing more
//
// Exit codes: 0 success, 2 parse failure, 3 invalid cocycle, 4 internal
// inconsistency, 5 resource cap, 1 anything unexpected.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "twistlab/dsl.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/report.hpp"

namespace fs = std::filesystem;
using namespace twistlab;

namespace {

// Flag values; each paired with a presence bit so document options survive
// unless the user actually overrode them.
struct Overrides {
  std::string report;
  bool oracle = false;
  int effort = 0;
  std::int64_t seed = 0;
  double theta_numeric = 0.0;
  bool has_report = false, has_oracle = false, has_effort = false, has_seed = false,
       has_theta = false;

  void apply(AnalysisOptions& o) const {
    if (has_report) o.report = report;
    if (has_oracle) o.oracle = oracle;
    if (has_effort) o.effort = effort;
    if (has_seed) o.seed = seed;
    if (has_theta) o.theta_numeric = theta_numeric;
  }
};

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::group_too_large:
      return 5;
    case ErrorKind::invalid_cocycle:
      return 3;
    default:
      return 2;
  }
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) fail(ErrorKind::syntax_error, "cannot open " + p.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const CatalogScenario* find_scenario(const std::string& name) {
  for (const auto& s : catalog_scenarios())
    if (s.name == name) return &s;
  return nullptr;
}

// One isolated analysis: never throws, always yields a code and an output.
struct FileOutcome {
  int code = 0;
  std::string output;   // rendered report (empty when parsing failed)
  std::string message;  // diagnostic for stderr / summary
};

FileOutcome analyze_document(const std::string& document, const Overrides& ov) {
  FileOutcome out;
  try {
    AnalysisSpec spec = parse_spec(document);
    ov.apply(spec.options);
    RunResult r = run_analysis(spec);
    out.code = r.exit_code;
    out.output = spec.options.report == "text" ? r.text : r.json_text;
  } catch (const Error& e) {
    out.code = exit_for(e);
    out.message = e.what();
  } catch (const std::exception& e) {
    out.code = 1;
    out.message = e.what();
  }
  return out;
}

int run_batch(const fs::path& dir, const Overrides& ov) {
  if (!fs::is_directory(dir)) {
    std::cerr << "twistlab: not a directory: " << dir.string() << "\n";
    return 2;
  }
  std::vector<fs::path> inputs;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const fs::path& p = entry.path();
    if (p.extension() != ".json") continue;
    if (p.filename().string().ends_with(".report.json")) continue;
    inputs.push_back(p);
  }
  std::sort(inputs.begin(), inputs.end());
  if (inputs.empty()) {
    std::cerr << "twistlab: no spec files in " << dir.string() << "\n";
    return 2;
  }

  std::vector<std::future<FileOutcome>> tasks;
  tasks.reserve(inputs.size());
  for (const fs::path& p : inputs) {
    tasks.push_back(std::async(std::launch::async, [p, &ov]() -> FileOutcome {
      FileOutcome out;
      try {
        out = analyze_document(read_file(p), ov);
      } catch (const Error& e) {
        out.code = exit_for(e);
        out.message = e.what();
      }
      if (!out.output.empty()) {
        fs::path target = p;
        target.replace_extension();  // drop .json
        target += ".report.json";
        std::ofstream f(target, std::ios::binary | std::ios::trunc);
        f << out.output;
        if (!f) {
          out.code = 1;
          out.message = "cannot write " + target.string();
        }
      }
      return out;
    }));
  }

  int worst = 0;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    FileOutcome out = tasks[i].get();
    std::cout << inputs[i].filename().string() << ": exit " << out.code;
    if (!out.message.empty()) std::cout << " (" << out.message << ")";
    std::cout << "\n";
    worst = std::max(worst, out.code);
  }
  return worst;
}

int write_or_print(const std::string& content, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << content;
    return 0;
  }
  std::ofstream f(out_file, std::ios::binary | std::ios::trunc);
  f << content;
  if (!f) {
    std::cerr << "twistlab: cannot write " << out_file << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"analysis of twisted group algebras over a small group catalog"};
  app.require_subcommand(1);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "run the full analysis pipeline");
  std::string spec_file, scenario, batch_dir, out_file;
  Overrides ov;
  analyze->add_option("spec-file", spec_file, "spec document to analyze");
  analyze->add_option("--scenario", scenario, "built-in scenario name instead of a file");
  analyze->add_option("--batch", batch_dir,
                      "analyze every *.json in a directory, writing *.report.json beside each");
  analyze->add_option("-o,--output", out_file, "write the report here instead of stdout");
  auto* rep = analyze->add_option("--report", ov.report, "report format")
                  ->check(CLI::IsMember({"json", "text"}));
  auto* orc = analyze->add_flag("--oracle", ov.oracle, "run the finite-dimensional cross-check");
  auto* eff = analyze->add_option("--effort", ov.effort, "sampling effort")
                  ->check(CLI::PositiveNumber);
  auto* seed = analyze->add_option("--seed", ov.seed, "sampling seed");
  auto* theta = analyze->add_option("--theta-numeric", ov.theta_numeric,
                                    "numeric value substituted for theta in oracle runs");

  // catalog
  auto* catalog = app.add_subcommand("catalog", "list built-in scenarios");
  std::string emit;
  catalog->add_option("--emit", emit, "print the spec document of one scenario");

  // validate
  auto* validate = app.add_subcommand("validate", "parse a spec and check its cocycle");
  std::string validate_file;
  validate->add_option("spec-file", validate_file, "spec document to check")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) {
      ov.has_report = rep->count() > 0;
      ov.has_oracle = orc->count() > 0;
      ov.has_effort = eff->count() > 0;
      ov.has_seed = seed->count() > 0;
      ov.has_theta = theta->count() > 0;

      const int sources = int(!spec_file.empty()) + int(!scenario.empty()) + int(!batch_dir.empty());
      if (sources != 1) {
        std::cerr << "twistlab: give exactly one of <spec-file>, --scenario, --batch\n";
        return 2;
      }
      if (!batch_dir.empty()) return run_batch(batch_dir, ov);

      std::string document;
      if (!scenario.empty()) {
        const CatalogScenario* s = find_scenario(scenario);
        if (!s) {
          std::cerr << "twistlab: unknown scenario '" << scenario << "' (see: twistlab catalog)\n";
          return 2;
        }
        document = s->document;
      } else {
        document = read_file(spec_file);
      }
      FileOutcome out = analyze_document(document, ov);
      if (!out.message.empty()) std::cerr << "twistlab: " << out.message << "\n";
      if (!out.output.empty()) {
        int w = write_or_print(out.output, out_file);
        if (w != 0) return w;
      }
      return out.code;
    }

    if (app.got_subcommand(catalog)) {
      if (!emit.empty()) {
        const CatalogScenario* s = find_scenario(emit);
        if (!s) {
          std::cerr << "twistlab: unknown scenario '" << emit << "'\n";
          return 2;
        }
        std::cout << s->document;
        return 0;
      }
      for (const auto& s : catalog_scenarios())
        std::cout << s.name << "\n    " << s.title << "\n";
      return 0;
    }

    if (app.got_subcommand(validate)) {
      AnalysisSpec spec = parse_spec(read_file(validate_file));
      Prng rng(static_cast<std::uint64_t>(spec.options.seed));
      CocycleValidation val = validate_cocycle(spec.cocycle, rng, spec.options.effort);
      std::cout << "ok: " << spec.group.name() << " with a " << spec.cocycle.kind()
                << " cocycle (" << val.mode << ", " << val.checked << " triples)\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "twistlab: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "twistlab: unexpected: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
