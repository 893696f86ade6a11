// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chipnoc/cli/config_parser.hpp"
#include "chipnoc/cli/scenarios.hpp"
#include "chipnoc/sim/errors.hpp"

using namespace chipnoc;

namespace {

std::string scenario_help() {
  std::string s = "scenario to run, or 'all':";
  for (const auto& p : scenario_presets()) s += "\n  " + p.name + ": " + p.description;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chipnoc: cycle-stepped chiplet interconnect simulator"};
  std::string config_path, scenario, out_dir = "results";
  std::optional<std::uint64_t> seed, max_cycles;
  bool csv = false, json = false, both = false, list = false, dump = false, quiet = false;
  app.add_option("-c,--config", config_path, "JSON configuration file")->check(CLI::ExistingFile);
  app.add_option("-s,--scenario", scenario, scenario_help());
  app.add_option("-o,--out", out_dir, "output directory")->capture_default_str();
  app.add_option("--seed", seed, "override sim.seed");
  app.add_option("--max-cycles", max_cycles, "override sim.max_cycles");
  auto* fcsv = app.add_flag("--csv", csv, "write CSV only");
  auto* fjson = app.add_flag("--json", json, "write JSON only");
  app.add_flag("--both", both, "write CSV and JSON (default)")->excludes(fcsv)->excludes(fjson);
  fcsv->excludes(fjson);
  app.add_flag("--list", list, "list scenarios and exit");
  app.add_flag("--dump-config", dump, "print the effective configuration and exit");
  app.add_flag("-q,--quiet", quiet, "do not print summaries");
  CLI11_PARSE(app, argc, argv);

  if (list) {
    for (const auto& p : scenario_presets()) std::cout << p.name << "\t" << p.description << "\n";
    return 0;
  }

  SimConfig cfg;
  try {
    if (!config_path.empty()) cfg = parse_config(config_path);
    if (seed) cfg.seed = *seed;
    if (max_cycles) cfg.max_cycles = *max_cycles;
    cfg.validate();
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (dump) {
    std::cout << dump_config(cfg);
    return 0;
  }
  if (scenario.empty()) {
    std::cerr << "error: --scenario is required (see --list)\n";
    return 2;
  }

  OutputFormat fmt = csv ? OutputFormat::Csv : json ? OutputFormat::Json : OutputFormat::Both;
  std::vector<std::string> names;
  if (scenario == "all") {
    for (const auto& p : scenario_presets()) names.push_back(p.name);
  } else if (!find_scenario(scenario)) {
    std::cerr << "error: unknown scenario '" << scenario << "' (see --list)\n";
    return 2;
  } else {
    names.push_back(scenario);
  }

  // Scenarios share nothing, so they can run side by side.
  std::vector<std::future<ScenarioResult>> jobs;
  for (const auto& n : names)
    jobs.push_back(std::async(names.size() > 1 ? std::launch::async : std::launch::deferred,
                              [n, &cfg] { return run_scenario(n, cfg); }));
  int status = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    try {
      ScenarioResult r = jobs[i].get();
      write_outputs(r, out_dir, fmt);
      if (!quiet) std::cout << r.summary();
      if (!r.passed()) status = std::max(status, 1);
    } catch (const ConfigError& e) {
      std::cerr << names[i] << ": configuration error: " << e.what() << "\n";
      status = 2;
    } catch (const std::exception& e) {
      std::cerr << names[i] << ": simulation error: " << e.what() << "\n";
      status = 3;
    }
  }
  return status;
}
