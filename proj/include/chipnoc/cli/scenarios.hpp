// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chipnoc/metrics/report.hpp"
#include "chipnoc/sim/config.hpp"
#include "chipnoc/sim/simulation.hpp"

namespace chipnoc {

struct PropertyResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ScenarioRun {
  std::string name;
  MetricsReport report;
};

struct ScenarioResult {
  std::string name;
  std::vector<ScenarioRun> runs;
  std::vector<PropertyResult> properties;
  /// Headline numbers, in insertion order.
  std::vector<std::pair<std::string, double>> values;

  bool passed() const;
  std::optional<double> value(std::string_view key) const;
  std::string summary() const;
  std::string csv() const;
  std::string json() const;
};

struct ScenarioPreset {
  std::string name;
  std::string description;
  std::function<ScenarioResult(const SimConfig&)> run;
};

const std::vector<ScenarioPreset>& scenario_presets();
const ScenarioPreset* find_scenario(std::string_view name);

/// Throws ConfigError for an unknown name.
ScenarioResult run_scenario(std::string_view name, const SimConfig& base);

enum class OutputFormat { Csv, Json, Both };

/// Writes <dir>/<name>.csv and/or .json plus <name>.txt; returns the paths.
std::vector<std::filesystem::path> write_outputs(const ScenarioResult& r,
                                                 const std::filesystem::path& dir, OutputFormat f);

// Measurement helpers shared with the tests.

/// Bytes over active window of a cluster's finished DMA jobs, relative to
/// `peak` bytes per cycle.
std::optional<double> dma_utilization(const ClusterEndpoint& c, std::uint32_t peak);

/// Zero-load latency predicted for src -> dst on a (possibly multi-chiplet) mesh.
Cycle zero_load_latency(const SimConfig& cfg, const Topology& topo, EndpointId src, EndpointId dst);

}  // namespace chipnoc
