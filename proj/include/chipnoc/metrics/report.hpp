// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chipnoc/metrics/metrics.hpp"
#include "chipnoc/sim/config.hpp"
#include "json.hpp"

namespace chipnoc {

struct LatencyStats {
  std::uint64_t count = 0;
  Cycle min = 0;
  Cycle max = 0;
  double avg = 0.0;

  void add(Cycle v);
  void finish();

 private:
  std::uint64_t sum_ = 0;
};

struct LinkReport {
  std::string name;
  ChannelKind channel = ChannelKind::Req;
  bool hop = false;
  std::uint64_t flits = 0;
  std::uint64_t bytes = 0;
  std::uint64_t busy = 0;
  std::uint64_t interleaved = 0;
  double energy_pj = 0.0;
};

struct EndpointReport {
  std::string name;
  std::string kind;
  std::uint64_t rx_bytes = 0;
  std::uint64_t tx_bytes = 0;
  std::uint64_t useful_bytes = 0;
  std::uint64_t access_bytes = 0;
  Cycle first_active = 0;
  Cycle last_active = 0;
  /// useful bytes / (active cycles x wide link bytes)
  double utilization = 0.0;
};

struct MetricsReport {
  Cycle cycles = 0;
  LatencyStats latency;
  /// Request packets flagged as probes.
  LatencyStats probe_latency;
  double energy_pj = 0.0;
  std::uint64_t hop_flits = 0;
  std::uint64_t hop_bytes = 0;
  std::uint64_t flits_created = 0;
  std::uint64_t flits_destroyed = 0;
  std::vector<LinkReport> links;
  std::vector<EndpointReport> endpoints;
  std::vector<PacketRecord> packets;
  /// Scenario-level results, emitted as kind "scenario".
  std::vector<std::pair<std::string, double>> scenario;

  const LinkReport* link(std::string_view name, ChannelKind c) const;
  const EndpointReport* endpoint(std::string_view name) const;
  /// Flits that crossed router-to-router links on channel c.
  std::uint64_t hop_flits_on(ChannelKind c) const;
};

MetricsReport compute_report(const Metrics& m, Cycle cycles, const SimConfig& cfg);

/// Packet rows are written for every packet when there are at most this
/// many, otherwise only for probes.
inline constexpr std::size_t kPacketRowLimit = 50'000;

void write_csv_header(std::ostream& os);
/// Rows of `kind,entity,metric,value`; `run` prefixes every entity.
void write_csv_rows(std::ostream& os, const MetricsReport& r, std::string_view run = {});
nlohmann::ordered_json to_json(const MetricsReport& r);

/// Shortest round-trip decimal form.
std::string format_double(double v);

}  // namespace chipnoc
