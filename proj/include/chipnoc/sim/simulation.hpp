// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "chipnoc/endpoints/cluster.hpp"
#include "chipnoc/endpoints/hbm.hpp"
#include "chipnoc/metrics/report.hpp"
#include "chipnoc/router/fabric.hpp"
#include "chipnoc/sim/config.hpp"
#include "chipnoc/traffic/schedule.hpp"
#include "chipnoc/xbar/hierarchy.hpp"

namespace chipnoc {

/// One self-contained simulation instance. Not thread-safe, but instances
/// share nothing and can run on different threads.
class Simulation {
 public:
  explicit Simulation(SimConfig cfg);
  Simulation(const Simulation&) = delete;
  Simulation& operator=(const Simulation&) = delete;

  const SimConfig& config() const { return cfg_; }
  const Topology& topology() const { return topo_; }
  Fabric& fabric() { return *fabric_; }
  const Fabric& fabric() const { return *fabric_; }
  Metrics& metrics() { return metrics_; }
  const XbarGraph* xbar() const { return xbar_ ? &*xbar_ : nullptr; }

  NetworkInterface& ni(EndpointId id) { return *nis_.at(id); }
  Endpoint& endpoint(EndpointId id) { return *endpoints_.at(id); }
  ClusterEndpoint& cluster(EndpointId id);
  HbmChannel& hbm(EndpointId id);

  /// Queues the schedule; throws ConfigError for endpoints that cannot take
  /// the requested action.
  void load(const InjectionSchedule& s);

  /// Advances one cycle.
  void step();
  /// Runs until the schedule is consumed and everything drained. Throws
  /// TimeoutError past max_cycles.
  Cycle run();
  Cycle now() const { return now_; }
  bool quiescent() const;

  MetricsReport report() const { return compute_report(metrics_, now_, cfg_); }

 private:
  void apply(const Injection& in);
  [[noreturn]] void timeout() const;

  SimConfig cfg_;
  Metrics metrics_;
  std::unique_ptr<Fabric> fabric_;
  Topology topo_;
  std::optional<XbarGraph> xbar_;
  std::vector<std::unique_ptr<NetworkInterface>> nis_;
  std::vector<std::unique_ptr<Endpoint>> endpoints_;
  std::vector<Injection> pending_;
  std::size_t next_ = 0;
  Cycle now_ = 0;
};

/// Topology of a configuration without keeping the simulator around.
Topology make_topology(const SimConfig& cfg);

MetricsReport run(const SimConfig& cfg, const InjectionSchedule& workload);

}  // namespace chipnoc
