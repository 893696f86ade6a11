// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chipnoc/router/fabric.hpp"
#include "chipnoc/sim/config.hpp"

namespace chipnoc {

/// Switch indices of the crossbar hierarchy inside its Fabric.
struct XbarGraph {
  std::vector<std::size_t> group_xbars;
  /// Shared uplink of each group: the single wide port the group's clusters
  /// use towards every chiplet-level crossbar.
  std::vector<std::size_t> group_ports;
  std::size_t hbm_xbar = 0;
  std::size_t intra_xbar = 0;
  std::size_t sys_xbar = 0;
};

/// Group crossbars, per-group shared ports, and the chiplet-level HBM,
/// intra-group and system crossbars, with static per-destination tables.
Topology build_occamy_interconnect(Fabric& fabric, const SimConfig& cfg,
                                   XbarGraph* graph = nullptr);

/// Switches a packet from src to dst visits, following the routing tables.
std::vector<std::size_t> switch_path(const Fabric& fabric, const Topology& topo, EndpointId src,
                                     EndpointId dst);

}  // namespace chipnoc
