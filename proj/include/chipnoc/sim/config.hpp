// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "chipnoc/noc/packet.hpp"
#include "chipnoc/noc/routing.hpp"
#include "chipnoc/noc/types.hpp"

namespace chipnoc {

enum class TopologyKind : std::uint8_t { Mesh, Crossbar };

struct MeshConfig {
  std::uint32_t cols = 4;
  std::uint32_t rows = 8;
  /// Chiplets stack along y through die-to-die links, forming one virtual
  /// mesh of cols x (rows * chiplets).
  std::uint32_t chiplets = 1;
  RoutingAlgorithm routing = RoutingAlgorithm::DimensionOrdered;
  std::uint32_t fifo_depth = 2;
  std::uint32_t router_latency = 1;
  std::uint32_t link_latency = 1;
  /// One memory endpoint on the east edge of row 0.
  bool host = true;
};

struct NiConfig {
  std::uint32_t latency = 2;
  /// Outstanding requests per id space (reads, writes).
  std::uint32_t outstanding = 16;
  std::uint32_t inject_flits = 16;
};

struct HbmConfig {
  /// Channels per chiplet, attached along the west edge.
  std::uint32_t channels = 8;
  std::uint32_t peak_bytes = 64;
  std::uint32_t latency = 40;
  std::uint32_t granularity = 32;
  std::uint32_t queue_depth = 64;
  bool coalescer = true;
  std::uint32_t coalescer_window = 16;
  std::uint32_t coalescer_age = 8;
};

struct D2dConfig {
  std::uint32_t crossing_latency = 15;
  std::uint32_t wide_serialization = 2;
  std::uint32_t narrow_serialization = 2;
};

struct DmaConfig {
  std::uint32_t backends = 4;
  std::uint32_t outstanding_per_backend = 4;
  std::uint32_t max_active_jobs = 2;
  std::uint32_t pipeline_fill = 4;
  /// Pack narrow gathers into wide flits.
  bool packing = true;
};

struct EnergyConfig {
  double pj_per_byte_hop = 0.15;
};

struct RouterConfig {
  std::uint32_t join_table = 16;
};

struct XbarConfig {
  std::uint32_t groups = 6;
  std::uint32_t clusters_per_group = 4;
  std::uint32_t hbm_channels = 8;
  std::uint32_t stage_latency = 2;
  std::uint32_t fifo_depth = 2;
};

struct TrafficConfig {
  /// Background injection attempts per cluster per cycle under full load.
  double background_rate = 1.0;
  std::uint32_t background_bytes = 8;
  std::uint32_t probe_gap = 32;
  std::uint32_t transfer_bytes = 16384;
  std::uint32_t tiles = 16;
  std::uint32_t gather_elements = 65536;
};

struct SimConfig {
  TopologyKind topology = TopologyKind::Mesh;
  MeshConfig mesh;
  PacketFormat noc;
  NiConfig ni;
  HbmConfig hbm;
  D2dConfig d2d;
  DmaConfig dma;
  EnergyConfig energy;
  RouterConfig router;
  XbarConfig xbar;
  TrafficConfig traffic;
  std::uint64_t seed = 1;
  std::uint64_t max_cycles = 20'000'000;

  /// Throws ConfigError naming the offending key.
  void validate() const;
};

}  // namespace chipnoc
