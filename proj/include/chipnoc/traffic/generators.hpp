// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "chipnoc/router/fabric.hpp"
#include "chipnoc/traffic/schedule.hpp"

namespace chipnoc {

enum class Load : std::uint8_t { Zero, Full };
enum class IndexPattern : std::uint8_t { Uniform, Contiguous, Strided };
enum class CollectivePattern : std::uint8_t { Broadcast, Multicast, Barrier };

std::string_view to_string(Load l);
std::string_view to_string(IndexPattern p);

/// Double-buffered DMA reads from each active cluster's home channel: `tiles`
/// jobs of `tile_bytes` each. Zero load activates only `cluster` (default
/// the first one), full load every cluster.
InjectionSchedule gen_hbm_load(Load mode, const Topology& topo, std::uint64_t tile_bytes,
                               std::uint32_t tiles, std::optional<EndpointId> cluster = {});

struct LatencySweepParams {
  Cycle gap = 32;
  double background_rate = 1.0;
  std::uint32_t background_bytes = 8;
};

/// One single-flit probe write per ordered cluster pair, `gap` cycles apart;
/// full load overlays background writes from every cluster.
InjectionSchedule gen_latency_sweep(Load mode, const Topology& topo,
                                    const LatencySweepParams& p = {});

struct CollectiveSchedules {
  InjectionSchedule collective;
  /// Same effect composed of unicasts (or a software mailbox barrier).
  InjectionSchedule baseline;
};

/// Broadcast/multicast of `bytes` from the cluster at `origin` to every
/// cluster in `rect`, or a barrier over `rect`.
CollectiveSchedules gen_collective(CollectivePattern kind, const Topology& topo, const Rect& rect,
                                   Coord origin, std::uint32_t bytes, std::uint32_t id = 1);

/// Address the multicast payload lands at in every recipient's SPM.
inline constexpr std::uint64_t kCollectiveAddr = 0x4000;

struct GatherParams {
  std::uint64_t n = 1024;
  IndexPattern pattern = IndexPattern::Uniform;
  bool packed = true;
  std::uint64_t seed = 1;
  /// Strided pattern: byte distance between consecutive elements.
  std::uint64_t stride_bytes = 32;
  /// Uniform pattern: indices fall in [0, span_elements).
  std::uint64_t span_elements = 1ull << 23;
  std::optional<EndpointId> cluster;
};

/// One cluster gathers n 8 B elements from its home channel into its SPM.
InjectionSchedule gen_scatter_gather(const Topology& topo, const GatherParams& p);

std::vector<std::uint64_t> gather_indices(const GatherParams& p);

}  // namespace chipnoc
