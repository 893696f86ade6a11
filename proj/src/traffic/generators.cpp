// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#include "chipnoc/traffic/generators.hpp"

#include "chipnoc/sim/errors.hpp"
#include "chipnoc/sim/rng.hpp"

namespace chipnoc {

std::string_view to_string(Load l) { return l == Load::Zero ? "zero" : "full"; }

std::string_view to_string(IndexPattern p) {
  switch (p) {
    case IndexPattern::Uniform: return "uniform";
    case IndexPattern::Contiguous: return "contiguous";
    case IndexPattern::Strided: return "strided";
  }
  return "?";
}

InjectionSchedule gen_hbm_load(Load mode, const Topology& topo, std::uint64_t tile_bytes,
                               std::uint32_t tiles, std::optional<EndpointId> cluster) {
  if (topo.hbm.empty()) throw ConfigError("hbm load needs HBM channels");
  if (topo.clusters.empty()) throw ConfigError("hbm load needs clusters");
  std::vector<EndpointId> active;
  if (mode == Load::Zero) active.push_back(cluster.value_or(topo.clusters.front()));
  else active = topo.clusters;

  InjectionSchedule s;
  for (EndpointId c : active) {
    EndpointId ch = topo.home_channel(c);
    // Each cluster streams its own region so channel-mates never alias.
    std::uint64_t base = static_cast<std::uint64_t>(topo.site(c).index) * tiles * tile_bytes;
    for (std::uint32_t i = 0; i < tiles; ++i) {
      DmaJob j;
      j.src = ch;
      j.src_addr = base + i * tile_bytes;
      j.dst_addr = (i % 2) * tile_bytes;
      j.length = tile_bytes;
      j.tag = i;
      s.add(0, c, std::move(j));
    }
  }
  return s;
}

InjectionSchedule gen_latency_sweep(Load mode, const Topology& topo, const LatencySweepParams& p) {
  if (topo.clusters.size() < 2) throw ConfigError("latency sweep needs two clusters");
  InjectionSchedule s;
  Cycle t = mode == Load::Full ? 4 * p.gap : 0;
  std::uint32_t tag = 0;
  for (EndpointId src : topo.clusters)
    for (EndpointId dst : topo.clusters) {
      if (src == dst) continue;
      Transaction probe;
      probe.kind = TxnKind::WriteReq;
      probe.dst = dst;
      probe.address = 0x8000;
      probe.length = 8;
      probe.payload.assign(8, static_cast<std::uint8_t>(tag));
      probe.probe = true;
      s.add(t, src, std::move(probe), tag++);
      t += p.gap;
    }
  if (mode == Load::Full)
    for (EndpointId c : topo.clusters)
      s.add(0, c, BackgroundSpec{t + p.gap, p.background_rate, p.background_bytes});
  s.sort();
  return s;
}

CollectiveSchedules gen_collective(CollectivePattern kind, const Topology& topo, const Rect& rect,
                                   Coord origin, std::uint32_t bytes, std::uint32_t id) {
  if (topo.kind != TopologyKind::Mesh) throw ConfigError("collectives need a mesh topology");
  if (!rect.valid() || rect.hi.x >= topo.cols || rect.hi.y >= topo.rows)
    throw ConfigError("collective rectangle " + to_string(rect) + " outside the mesh");
  CollectiveSchedules out;
  if (kind == CollectivePattern::Barrier) {
    for (std::uint32_t y = rect.lo.y; y <= rect.hi.y; ++y)
      for (std::uint32_t x = rect.lo.x; x <= rect.hi.x; ++x) {
        EndpointId c = topo.cluster_at({x, y});
        out.collective.add(0, c, CollectiveOp{CollectiveOpKind::Barrier, rect, id, id});
        out.baseline.add(0, c, CollectiveOp{CollectiveOpKind::SoftwareBarrier, rect, id, id});
      }
    return out;
  }

  EndpointId src = topo.cluster_at(origin);
  DmaJob mc;
  mc.src_addr = kCollectiveAddr;
  mc.dst_addr = kCollectiveAddr;
  mc.length = bytes;
  mc.multicast = rect;
  mc.tag = id;
  out.collective.add(0, src, std::move(mc));
  for (std::uint32_t y = rect.lo.y; y <= rect.hi.y; ++y)
    for (std::uint32_t x = rect.lo.x; x <= rect.hi.x; ++x) {
      EndpointId dst = topo.cluster_at({x, y});
      if (dst == src) continue;
      DmaJob j;
      j.src_addr = kCollectiveAddr;
      j.dst = dst;
      j.dst_addr = kCollectiveAddr;
      j.length = bytes;
      j.tag = id;
      out.baseline.add(0, src, std::move(j));
    }
  return out;
}

std::vector<std::uint64_t> gather_indices(const GatherParams& p) {
  std::vector<std::uint64_t> idx(p.n);
  CounterRng rng(p.seed, 0x5347'0000);
  for (std::uint64_t i = 0; i < p.n; ++i) {
    switch (p.pattern) {
      case IndexPattern::Uniform: idx[i] = rng.uniform(p.span_elements); break;
      case IndexPattern::Contiguous: idx[i] = i; break;
      case IndexPattern::Strided: idx[i] = i * (p.stride_bytes / 8); break;
    }
  }
  return idx;
}

InjectionSchedule gen_scatter_gather(const Topology& topo, const GatherParams& p) {
  if (p.n == 0) throw ConfigError("gather needs at least one element");
  if (p.pattern == IndexPattern::Strided && (p.stride_bytes == 0 || p.stride_bytes % 8))
    throw ConfigError("gather stride must be a positive multiple of 8 B");
  EndpointId c = p.cluster.value_or(topo.clusters.at(0));
  DmaJob j;
  j.src = topo.home_channel(c);
  j.src_addr = 0;
  j.dst_addr = 0;
  j.elem_size = 8;
  j.indices = gather_indices(p);
  j.packed = p.packed;
  InjectionSchedule s;
  s.stream = p.seed;
  s.add(0, c, std::move(j));
  return s;
}

}  // namespace chipnoc
