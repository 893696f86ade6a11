// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#include "chipnoc/sim/config.hpp"

#include <bit>
#include <string>

#include "chipnoc/sim/errors.hpp"

namespace chipnoc {

namespace {

void require(bool ok, const char* key, const std::string& what) {
  if (!ok) throw ConfigError(std::string(key) + ": " + what);
}

void positive(std::uint64_t v, const char* key) { require(v >= 1, key, "must be >= 1"); }

}  // namespace

void SimConfig::validate() const {
  positive(mesh.cols, "mesh.cols");
  positive(mesh.rows, "mesh.rows");
  positive(mesh.chiplets, "mesh.chiplets");
  require(mesh.cols <= 64 && mesh.rows * mesh.chiplets <= 64, "mesh", "at most 64 x 64 routers");
  positive(mesh.fifo_depth, "mesh.fifo_depth");
  positive(mesh.router_latency, "mesh.router_latency");
  positive(mesh.link_latency, "mesh.link_latency");

  require(std::has_single_bit(noc.wide_bytes) && noc.wide_bytes <= 64, "noc.wide_bytes",
          "must be a power of two <= 64");
  require(std::has_single_bit(noc.narrow_bytes) && noc.narrow_bytes <= noc.wide_bytes,
          "noc.narrow_bytes", "must be a power of two <= noc.wide_bytes");
  positive(noc.max_burst, "noc.max_burst");
  require(noc.max_burst % noc.wide_bytes == 0, "noc.max_burst", "must be a multiple of noc.wide_bytes");

  positive(ni.latency, "ni.latency");
  positive(ni.outstanding, "ni.outstanding");
  require(ni.inject_flits >= noc.max_burst / noc.wide_bytes, "ni.inject_flits",
          "must hold one maximum burst");

  positive(hbm.channels, "hbm.channels");
  require(hbm.channels <= mesh.rows || topology == TopologyKind::Crossbar, "hbm.channels",
          "at most one channel per mesh row");
  positive(hbm.peak_bytes, "hbm.peak_bytes");
  positive(hbm.latency, "hbm.latency");
  require(std::has_single_bit(hbm.granularity), "hbm.granularity", "must be a power of two");
  positive(hbm.queue_depth, "hbm.queue_depth");
  positive(hbm.coalescer_window, "hbm.coalescer_window");
  positive(hbm.coalescer_age, "hbm.coalescer_age");

  positive(d2d.crossing_latency, "d2d.crossing_latency");
  positive(d2d.wide_serialization, "d2d.wide_serialization");
  positive(d2d.narrow_serialization, "d2d.narrow_serialization");

  positive(dma.backends, "dma.backends");
  require(dma.backends <= 8, "dma.backends", "at most 8");
  positive(dma.outstanding_per_backend, "dma.outstanding_per_backend");
  positive(dma.max_active_jobs, "dma.max_active_jobs");

  require(energy.pj_per_byte_hop >= 0.0, "energy.pj_per_byte_hop", "must be >= 0");
  positive(router.join_table, "router.join_table");

  positive(xbar.groups, "xbar.groups");
  positive(xbar.clusters_per_group, "xbar.clusters_per_group");
  positive(xbar.hbm_channels, "xbar.hbm_channels");
  positive(xbar.stage_latency, "xbar.stage_latency");
  positive(xbar.fifo_depth, "xbar.fifo_depth");
  require(xbar.groups <= 16 && xbar.clusters_per_group <= 16 && xbar.hbm_channels <= 16, "xbar",
          "at most 16 groups, clusters per group and channels");

  require(traffic.background_rate >= 0.0 && traffic.background_rate <= 1.0,
          "traffic.background_rate", "must be in [0, 1]");
  positive(traffic.probe_gap, "traffic.probe_gap");
  positive(max_cycles, "sim.max_cycles");
}

}  // namespace chipnoc
