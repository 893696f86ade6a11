// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#include "chipnoc/xbar/hierarchy.hpp"

#include <string>

#include "chipnoc/sim/errors.hpp"

namespace chipnoc {

namespace {

constexpr std::uint8_t kUnroutable = 0xff;

// Group port wiring.
constexpr std::size_t kDown = 0;
constexpr std::size_t kToHbm = 1;
constexpr std::size_t kToIntra = 2;
constexpr std::size_t kToSys = 3;

}  // namespace

Topology build_occamy_interconnect(Fabric& fabric, const SimConfig& cfg, XbarGraph* graph) {
  const XbarConfig& x = cfg.xbar;
  const std::uint32_t G = x.groups;
  const std::uint32_t K = x.clusters_per_group;
  const std::uint32_t H = x.hbm_channels;

  Topology topo;
  topo.kind = TopologyKind::Crossbar;
  for (std::uint32_t g = 0; g < G; ++g)
    for (std::uint32_t k = 0; k < K; ++k) {
      EndpointSite s;
      s.id = static_cast<EndpointId>(topo.endpoints.size());
      s.kind = EndpointKind::Cluster;
      s.name = "cluster" + std::to_string(g * K + k);
      s.index = g * K + k;
      topo.endpoints.push_back(s);
      topo.clusters.push_back(s.id);
      topo.group_of.push_back(g);
    }
  for (std::uint32_t h = 0; h < H; ++h) {
    EndpointSite s;
    s.id = static_cast<EndpointId>(topo.endpoints.size());
    s.kind = EndpointKind::Hbm;
    s.name = "hbm" + std::to_string(h);
    s.index = h;
    topo.endpoints.push_back(s);
    topo.hbm.push_back(s.id);
  }
  {
    EndpointSite s;
    s.id = static_cast<EndpointId>(topo.endpoints.size());
    s.kind = EndpointKind::Host;
    s.name = "host";
    topo.endpoints.push_back(s);
    topo.host = s.id;
  }
  const std::size_t n_ep = topo.endpoints.size();
  auto group_of = [&](EndpointId e) { return topo.group_of[e]; };
  auto is_cluster = [&](EndpointId e) { return topo.endpoints[e].kind == EndpointKind::Cluster; };

  XbarGraph g_out;
  for (std::uint32_t g = 0; g < G; ++g) {
    std::vector<std::uint8_t> t(n_ep, static_cast<std::uint8_t>(K));
    for (std::uint32_t k = 0; k < K; ++k) t[g * K + k] = static_cast<std::uint8_t>(k);
    RoutingSetup r;
    r.endpoint_ports = fabric.own_port_map(std::move(t));
    g_out.group_xbars.push_back(fabric.add_router("g" + std::to_string(g) + ".xbar",
                                                  RouterKind::Crossbar, K + 1, {}, r, 0));
  }
  for (std::uint32_t g = 0; g < G; ++g) {
    std::vector<std::uint8_t> t(n_ep, kUnroutable);
    for (EndpointId e = 0; e < n_ep; ++e) {
      switch (topo.endpoints[e].kind) {
        case EndpointKind::Cluster: t[e] = group_of(e) == g ? kDown : kToIntra; break;
        case EndpointKind::Hbm: t[e] = kToHbm; break;
        case EndpointKind::Host: t[e] = kToSys; break;
      }
    }
    RoutingSetup r;
    r.endpoint_ports = fabric.own_port_map(std::move(t));
    g_out.group_ports.push_back(fabric.add_router("g" + std::to_string(g) + ".port",
                                                  RouterKind::GroupPort, 4, {}, r, 0));
  }
  auto chiplet_xbar = [&](const std::string& name, std::size_t extra, auto extra_port) {
    std::vector<std::uint8_t> t(n_ep, kUnroutable);
    for (EndpointId e = 0; e < n_ep; ++e) {
      if (is_cluster(e)) t[e] = static_cast<std::uint8_t>(group_of(e));
      else if (auto p = extra_port(e); p != kUnroutable) t[e] = p;
    }
    RoutingSetup r;
    r.endpoint_ports = fabric.own_port_map(std::move(t));
    return fabric.add_router(name, RouterKind::Crossbar, G + extra, {}, r, 0);
  };
  g_out.hbm_xbar = chiplet_xbar("hbm.xbar", H, [&](EndpointId e) -> std::uint8_t {
    const auto& s = topo.endpoints[e];
    return s.kind == EndpointKind::Hbm ? static_cast<std::uint8_t>(G + s.index) : kUnroutable;
  });
  g_out.intra_xbar = chiplet_xbar("intra.xbar", 0, [](EndpointId) { return kUnroutable; });
  g_out.sys_xbar = chiplet_xbar("sys.xbar", 1, [&](EndpointId e) -> std::uint8_t {
    return topo.endpoints[e].kind == EndpointKind::Host ? static_cast<std::uint8_t>(G) : kUnroutable;
  });

  LinkSpec stage;
  stage.delay = x.stage_latency;
  stage.fifo_depth = x.fifo_depth;
  for (std::uint32_t g = 0; g < G; ++g) {
    fabric.connect(g_out.group_xbars[g], K, g_out.group_ports[g], kDown, stage);
    fabric.connect(g_out.group_ports[g], kToHbm, g_out.hbm_xbar, g, stage);
    fabric.connect(g_out.group_ports[g], kToIntra, g_out.intra_xbar, g, stage);
    fabric.connect(g_out.group_ports[g], kToSys, g_out.sys_xbar, g, stage);
  }

  for (auto& s : topo.endpoints) {
    switch (s.kind) {
      case EndpointKind::Cluster:
        s.router = g_out.group_xbars[group_of(s.id)];
        s.port = static_cast<std::uint8_t>(s.index % K);
        break;
      case EndpointKind::Hbm:
        s.router = g_out.hbm_xbar;
        s.port = static_cast<std::uint8_t>(G + s.index);
        break;
      case EndpointKind::Host:
        s.router = g_out.sys_xbar;
        s.port = static_cast<std::uint8_t>(G);
        break;
    }
  }
  if (graph) *graph = g_out;
  return topo;
}

std::vector<std::size_t> switch_path(const Fabric& fabric, const Topology& topo, EndpointId src,
                                     EndpointId dst) {
  const EndpointSite& s = topo.site(src);
  const EndpointSite& d = topo.site(dst);
  Flit probe;
  probe.src = src;
  probe.dst = dst;
  probe.target = d.target;
  std::vector<std::size_t> path;
  std::size_t r = s.router;
  for (std::size_t guard = 0; guard <= fabric.size(); ++guard) {
    path.push_back(r);
    std::size_t port = fabric.router(r).peek_port(ChannelKind::Wide, probe);
    if (r == d.router && port == d.port) return path;
    auto next = fabric.neighbor(r, port);
    if (!next) throw RoutingError("route from " + s.name + " to " + d.name + " leaves the fabric");
    r = next->first;
  }
  throw RoutingError("routing loop from " + s.name + " to " + d.name);
}

}  // namespace chipnoc
