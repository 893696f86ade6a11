// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chipnoc/metrics/metrics.hpp"
#include "chipnoc/router/router.hpp"
#include "chipnoc/sim/config.hpp"

namespace chipnoc {

enum class EndpointKind : std::uint8_t { Cluster, Hbm, Host };

std::string_view to_string(EndpointKind k);

/// Where an endpoint's NI plugs into the switch fabric.
struct EndpointSite {
  EndpointId id = kNoEndpoint;
  EndpointKind kind = EndpointKind::Cluster;
  std::string name;
  std::size_t router = 0;
  std::uint8_t port = 0;
  /// Mesh coordinate of the attachment router and the port the NI hangs off.
  RouteTarget target;
  std::uint32_t chiplet = 0;
  /// Index among endpoints of the same kind (cluster number, channel number).
  std::uint32_t index = 0;
};

struct Topology {
  TopologyKind kind = TopologyKind::Mesh;
  /// Mesh extent; rows spans all chiplets.
  std::uint32_t cols = 0;
  std::uint32_t rows = 0;
  std::uint32_t rows_per_chiplet = 0;
  std::vector<EndpointSite> endpoints;
  std::vector<EndpointId> clusters;
  std::vector<EndpointId> hbm;
  std::optional<EndpointId> host;
  /// Crossbar: group of each cluster.
  std::vector<std::uint32_t> group_of;

  const EndpointSite& site(EndpointId id) const { return endpoints.at(id); }
  /// Cluster attached to the mesh router at c.
  EndpointId cluster_at(Coord c) const;
  /// Channel a cluster streams from: its row's channel on the mesh,
  /// cluster index modulo the channel count on the crossbar.
  EndpointId home_channel(EndpointId cluster) const;
};

struct LinkSpec {
  Cycle delay = 1;
  std::array<std::uint32_t, 3> serialization{1, 1, 1};
  bool hop = true;
  std::size_t fifo_depth = 2;
};

/// Owns the switches and the queue commit log of one simulation instance.
class Fabric {
 public:
  explicit Fabric(Metrics* metrics) : metrics_(metrics) {}

  std::size_t add_router(std::string name, RouterKind kind, std::size_t ports, Coord coord,
                         RoutingSetup routing, std::size_t join_capacity);
  /// Bidirectional link on all three channels.
  void connect(std::size_t a, std::size_t port_a, std::size_t b, std::size_t port_b,
               const LinkSpec& spec);

  const RouteTable* own_table(RouteTable t);
  const std::vector<std::uint8_t>* own_port_map(std::vector<std::uint8_t> m);

  /// (router, port) on the far side of a wired port.
  std::optional<std::pair<std::size_t, std::size_t>> neighbor(std::size_t router,
                                                              std::size_t port) const;

  Router& router(std::size_t i) { return *routers_[i]; }
  const Router& router(std::size_t i) const { return *routers_[i]; }
  std::size_t size() const { return routers_.size(); }

  CommitLog* log() { return &log_; }
  Metrics* metrics() { return metrics_; }

  void tick(Cycle now);
  void commit();
  bool empty() const;
  void describe_stuck(std::vector<std::string>& out) const;

 private:
  Metrics* metrics_;
  CommitLog log_;
  std::vector<std::unique_ptr<Router>> routers_;
  std::vector<std::vector<std::optional<std::pair<std::size_t, std::size_t>>>> wiring_;
  std::vector<std::unique_ptr<RouteTable>> tables_;
  std::vector<std::unique_ptr<std::vector<std::uint8_t>>> port_maps_;
};

/// Builds the (possibly multi-chiplet) mesh and places clusters, HBM
/// channels and the host memory.
Topology build_mesh(Fabric& fabric, const SimConfig& cfg);

}  // namespace chipnoc
