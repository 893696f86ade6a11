// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chipnoc/metrics/metrics.hpp"
#include "chipnoc/noc/routing.hpp"
#include "chipnoc/router/flit_queue.hpp"
#include "chipnoc/router/join_table.hpp"

namespace chipnoc {

enum class RouterKind : std::uint8_t { Mesh, Crossbar, GroupPort };

/// How a switch picks output ports, per channel (indexed by ChannelKind).
struct RoutingSetup {
  std::array<RoutingAlgorithm, 3> algorithm{RoutingAlgorithm::DimensionOrdered,
                                            RoutingAlgorithm::DimensionOrdered,
                                            RoutingAlgorithm::DimensionOrdered};
  /// Req and Wide go X first; Rsp goes Y first so responses retrace the
  /// request tree.
  std::array<DimensionOrder, 3> order{DimensionOrder::XY, DimensionOrder::YX, DimensionOrder::XY};
  std::array<const RouteTable*, 3> tables{};
  /// Crossbar switches: output port per destination endpoint id.
  const std::vector<std::uint8_t>* endpoint_ports = nullptr;
};

/// Input-queued switch with independent Req/Rsp/Wide datapaths, wormhole
/// output locks, round-robin arbitration, and fork/join support. Serves as
/// both the mesh router and every crossbar stage.
class Router {
 public:
  Router(std::string name, RouterKind kind, std::size_t ports, Coord coord, RoutingSetup routing,
         std::size_t join_capacity, CommitLog* log, Metrics* metrics);

  Router(const Router&) = delete;
  Router& operator=(const Router&) = delete;

  const std::string& name() const { return name_; }
  RouterKind kind() const { return kind_; }
  Coord coord() const { return coord_; }
  std::size_t ports() const { return ports_; }

  FlitQueue& input(std::size_t port, ChannelKind c) { return in_[index(c)][port].queue; }
  OutLink& output(std::size_t port, ChannelKind c) { return out_[index(c)][port].link; }

  const JoinTable& joins() const { return joins_; }

  /// Output port a unicast head would take here, without consuming anything.
  std::uint8_t peek_port(ChannelKind c, const Flit& f) const;

  void tick(Cycle now);

  bool empty() const;
  /// One line per flit waiting at an input front, for timeout reports.
  void describe_stuck(std::vector<std::string>& out) const;

  /// Virtual input holding barrier releases turned around at this node.
  std::size_t turnaround_port() const { return ports_; }

 private:
  struct Replica {
    std::uint8_t port = 0;
    std::optional<Rect> subset;
  };

  struct Input {
    FlitQueue queue;
    bool routed = false;
    bool joined = false;
    std::vector<Replica> replicas;
    std::uint32_t pending = 0;
    std::uint32_t locked = 0;
  };

  struct Output {
    OutLink link;
    int owner = -1;
    std::size_t rr = 0;
  };

  void process_joins(ChannelKind c, Cycle now);
  bool route_head(ChannelKind c, Input& in);
  std::uint8_t unicast_port(ChannelKind c, Flit& f) const;
  void arbitrate(ChannelKind c, Cycle now);
  void retire(ChannelKind c);

  std::string name_;
  RouterKind kind_;
  std::size_t ports_;
  Coord coord_;
  RoutingSetup routing_;
  JoinTable joins_;
  Metrics* metrics_;
  std::array<std::vector<Input>, 3> in_;
  std::array<std::vector<Output>, 3> out_;
};

}  // namespace chipnoc
