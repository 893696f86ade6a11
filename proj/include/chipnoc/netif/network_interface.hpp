// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "chipnoc/metrics/metrics.hpp"
#include "chipnoc/noc/packet.hpp"
#include "chipnoc/router/fabric.hpp"
#include "chipnoc/router/flit_queue.hpp"

namespace chipnoc {

/// Receiving side of an NI: the endpoint it serves.
class TransactionSink {
 public:
  virtual ~TransactionSink() = default;
  /// Consulted for Req-channel packets only; the NI always sinks the others.
  virtual bool can_accept(const Transaction& t) const = 0;
  virtual void deliver(Transaction t, Cycle now) = 0;
};

struct NiParams {
  EndpointId id = kNoEndpoint;
  std::string name;
  Cycle latency = 2;
  std::uint32_t outstanding = 16;
  std::uint32_t inject_flits = 16;
  PacketFormat format;
  /// Mesh only: precompute the port list at injection.
  bool source_routing = false;
  RoutingSetup routing;
};

enum class NiStall : std::uint8_t { None, OrderingHazard, TableFull, QueueFull };

/// RoB-less network interface. Requests that could come back out of order
/// (same id, different destination) are held until the older ones drain.
class NetworkInterface {
 public:
  NetworkInterface(NiParams params, const Topology* topo, Metrics* metrics,
                   EndpointCounters* counters);

  NetworkInterface(const NetworkInterface&) = delete;
  NetworkInterface& operator=(const NetworkInterface&) = delete;

  EndpointId id() const { return p_.id; }

  void set_sink(TransactionSink* sink) { sink_ = sink; }

  /// Accepts and packetizes t, or reports why it must wait.
  NiStall check(const Transaction& t) const;
  bool try_send(Transaction t, Cycle now);

  FlitQueue& eject_queue(ChannelKind c) { return eject_[index(c)]; }
  OutLink& inject_link(ChannelKind c) { return inject_link_[index(c)]; }

  void tick_eject(Cycle now);
  void tick_inject(Cycle now);

  /// No flits held and nothing outstanding.
  bool idle() const;
  bool quiet() const;
  std::size_t outstanding(bool reads) const { return count_[reads ? 0 : 1]; }
  void describe_stuck(std::vector<std::string>& out) const;

 private:
  struct Pending {
    std::uint64_t key;
    Cycle issued;
  };

  std::uint64_t destination_key(const Transaction& t) const;
  RouteTarget target_for(const Transaction& t) const;

  NiParams p_;
  const Topology* topo_;
  Metrics* metrics_;
  EndpointCounters* counters_;
  TransactionSink* sink_ = nullptr;

  std::array<std::deque<Flit>, 3> inject_q_;
  std::array<OutLink, 3> inject_link_;
  std::array<FlitQueue, 3> eject_;
  std::map<std::tuple<EndpointId, PacketId, std::uint8_t>, std::vector<Flit>> partial_;

  // [0] reads, [1] writes; per id, oldest first.
  std::array<std::map<std::uint16_t, std::deque<Pending>>, 2> outstanding_;
  std::array<std::size_t, 2> count_{0, 0};
  PacketId next_packet_ = 0;
  std::map<std::pair<EndpointId, std::uint8_t>, std::shared_ptr<const std::vector<Port>>> routes_;
};

/// Wires an NI to a switch port: injection into the port's input, ejection
/// from its output, both with the NI latency.
void attach(NetworkInterface& ni, Router& router, std::size_t port, Cycle delay,
            std::size_t fifo_depth, Metrics& metrics, CommitLog* log);

}  // namespace chipnoc
