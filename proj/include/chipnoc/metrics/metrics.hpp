// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <string>
#include <vector>

#include "chipnoc/noc/flit.hpp"
#include "chipnoc/noc/types.hpp"

namespace chipnoc {

inline constexpr Cycle kNever = std::numeric_limits<Cycle>::max();

/// Traffic seen on one channel of one directed link.
struct LinkCounters {
  std::string name;
  ChannelKind channel = ChannelKind::Req;
  /// Router-to-router (or die-to-die) link; only these count for hop energy.
  bool hop = false;

  std::uint64_t flits = 0;
  std::uint64_t bytes = 0;
  std::uint64_t busy = 0;
  Cycle first_send = kNever;
  Cycle last_send = 0;
  /// Flits of a second packet seen while another packet was still open.
  std::uint64_t interleaved = 0;

  void record(const Flit& f, Cycle now, std::uint32_t occupancy);

 private:
  bool open_ = false;
  PacketId open_packet_ = 0;
};

struct EndpointCounters {
  std::string name;
  std::string kind;
  std::uint64_t rx_bytes = 0;
  std::uint64_t tx_bytes = 0;
  /// Payload bytes the endpoint asked for and got (reads) or served (memories).
  std::uint64_t useful_bytes = 0;
  /// Bytes consumed from a memory's bandwidth, including granule waste.
  std::uint64_t access_bytes = 0;
  Cycle first_active = kNever;
  Cycle last_active = 0;

  void touch(Cycle now) {
    if (first_active == kNever) first_active = now;
    if (now > last_active) last_active = now;
  }
  Cycle window() const { return first_active == kNever ? 0 : last_active - first_active; }
};

struct PacketRecord {
  PacketId packet = 0;
  EndpointId src = kNoEndpoint;
  EndpointId dst = kNoEndpoint;
  ChannelKind channel = ChannelKind::Req;
  TxnKind kind = TxnKind::ReadReq;
  Cycle inject = 0;
  Cycle deliver = 0;
  std::uint32_t hops = 0;
  std::uint32_t flits = 0;
  std::uint32_t bytes = 0;
  bool probe = false;

  Cycle latency() const { return deliver - inject; }
};

/// Collector shared by every component of one simulation instance.
class Metrics {
 public:
  LinkCounters& add_link(std::string name, ChannelKind c, bool hop);
  EndpointCounters& add_endpoint(std::string name, std::string kind);

  void record_packet(const PacketRecord& r);

  const std::deque<LinkCounters>& links() const { return links_; }
  std::deque<LinkCounters>& links() { return links_; }
  const std::deque<EndpointCounters>& endpoints() const { return endpoints_; }
  std::deque<EndpointCounters>& endpoints() { return endpoints_; }
  const std::vector<PacketRecord>& packets() const { return packets_; }

  /// Flit bookkeeping: creation at NIs/forks/turnarounds, destruction at
  /// ejection and joins. Equal at quiescence.
  std::uint64_t flits_created = 0;
  std::uint64_t flits_destroyed = 0;

 private:
  std::deque<LinkCounters> links_;
  std::deque<EndpointCounters> endpoints_;
  std::vector<PacketRecord> packets_;
};

}  // namespace chipnoc
