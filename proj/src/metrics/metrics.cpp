// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#include "chipnoc/metrics/metrics.hpp"

namespace chipnoc {

void LinkCounters::record(const Flit& f, Cycle now, std::uint32_t occupancy) {
  ++flits;
  bytes += f.length;
  busy += occupancy;
  if (first_send == kNever) first_send = now;
  last_send = now;
  if (f.head) {
    if (open_) ++interleaved;
    open_ = true;
    open_packet_ = f.packet;
  } else if (!open_ || open_packet_ != f.packet) {
    ++interleaved;
  }
  if (f.tail) open_ = false;
}

LinkCounters& Metrics::add_link(std::string name, ChannelKind c, bool hop) {
  auto& l = links_.emplace_back();
  l.name = std::move(name);
  l.channel = c;
  l.hop = hop;
  return l;
}

EndpointCounters& Metrics::add_endpoint(std::string name, std::string kind) {
  auto& e = endpoints_.emplace_back();
  e.name = std::move(name);
  e.kind = std::move(kind);
  return e;
}

void Metrics::record_packet(const PacketRecord& r) { packets_.push_back(r); }

}  // namespace chipnoc
