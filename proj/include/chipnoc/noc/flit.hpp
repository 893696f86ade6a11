// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "chipnoc/noc/transaction.hpp"
#include "chipnoc/noc/types.hpp"

namespace chipnoc {

inline constexpr std::size_t kMaxFlitPayload = 64;

enum class CollectiveTag : std::uint8_t { None, Fork, Join };

/// Where a flit is headed: a single mesh node (plus the port it leaves the
/// destination router through) or a multicast rectangle.
struct RouteTarget {
  Coord coord{};
  Port eject = Port::Local;
  std::optional<Rect> multicast;
};

/// Transaction header; travels out-of-band next to every flit of a packet.
struct Header {
  TxnKind kind = TxnKind::ReadReq;
  std::uint16_t txn_id = 0;
  std::uint64_t address = 0;
  std::uint32_t length = 0;
  std::uint8_t elem_size = 0;
  std::uint8_t packed_count = 0;
  std::uint8_t status = 1;
  bool probe = false;
  CollectiveTag tag = CollectiveTag::None;
  CollectiveInfo collective;
};

struct Flit {
  ChannelKind channel = ChannelKind::Req;
  EndpointId src = kNoEndpoint;
  EndpointId dst = kNoEndpoint;
  RouteTarget target;
  PacketId packet = 0;
  bool head = false;
  bool tail = false;
  std::uint8_t length = 0;
  std::array<std::uint8_t, kMaxFlitPayload> payload{};
  Cycle inject = 0;
  std::uint16_t hops = 0;
  Header header;

  /// Precomputed output ports for source routing; `route_pos` indexes the
  /// next entry.
  std::shared_ptr<const std::vector<Port>> source_route;
  std::uint8_t route_pos = 0;

  std::span<const std::uint8_t> bytes() const { return {payload.data(), length}; }
};

}  // namespace chipnoc
