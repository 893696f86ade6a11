// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "chipnoc/noc/flit.hpp"
#include "chipnoc/noc/transaction.hpp"

namespace chipnoc {

struct PacketFormat {
  std::uint32_t wide_bytes = 64;
  std::uint32_t narrow_bytes = 8;
  std::uint32_t max_burst = 512;
};

std::uint32_t payload_capacity(ChannelKind c, const PacketFormat& fmt);

/// Bytes the transaction puts on the wire (excluding the out-of-band header).
std::uint32_t wire_bytes(const Transaction& t);

/// Channel an NI uses for the transaction: narrow data and control ride
/// Req/Rsp, bulk data and packed gathers ride Wide.
ChannelKind default_channel(const Transaction& t, const PacketFormat& fmt = {});

/// Number of flits packetize() would produce.
std::uint32_t flit_count(const Transaction& t, ChannelKind c, const PacketFormat& fmt = {});

/// Splits a transaction into flits. Routing fields (target, inject) are left
/// for the caller. Throws ProtocolError for bursts above max_burst, for a
/// channel that cannot carry the class, or for an inconsistent payload.
std::vector<Flit> packetize(const Transaction& t, ChannelKind c, const PacketFormat& fmt = {},
                            PacketId packet = 0);

/// Inverse of packetize. Throws ProtocolError on a malformed sequence.
Transaction depacketize(std::span<const Flit> flits);

}  // namespace chipnoc
