// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chipnoc/noc/types.hpp"

namespace chipnoc {

enum class TxnKind : std::uint8_t { ReadReq, WriteReq, ReadRsp, WriteRsp };

constexpr bool is_request(TxnKind k) { return k == TxnKind::ReadReq || k == TxnKind::WriteReq; }
constexpr bool is_read(TxnKind k) { return k == TxnKind::ReadReq || k == TxnKind::ReadRsp; }

constexpr std::string_view to_string(TxnKind k) {
  switch (k) {
    case TxnKind::ReadReq: return "read_req";
    case TxnKind::WriteReq: return "write_req";
    case TxnKind::ReadRsp: return "read_rsp";
    case TxnKind::WriteRsp: return "write_rsp";
  }
  return "?";
}

enum class CollectiveKind : std::uint8_t { None, Multicast, Barrier };

/// Collective metadata carried in the header. `rect` is the participant or
/// destination set; `origin` is the fork root (multicast source or barrier
/// aggregation node).
struct CollectiveInfo {
  CollectiveKind kind = CollectiveKind::None;
  std::uint32_t id = 0;
  Rect rect{};
  Coord origin{};
  /// Barrier: number of participants merged so far.
  std::uint32_t count = 0;

  friend bool operator==(const CollectiveInfo&, const CollectiveInfo&) = default;
};

/// A memory read/write burst exchanged between endpoints.
struct Transaction {
  TxnKind kind = TxnKind::ReadReq;
  std::uint16_t id = 0;
  std::uint64_t address = 0;
  /// Requested (reads) or carried (writes, read responses) bytes.
  std::uint32_t length = 0;
  std::vector<std::uint8_t> payload;

  EndpointId src = kNoEndpoint;
  EndpointId dst = kNoEndpoint;

  /// Packed narrow gather: per-element addresses (requests) and element size.
  std::vector<std::uint64_t> gather;
  std::uint8_t elem_size = 0;

  /// Write response status, merged by AND across joined responses.
  std::uint8_t status = 1;
  bool probe = false;
  CollectiveInfo collective;

  bool packed() const { return elem_size != 0; }

  friend bool operator==(const Transaction&, const Transaction&) = default;
};

}  // namespace chipnoc
