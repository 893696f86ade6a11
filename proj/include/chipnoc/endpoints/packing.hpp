// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace chipnoc {

/// One narrow access: what an unpacked gather sends on its own.
struct NarrowRequest {
  std::uint64_t address = 0;
  std::uint8_t size = 8;
  /// Owner bookkeeping (which transaction / element this belongs to).
  std::uint64_t tag = 0;

  friend bool operator==(const NarrowRequest&, const NarrowRequest&) = default;
};

/// Narrow requests sharing one wide request flit.
struct PackedFlit {
  std::uint8_t elem_size = 8;
  std::vector<std::uint64_t> addresses;
};

/// Packs element addresses into wide request flits of `per_flit` requests
/// each (all but the last full), preserving order.
std::vector<PackedFlit> pack_indices(std::span<const std::uint64_t> addresses,
                                     std::uint8_t elem_size, std::uint32_t per_flit = 8);

std::vector<NarrowRequest> unpack(const PackedFlit& flit);
std::vector<NarrowRequest> unpack(std::span<const PackedFlit> flits);

}  // namespace chipnoc
