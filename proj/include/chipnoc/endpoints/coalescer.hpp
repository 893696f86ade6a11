// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "chipnoc/endpoints/packing.hpp"
#include "chipnoc/noc/types.hpp"

namespace chipnoc {

struct CoalescerConfig {
  /// Pending narrow requests held before the eldest is forced out.
  std::uint32_t window = 16;
  /// Cycles a granule may wait for neighbours.
  std::uint32_t age = 8;
  std::uint32_t granularity = 32;
  /// Two neighbouring granules of one aligned pair merge up to this size.
  std::uint32_t max_access = 64;
};

struct GranuleAccess {
  std::uint64_t address = 0;
  std::uint32_t size = 0;
  /// Distinct requested bytes inside the access.
  std::uint32_t useful = 0;
  std::vector<std::uint64_t> tags;
};

/// Temporal coalescer in front of a memory channel: narrow requests to the
/// same aligned granule within the window become one access.
class Coalescer {
 public:
  explicit Coalescer(CoalescerConfig cfg = {});

  /// Throws std::invalid_argument for a request that straddles a granule.
  void push(const NarrowRequest& r, Cycle now);
  /// Emits granules that reached the age limit, oldest first.
  void tick(Cycle now);

  bool has_output() const { return !out_.empty(); }
  GranuleAccess pop_output();
  std::vector<GranuleAccess> drain();

  std::size_t pending() const { return pending_; }
  bool empty() const { return entries_.empty() && out_.empty(); }
  /// Earliest cycle an aged entry will be emitted, or kNever if empty.
  Cycle next_deadline() const;

 private:
  struct Entry {
    std::uint64_t granule;
    Cycle born;
    std::uint64_t mask;
    std::vector<std::uint64_t> tags;
  };

  void emit(std::size_t i);

  CoalescerConfig cfg_;
  std::uint64_t full_mask_;
  std::deque<Entry> entries_;
  std::deque<GranuleAccess> out_;
  std::size_t pending_ = 0;
};

}  // namespace chipnoc
