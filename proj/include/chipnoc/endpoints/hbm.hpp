// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "chipnoc/endpoints/backing_store.hpp"
#include "chipnoc/endpoints/coalescer.hpp"
#include "chipnoc/endpoints/endpoint.hpp"
#include "chipnoc/sim/config.hpp"

namespace chipnoc {

/// One internal memory access waiting for bandwidth.
struct MemoryAccess {
  std::uint64_t address = 0;
  std::uint32_t size = 0;
  std::uint32_t useful = 0;
  std::vector<std::uint64_t> tags;
};

/// Bandwidth- and latency-capped memory channel. Accesses start while the
/// byte budget allows (peak bytes per cycle) and complete a fixed latency
/// after their last byte. Responses leave in arrival order.
class HbmChannel : public Endpoint {
 public:
  HbmChannel(EndpointId id, NetworkInterface* ni, EndpointCounters* counters, const HbmConfig& cfg);

  bool can_accept(const Transaction& t) const override;
  void deliver(Transaction t, Cycle now) override;
  void tick(Cycle now) override;
  bool idle() const override;
  void describe_stuck(std::vector<std::string>& out) const override;

  BackingStore& store() { return store_; }
  const HbmConfig& config() const { return cfg_; }

  std::uint64_t accesses() const { return accesses_started_; }
  std::uint64_t access_bytes() const { return counters_->access_bytes; }

 private:
  struct Job {
    Transaction req;
    std::uint32_t remaining = 0;
    Cycle ready = 0;
  };

  bool within_granule(std::uint64_t addr, std::uint32_t len) const;
  void enqueue_span(std::uint64_t seq, std::uint64_t addr, std::uint32_t len);

  HbmConfig cfg_;
  BackingStore store_;
  Coalescer coalescer_;
  std::deque<Job> jobs_;
  std::uint64_t first_seq_ = 0;
  std::deque<MemoryAccess> queue_;
  /// Byte-time at which the channel is free again (bytes, scaled by cycles).
  std::uint64_t t_free_ = 0;
  std::uint64_t accesses_started_ = 0;
};

}  // namespace chipnoc
