// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "chipnoc/metrics/metrics.hpp"
#include "chipnoc/noc/flit.hpp"
#include "chipnoc/sim/errors.hpp"

namespace chipnoc {

class FlitQueue;

/// Queues touched during the compute phase; flushed by the kernel's commit.
using CommitLog = std::vector<FlitQueue*>;

/// Input buffer with per-entry arrival time. Pushes from the upstream side
/// are staged and only become visible after commit(), and pops are counted
/// so the upstream sees the start-of-cycle occupancy no matter which side
/// runs first.
class FlitQueue {
 public:
  FlitQueue() = default;
  FlitQueue(std::size_t capacity, CommitLog* log) : capacity_(capacity), log_(log) {}

  void configure(std::size_t capacity, CommitLog* log) {
    capacity_ = capacity;
    log_ = log;
  }

  bool has_credit() const { return !staged_ && q_.size() + popped_ < capacity_; }

  void stage(Flit f, Cycle ready) {
    if (!has_credit()) throw SimulatorAssertion("flit queue overflow");
    staged_.emplace(Entry{std::move(f), ready});
    touch();
  }

  /// Immediate push, for queues private to their consumer.
  void push_now(Flit f, Cycle ready) { q_.push_back(Entry{std::move(f), ready}); }

  bool ready(Cycle now) const { return !q_.empty() && q_.front().ready <= now; }
  bool empty() const { return q_.empty() && !staged_; }
  std::size_t size() const { return q_.size(); }
  std::size_t capacity() const { return capacity_; }

  Flit& front() { return q_.front().flit; }
  const Flit& front() const { return q_.front().flit; }
  const Flit& at(std::size_t i) const { return q_[i].flit; }

  Flit pop() {
    Flit f = std::move(q_.front().flit);
    q_.pop_front();
    ++popped_;
    touch();
    return f;
  }

  void commit() {
    if (staged_) {
      q_.push_back(std::move(*staged_));
      staged_.reset();
    }
    popped_ = 0;
    logged_ = false;
  }

 private:
  struct Entry {
    Flit flit;
    Cycle ready;
  };

  void touch() {
    if (!logged_ && log_) {
      log_->push_back(this);
      logged_ = true;
    }
  }

  std::deque<Entry> q_;
  std::optional<Entry> staged_;
  std::size_t capacity_ = 0;
  std::size_t popped_ = 0;
  bool logged_ = false;
  CommitLog* log_ = nullptr;
};

/// Sending side of one channel of a directed link.
struct OutLink {
  FlitQueue* dst = nullptr;
  Cycle delay = 1;
  /// Cycles the link is occupied per flit (die-to-die serialization).
  std::uint32_t serialization = 1;
  Cycle busy_until = 0;
  LinkCounters* stats = nullptr;

  bool connected() const { return dst != nullptr; }
  bool can_send(Cycle now) const { return dst && now >= busy_until && dst->has_credit(); }

  void send(Flit f, Cycle now) {
    if (stats) stats->record(f, now, serialization);
    busy_until = now + serialization;
    dst->stage(std::move(f), now + delay);
  }
};

}  // namespace chipnoc
