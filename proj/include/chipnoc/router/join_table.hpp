// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>

namespace chipnoc {

struct JoinEntry {
  std::uint32_t expected = 0;
  std::uint32_t received = 0;
  std::uint8_t status = 1;
  /// Barrier participants folded into this entry so far.
  std::uint32_t count = 0;
};

/// Result of folding one arrival into the table.
struct JoinOutcome {
  bool complete = false;
  std::uint8_t status = 1;
  std::uint32_t count = 0;
};

/// Per-router bounded table of in-flight joins keyed by collective id.
class JoinTable {
 public:
  explicit JoinTable(std::size_t capacity = 16) : capacity_(capacity) {}

  bool full() const { return entries_.size() >= capacity_; }
  bool contains(std::uint32_t id) const { return entries_.count(id) != 0; }
  std::size_t size() const { return entries_.size(); }
  std::size_t capacity() const { return capacity_; }

  /// Pre-provisions an entry. Returns false when the table is full; throws
  /// ProtocolError if the id is already live.
  bool install(std::uint32_t id, std::uint32_t expected);

  /// Folds one arrival (status AND, count sum). An arrival for an id that
  /// is not live is a ProtocolError unless expected == 1, which passes
  /// straight through. The entry is cleared on completion.
  JoinOutcome update(std::uint32_t id, std::uint32_t expected, std::uint8_t status,
                     std::uint32_t count);

  const JoinEntry* find(std::uint32_t id) const;
  const std::map<std::uint32_t, JoinEntry>& entries() const { return entries_; }

 private:
  std::size_t capacity_;
  std::map<std::uint32_t, JoinEntry> entries_;
};

}  // namespace chipnoc
