// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#include "chipnoc/router/join_table.hpp"

#include <string>

#include "chipnoc/sim/errors.hpp"

namespace chipnoc {

bool JoinTable::install(std::uint32_t id, std::uint32_t expected) {
  if (entries_.count(id)) throw ProtocolError("join id " + std::to_string(id) + " already live");
  if (full()) return false;
  entries_[id] = JoinEntry{expected, 0, 1, 0};
  return true;
}

JoinOutcome JoinTable::update(std::uint32_t id, std::uint32_t expected, std::uint8_t status,
                              std::uint32_t count) {
  auto it = entries_.find(id);
  if (it == entries_.end()) {
    if (expected == 1) return {true, status, count};
    throw ProtocolError("join arrival for unknown collective id " + std::to_string(id));
  }
  JoinEntry& e = it->second;
  e.received += 1;
  e.status &= status;
  e.count += count;
  if (e.received > e.expected)
    throw ProtocolError("join id " + std::to_string(id) + " received more than expected");
  if (e.received < e.expected) return {false, e.status, e.count};
  JoinOutcome out{true, e.status, e.count};
  entries_.erase(it);
  return out;
}

const JoinEntry* JoinTable::find(std::uint32_t id) const {
  auto it = entries_.find(id);
  return it == entries_.end() ? nullptr : &it->second;
}

}  // namespace chipnoc
