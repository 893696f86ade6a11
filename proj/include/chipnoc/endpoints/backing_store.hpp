// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace chipnoc {

/// Sparse byte-addressed memory. Bytes never written read back as a
/// deterministic pseudo-random pattern keyed by `salt`, so large regions
/// can be read without being materialized.
class BackingStore {
 public:
  static constexpr std::size_t kPage = 4096;

  explicit BackingStore(std::uint64_t salt = 0) : salt_(salt) {}

  std::uint8_t pattern(std::uint64_t addr) const;
  std::uint64_t read_u64(std::uint64_t addr) const;
  void write_u64(std::uint64_t addr, std::uint64_t v);

  void read(std::uint64_t addr, std::span<std::uint8_t> out) const;
  std::vector<std::uint8_t> read(std::uint64_t addr, std::size_t len) const;
  void write(std::uint64_t addr, std::span<const std::uint8_t> data);

  std::size_t pages() const { return pages_.size(); }

 private:
  std::uint64_t salt_;
  std::map<std::uint64_t, std::array<std::uint8_t, kPage>> pages_;
};

}  // namespace chipnoc
