// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#include "chipnoc/endpoints/backing_store.hpp"

#include <algorithm>

#include "chipnoc/sim/rng.hpp"

namespace chipnoc {

std::uint8_t BackingStore::pattern(std::uint64_t addr) const {
  std::uint64_t word = CounterRng::mix(salt_ * 0x9e3779b97f4a7c15ULL + (addr >> 3));
  return static_cast<std::uint8_t>(word >> (8 * (addr & 7)));
}

void BackingStore::read(std::uint64_t addr, std::span<std::uint8_t> out) const {
  std::size_t done = 0;
  while (done < out.size()) {
    std::uint64_t a = addr + done;
    std::uint64_t page = a / kPage;
    std::size_t off = a % kPage;
    std::size_t n = std::min(out.size() - done, kPage - off);
    auto it = pages_.find(page);
    if (it != pages_.end()) {
      std::copy_n(it->second.begin() + off, n, out.begin() + done);
    } else {
      for (std::size_t i = 0; i < n; ++i) out[done + i] = pattern(a + i);
    }
    done += n;
  }
}

std::vector<std::uint8_t> BackingStore::read(std::uint64_t addr, std::size_t len) const {
  std::vector<std::uint8_t> v(len);
  read(addr, v);
  return v;
}

void BackingStore::write(std::uint64_t addr, std::span<const std::uint8_t> data) {
  std::size_t done = 0;
  while (done < data.size()) {
    std::uint64_t a = addr + done;
    std::uint64_t page = a / kPage;
    std::size_t off = a % kPage;
    std::size_t n = std::min(data.size() - done, kPage - off);
    auto [it, fresh] = pages_.try_emplace(page);
    if (fresh)
      for (std::size_t i = 0; i < kPage; ++i) it->second[i] = pattern(page * kPage + i);
    std::copy_n(data.begin() + done, n, it->second.begin() + off);
    done += n;
  }
}

std::uint64_t BackingStore::read_u64(std::uint64_t addr) const {
  std::array<std::uint8_t, 8> b{};
  read(addr, b);
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = v << 8 | b[i];
  return v;
}

void BackingStore::write_u64(std::uint64_t addr, std::uint64_t v) {
  std::array<std::uint8_t, 8> b{};
  for (int i = 0; i < 8; ++i) b[i] = static_cast<std::uint8_t>(v >> (8 * i));
  write(addr, b);
}

}  // namespace chipnoc
