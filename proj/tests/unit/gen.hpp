// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Small random-input generators for property tests. Each test seeds its own
// Gen so failures reproduce from the printed seed.

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "chipnoc/noc/types.hpp"

namespace gen {

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  std::uint64_t u64() { return rng(); }
  /// Uniform in [lo, hi].
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  }
  bool coin() { return rng() & 1; }

  chipnoc::Coord coord(std::uint32_t cols, std::uint32_t rows) {
    return {static_cast<std::uint32_t>(range(0, cols - 1)), static_cast<std::uint32_t>(range(0, rows - 1))};
  }
  chipnoc::Rect rect(std::uint32_t cols, std::uint32_t rows) {
    auto a = coord(cols, rows), b = coord(cols, rows);
    return {{std::min(a.x, b.x), std::min(a.y, b.y)}, {std::max(a.x, b.x), std::max(a.y, b.y)}};
  }
  std::vector<std::uint64_t> words(std::size_t n) {
    std::vector<std::uint64_t> v(n);
    for (auto& x : v) x = u64();
    return v;
  }
  std::vector<std::uint8_t> bytes(std::size_t n) {
    std::vector<std::uint8_t> v(n);
    for (auto& x : v) x = static_cast<std::uint8_t>(u64());
    return v;
  }
};

inline std::uint32_t manhattan(chipnoc::Coord a, chipnoc::Coord b) {
  auto d = [](std::uint32_t u, std::uint32_t v) { return u > v ? u - v : v - u; };
  return d(a.x, b.x) + d(a.y, b.y);
}

/// Nodes visited going fully along x, then along y (or the reverse).
inline std::vector<chipnoc::Coord> walk(chipnoc::Coord a, chipnoc::Coord b, bool x_first = true) {
  std::vector<chipnoc::Coord> p{a};
  auto move_x = [&] {
    while (a.x != b.x) {
      a.x = a.x < b.x ? a.x + 1 : a.x - 1;
      p.push_back(a);
    }
  };
  auto move_y = [&] {
    while (a.y != b.y) {
      a.y = a.y < b.y ? a.y + 1 : a.y - 1;
      p.push_back(a);
    }
  };
  if (x_first) {
    move_x();
    move_y();
  } else {
    move_y();
    move_x();
  }
  return p;
}

inline std::vector<chipnoc::Coord> members(const chipnoc::Rect& r) {
  std::vector<chipnoc::Coord> out;
  for (std::uint32_t y = r.lo.y; y <= r.hi.y; ++y)
    for (std::uint32_t x = r.lo.x; x <= r.hi.x; ++x) out.push_back({x, y});
  return out;
}

inline bool inside(const chipnoc::Rect& r, chipnoc::Coord c) {
  return c.x >= r.lo.x && c.x <= r.hi.x && c.y >= r.lo.y && c.y <= r.hi.y;
}

}  // namespace gen
