// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace chipnoc {

using Cycle = std::uint64_t;
using EndpointId = std::uint32_t;
using PacketId = std::uint64_t;

inline constexpr EndpointId kNoEndpoint = 0xffffffffu;

/// The three independent physical channels of every link.
enum class ChannelKind : std::uint8_t { Req = 0, Rsp = 1, Wide = 2 };

inline constexpr std::array<ChannelKind, 3> kAllChannels{ChannelKind::Req, ChannelKind::Rsp,
                                                         ChannelKind::Wide};

constexpr std::size_t index(ChannelKind c) { return static_cast<std::size_t>(c); }

constexpr std::string_view to_string(ChannelKind c) {
  switch (c) {
    case ChannelKind::Req: return "req";
    case ChannelKind::Rsp: return "rsp";
    case ChannelKind::Wide: return "wide";
  }
  return "?";
}

/// Mesh router ports. North is +y, East is +x.
enum class Port : std::uint8_t { Local = 0, North = 1, East = 2, South = 3, West = 4 };

inline constexpr int kMeshPorts = 5;

constexpr std::string_view to_string(Port p) {
  switch (p) {
    case Port::Local: return "L";
    case Port::North: return "N";
    case Port::East: return "E";
    case Port::South: return "S";
    case Port::West: return "W";
  }
  return "?";
}

constexpr Port opposite(Port p) {
  switch (p) {
    case Port::North: return Port::South;
    case Port::South: return Port::North;
    case Port::East: return Port::West;
    case Port::West: return Port::East;
    case Port::Local: return Port::Local;
  }
  return Port::Local;
}

struct Coord {
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  friend constexpr auto operator<=>(const Coord&, const Coord&) = default;
};

inline std::string to_string(Coord c) {
  return std::to_string(c.x) + "." + std::to_string(c.y);
}

constexpr std::uint32_t manhattan(Coord a, Coord b) {
  auto d = [](std::uint32_t u, std::uint32_t v) { return u > v ? u - v : v - u; };
  return d(a.x, b.x) + d(a.y, b.y);
}

/// Inclusive axis-aligned rectangle of mesh coordinates; the shape of every
/// multicast destination set.
struct Rect {
  Coord lo;
  Coord hi;

  static constexpr Rect point(Coord c) { return {c, c}; }

  constexpr bool contains(Coord c) const {
    return c.x >= lo.x && c.x <= hi.x && c.y >= lo.y && c.y <= hi.y;
  }
  constexpr std::uint32_t width() const { return hi.x - lo.x + 1; }
  constexpr std::uint32_t height() const { return hi.y - lo.y + 1; }
  constexpr std::uint32_t area() const { return width() * height(); }
  constexpr bool valid() const { return lo.x <= hi.x && lo.y <= hi.y; }

  friend constexpr bool operator==(const Rect&, const Rect&) = default;
};

inline std::string to_string(const Rect& r) {
  return "[" + to_string(r.lo) + ".." + to_string(r.hi) + "]";
}

}  // namespace chipnoc
