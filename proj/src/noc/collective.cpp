// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#include "chipnoc/noc/collective.hpp"

#include <algorithm>
#include <stdexcept>

namespace chipnoc {

std::vector<ForkReplica> fork_partition(const Rect& set, Coord cur, DimensionOrder order) {
  if (!set.valid()) throw std::invalid_argument("fork_partition: empty multicast set");
  std::vector<ForkReplica> out;
  auto add = [&](Port p, Rect r) {
    if (r.valid()) out.push_back({p, r});
  };
  if (order == DimensionOrder::XY) {
    if (set.lo.x < cur.x) add(Port::West, {set.lo, {std::min(set.hi.x, cur.x - 1), set.hi.y}});
    if (set.hi.x > cur.x) add(Port::East, {{std::max(set.lo.x, cur.x + 1), set.lo.y}, set.hi});
    if (set.lo.x <= cur.x && cur.x <= set.hi.x) {
      if (set.hi.y > cur.y)
        add(Port::North, {{cur.x, std::max(set.lo.y, cur.y + 1)}, {cur.x, set.hi.y}});
      if (set.lo.y < cur.y)
        add(Port::South, {{cur.x, set.lo.y}, {cur.x, std::min(set.hi.y, cur.y - 1)}});
      if (set.contains(cur)) add(Port::Local, Rect::point(cur));
    }
  } else {
    if (set.lo.y < cur.y) add(Port::South, {set.lo, {set.hi.x, std::min(set.hi.y, cur.y - 1)}});
    if (set.hi.y > cur.y) add(Port::North, {{set.lo.x, std::max(set.lo.y, cur.y + 1)}, set.hi});
    if (set.lo.y <= cur.y && cur.y <= set.hi.y) {
      if (set.hi.x > cur.x)
        add(Port::East, {{std::max(set.lo.x, cur.x + 1), cur.y}, {set.hi.x, cur.y}});
      if (set.lo.x < cur.x)
        add(Port::West, {{set.lo.x, cur.y}, {std::min(set.hi.x, cur.x - 1), cur.y}});
      if (set.contains(cur)) add(Port::Local, Rect::point(cur));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const ForkReplica& a, const ForkReplica& b) { return a.port < b.port; });
  return out;
}

namespace {

bool on_path(Coord from, Coord to, Coord cur, DimensionOrder order) {
  auto between = [](std::uint32_t v, std::uint32_t a, std::uint32_t b) {
    return v >= std::min(a, b) && v <= std::max(a, b);
  };
  if (order == DimensionOrder::XY)
    return (cur.y == from.y && between(cur.x, from.x, to.x)) ||
           (cur.x == to.x && between(cur.y, from.y, to.y));
  return (cur.x == from.x && between(cur.y, from.y, to.y)) ||
         (cur.y == to.y && between(cur.x, from.x, to.x));
}

}  // namespace

std::optional<Rect> fork_subtree(Coord origin, const Rect& set, Coord cur, DimensionOrder order) {
  std::optional<Rect> box;
  for (std::uint32_t y = set.lo.y; y <= set.hi.y; ++y)
    for (std::uint32_t x = set.lo.x; x <= set.hi.x; ++x) {
      Coord d{x, y};
      if (!on_path(origin, d, cur, order)) continue;
      if (!box) {
        box = Rect::point(d);
      } else {
        box->lo = {std::min(box->lo.x, x), std::min(box->lo.y, y)};
        box->hi = {std::max(box->hi.x, x), std::max(box->hi.y, y)};
      }
    }
  return box;
}

std::uint32_t join_fan_in(const Rect& sources, Coord sink, Coord cur, DimensionOrder order) {
  std::uint8_t seen = 0;
  for (std::uint32_t y = sources.lo.y; y <= sources.hi.y; ++y)
    for (std::uint32_t x = sources.lo.x; x <= sources.hi.x; ++x) {
      Coord s{x, y};
      if (!on_path(s, sink, cur, order)) continue;
      if (s == cur) {
        seen |= 1u << static_cast<int>(Port::Local);
        continue;
      }
      // Walk back one hop: the neighbour that forwards into cur.
      Port in = Port::Local;
      Coord c = s;
      while (c != cur) {
        Port p = route_dimension_ordered(c, sink, order);
        in = opposite(p);
        c = step(c, p);
      }
      seen |= 1u << static_cast<int>(in);
    }
  return static_cast<std::uint32_t>(__builtin_popcount(seen));
}

std::uint32_t fork_tree_edges(Coord origin, const Rect& set, DimensionOrder order) {
  std::uint32_t edges = 0;
  for (const auto& r : fork_partition(set, origin, order)) {
    if (r.port == Port::Local) continue;
    edges += 1 + fork_tree_edges(step(origin, r.port), r.subset, order);
  }
  return edges;
}

}  // namespace chipnoc
