// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#include "chipnoc/noc/routing.hpp"

#include <string>

#include "chipnoc/sim/errors.hpp"

namespace chipnoc {

namespace {

constexpr std::uint8_t kNoEntry = 0xff;

Port route_x(Coord cur, Coord dst) { return dst.x > cur.x ? Port::East : Port::West; }
Port route_y(Coord cur, Coord dst) { return dst.y > cur.y ? Port::North : Port::South; }

}  // namespace

Port route_dimension_ordered(Coord cur, Coord dst, DimensionOrder order) {
  if (order == DimensionOrder::XY) {
    if (cur.x != dst.x) return route_x(cur, dst);
    if (cur.y != dst.y) return route_y(cur, dst);
  } else {
    if (cur.y != dst.y) return route_y(cur, dst);
    if (cur.x != dst.x) return route_x(cur, dst);
  }
  return Port::Local;
}

Coord step(Coord c, Port p) {
  switch (p) {
    case Port::North: return {c.x, c.y + 1};
    case Port::South: return {c.x, c.y - 1};
    case Port::East: return {c.x + 1, c.y};
    case Port::West: return {c.x - 1, c.y};
    case Port::Local: return c;
  }
  return c;
}

std::vector<Coord> route_path(Coord src, Coord dst, DimensionOrder order) {
  std::vector<Coord> path{src};
  Coord cur = src;
  while (cur != dst) {
    cur = step(cur, route_dimension_ordered(cur, dst, order));
    path.push_back(cur);
  }
  return path;
}

std::vector<Port> source_route(Coord src, Coord dst, DimensionOrder order) {
  std::vector<Port> ports;
  Coord cur = src;
  for (;;) {
    Port p = route_dimension_ordered(cur, dst, order);
    ports.push_back(p);
    if (p == Port::Local) break;
    cur = step(cur, p);
  }
  return ports;
}

RouteTable::RouteTable(std::uint32_t cols, std::uint32_t rows)
    : cols_(cols), rows_(rows),
      entries_(static_cast<std::size_t>(cols) * rows * cols * rows, kNoEntry) {}

RouteTable RouteTable::dimension_ordered(std::uint32_t cols, std::uint32_t rows,
                                         DimensionOrder order) {
  RouteTable t(cols, rows);
  for (std::uint32_t ny = 0; ny < rows; ++ny)
    for (std::uint32_t nx = 0; nx < cols; ++nx)
      for (std::uint32_t dy = 0; dy < rows; ++dy)
        for (std::uint32_t dx = 0; dx < cols; ++dx)
          t.set({nx, ny}, {dx, dy}, route_dimension_ordered({nx, ny}, {dx, dy}, order));
  return t;
}

std::size_t RouteTable::slot(Coord node, Coord dst) const {
  if (node.x >= cols_ || node.y >= rows_ || dst.x >= cols_ || dst.y >= rows_)
    throw RoutingError("route table: coordinate out of bounds (node " + to_string(node) +
                       ", dst " + to_string(dst) + ")");
  std::size_t n = static_cast<std::size_t>(node.y) * cols_ + node.x;
  std::size_t d = static_cast<std::size_t>(dst.y) * cols_ + dst.x;
  return n * cols_ * rows_ + d;
}

void RouteTable::set(Coord node, Coord dst, Port port) {
  entries_[slot(node, dst)] = static_cast<std::uint8_t>(port);
}

void RouteTable::erase(Coord node, Coord dst) { entries_[slot(node, dst)] = kNoEntry; }

std::optional<Port> RouteTable::find(Coord node, Coord dst) const {
  auto e = entries_[slot(node, dst)];
  if (e == kNoEntry) return std::nullopt;
  return static_cast<Port>(e);
}

Port route_table(Coord node, const RouteTable& table, Coord dst) {
  if (auto p = table.find(node, dst)) return *p;
  throw RoutingError("no route table entry at node " + to_string(node) + " for dst " +
                     to_string(dst));
}

}  // namespace chipnoc
