// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chipnoc/noc/types.hpp"

namespace chipnoc {

/// Which dimension a dimension-ordered route resolves first.
enum class DimensionOrder : std::uint8_t { XY, YX };

enum class RoutingAlgorithm : std::uint8_t { DimensionOrdered, Table, Source };

/// X first (East/West), then Y (North/South), then Local. YX swaps the
/// first two steps.
Port route_dimension_ordered(Coord cur, Coord dst, DimensionOrder order = DimensionOrder::XY);

/// Router coordinates visited from src to dst, both inclusive.
std::vector<Coord> route_path(Coord src, Coord dst, DimensionOrder order = DimensionOrder::XY);

/// Output port taken at every router on the way, ending with Local at dst.
std::vector<Port> source_route(Coord src, Coord dst, DimensionOrder order = DimensionOrder::XY);

Coord step(Coord c, Port p);

/// Per-node next-hop table for a cols x rows mesh.
class RouteTable {
 public:
  RouteTable(std::uint32_t cols, std::uint32_t rows);

  /// Table filled from the dimension-ordered rule.
  static RouteTable dimension_ordered(std::uint32_t cols, std::uint32_t rows,
                                      DimensionOrder order = DimensionOrder::XY);

  void set(Coord node, Coord dst, Port port);
  void erase(Coord node, Coord dst);
  std::optional<Port> find(Coord node, Coord dst) const;

  std::uint32_t cols() const { return cols_; }
  std::uint32_t rows() const { return rows_; }

 private:
  std::size_t slot(Coord node, Coord dst) const;

  std::uint32_t cols_;
  std::uint32_t rows_;
  std::vector<std::uint8_t> entries_;
};

/// Table lookup; throws RoutingError naming (node, dst) when absent.
Port route_table(Coord node, const RouteTable& table, Coord dst);

}  // namespace chipnoc
