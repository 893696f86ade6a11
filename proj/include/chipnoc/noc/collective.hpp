// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chipnoc/noc/routing.hpp"
#include "chipnoc/noc/types.hpp"

namespace chipnoc {

struct ForkReplica {
  Port port;
  Rect subset;

  friend bool operator==(const ForkReplica&, const ForkReplica&) = default;
};

/// Splits a multicast rectangle at `cur` by dimension-ordered direction.
/// Replicas are disjoint, cover `set`, and come back in port order.
/// Throws std::invalid_argument on an empty/invalid set.
std::vector<ForkReplica> fork_partition(const Rect& set, Coord cur,
                                        DimensionOrder order = DimensionOrder::XY);

/// Members of `set` whose dimension-ordered path from `origin` passes
/// through `cur`.
std::optional<Rect> fork_subtree(Coord origin, const Rect& set, Coord cur,
                                 DimensionOrder order = DimensionOrder::XY);

/// Number of distinct input ports (Local counts for a source at `cur`) by
/// which dimension-ordered paths from every member of `sources` to `sink`
/// enter `cur`. This is the expected count of an in-router join.
std::uint32_t join_fan_in(const Rect& sources, Coord sink, Coord cur, DimensionOrder order);

/// Links used by the fork tree rooted at `origin` spanning `set`.
std::uint32_t fork_tree_edges(Coord origin, const Rect& set,
                              DimensionOrder order = DimensionOrder::XY);

/// Barrier joins aggregate at the coordinate-wise minimum of the rectangle.
constexpr Coord barrier_aggregation_node(const Rect& r) { return r.lo; }

}  // namespace chipnoc
