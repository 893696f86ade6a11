// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <variant>
#include <vector>

#include "chipnoc/endpoints/cluster.hpp"
#include "chipnoc/endpoints/dma.hpp"

namespace chipnoc {

using Action = std::variant<DmaJob, Transaction, CollectiveOp, BackgroundSpec>;

struct Injection {
  Cycle cycle = 0;
  EndpointId endpoint = kNoEndpoint;
  Action action;
  /// Raw transactions only; jobs and collectives carry their own tag.
  std::uint32_t tag = 0;
};

struct InjectionSchedule {
  std::vector<Injection> items;
  /// Stream the generator drew its random choices from.
  std::uint64_t stream = 0;

  void add(Cycle cycle, EndpointId ep, Action a, std::uint32_t tag = 0) {
    items.push_back({cycle, ep, std::move(a), tag});
  }
  /// Stable: equal-cycle items keep their insertion order.
  void sort() {
    std::stable_sort(items.begin(), items.end(),
                     [](const Injection& a, const Injection& b) { return a.cycle < b.cycle; });
  }
  bool empty() const { return items.empty(); }
};

}  // namespace chipnoc
