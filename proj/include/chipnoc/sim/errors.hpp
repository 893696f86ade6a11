// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace chipnoc {

/// Invalid configuration or a workload that does not fit the topology.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flit/transaction stream violates the interconnect protocol.
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A routing function had no answer for a (node, destination) pair.
class RoutingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simulation hit its cycle limit with traffic still in flight.
class TimeoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal invariant broken (e.g. a queue overflowed despite backpressure).
class SimulatorAssertion : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace chipnoc
