// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "chipnoc/metrics/metrics.hpp"
#include "chipnoc/netif/network_interface.hpp"

namespace chipnoc {

/// Something behind an NI that reacts to deliveries and may issue traffic.
class Endpoint : public TransactionSink {
 public:
  Endpoint(EndpointId id, NetworkInterface* ni, EndpointCounters* counters)
      : id_(id), ni_(ni), counters_(counters) {}

  EndpointId id() const { return id_; }
  NetworkInterface& ni() { return *ni_; }
  EndpointCounters& counters() { return *counters_; }
  const EndpointCounters& counters() const { return *counters_; }

  virtual void tick(Cycle now) = 0;
  /// Nothing left to do without new input.
  virtual bool idle() const = 0;
  virtual void describe_stuck(std::vector<std::string>&) const {}

 protected:
  EndpointId id_;
  NetworkInterface* ni_;
  EndpointCounters* counters_;
};

}  // namespace chipnoc
