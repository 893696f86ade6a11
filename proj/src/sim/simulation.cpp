// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#include "chipnoc/sim/simulation.hpp"

#include <string>

#include "chipnoc/sim/errors.hpp"

namespace chipnoc {

Simulation::Simulation(SimConfig cfg) : cfg_(std::move(cfg)) {
  cfg_.validate();
  fabric_ = std::make_unique<Fabric>(&metrics_);
  std::size_t fifo = cfg_.mesh.fifo_depth;
  if (cfg_.topology == TopologyKind::Mesh) {
    topo_ = build_mesh(*fabric_, cfg_);
  } else {
    xbar_.emplace();
    topo_ = build_occamy_interconnect(*fabric_, cfg_, &*xbar_);
    fifo = cfg_.xbar.fifo_depth;
  }
  const bool mesh = cfg_.topology == TopologyKind::Mesh;

  for (const EndpointSite& s : topo_.endpoints) {
    EndpointCounters& counters = metrics_.add_endpoint(s.name, std::string(to_string(s.kind)));
    NiParams p;
    p.id = s.id;
    p.name = s.name;
    p.latency = cfg_.ni.latency;
    p.outstanding = cfg_.ni.outstanding;
    p.inject_flits = cfg_.ni.inject_flits;
    p.format = cfg_.noc;
    p.source_routing = mesh && cfg_.mesh.routing == RoutingAlgorithm::Source;
    auto ni = std::make_unique<NetworkInterface>(p, &topo_, &metrics_, &counters);
    attach(*ni, fabric_->router(s.router), s.port, cfg_.ni.latency, fifo, metrics_,
           fabric_->log());

    std::unique_ptr<Endpoint> ep;
    switch (s.kind) {
      case EndpointKind::Cluster: {
        ClusterParams cp;
        cp.coord = s.target.coord;
        cp.dma = cfg_.dma;
        cp.format = cfg_.noc;
        cp.seed = cfg_.seed;
        cp.clusters = topo_.clusters;
        cp.topo = &topo_;
        cp.collectives = mesh;
        ep = std::make_unique<ClusterEndpoint>(s.id, ni.get(), &counters, std::move(cp));
        break;
      }
      case EndpointKind::Hbm:
        ep = std::make_unique<HbmChannel>(s.id, ni.get(), &counters, cfg_.hbm);
        break;
      case EndpointKind::Host:
        ep = std::make_unique<HostMemory>(s.id, ni.get(), &counters);
        break;
    }
    ni->set_sink(ep.get());
    nis_.push_back(std::move(ni));
    endpoints_.push_back(std::move(ep));
  }
}

ClusterEndpoint& Simulation::cluster(EndpointId id) {
  if (id >= endpoints_.size() || topo_.site(id).kind != EndpointKind::Cluster)
    throw ConfigError("endpoint " + std::to_string(id) + " is not a cluster");
  return static_cast<ClusterEndpoint&>(*endpoints_[id]);
}

HbmChannel& Simulation::hbm(EndpointId id) {
  if (id >= endpoints_.size() || topo_.site(id).kind != EndpointKind::Hbm)
    throw ConfigError("endpoint " + std::to_string(id) + " is not an HBM channel");
  return static_cast<HbmChannel&>(*endpoints_[id]);
}

void Simulation::load(const InjectionSchedule& s) {
  for (const auto& in : s.items) {
    if (in.endpoint >= endpoints_.size())
      throw ConfigError("workload references unknown endpoint " + std::to_string(in.endpoint));
    if (topo_.site(in.endpoint).kind != EndpointKind::Cluster)
      throw ConfigError("workload injects at " + topo_.site(in.endpoint).name +
                        ", which is not a cluster");
    if (const auto* j = std::get_if<DmaJob>(&in.action)) {
      validate_job(*j, in.endpoint);
      for (EndpointId e : {j->src, j->dst})
        if (e != kNoEndpoint && e >= endpoints_.size())
          throw ConfigError("dma job references unknown endpoint " + std::to_string(e));
    }
    if (const auto* t = std::get_if<Transaction>(&in.action))
      if (t->dst >= endpoints_.size())
        throw ConfigError("transaction references unknown endpoint " + std::to_string(t->dst));
  }
  std::vector<Injection> rest(pending_.begin() + static_cast<std::ptrdiff_t>(next_), pending_.end());
  for (const auto& in : s.items) {
    Injection copy = in;
    copy.cycle = std::max(copy.cycle, now_);
    rest.push_back(std::move(copy));
  }
  std::stable_sort(rest.begin(), rest.end(),
                   [](const Injection& a, const Injection& b) { return a.cycle < b.cycle; });
  pending_ = std::move(rest);
  next_ = 0;
}

void Simulation::apply(const Injection& in) {
  ClusterEndpoint& c = cluster(in.endpoint);
  std::visit(
      [&](const auto& a) {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, DmaJob>) c.submit(a, now_);
        else if constexpr (std::is_same_v<T, Transaction>) c.send(a, in.tag, now_);
        else if constexpr (std::is_same_v<T, CollectiveOp>) c.collective(a, now_);
        else c.start_background(a);
      },
      in.action);
}

void Simulation::step() {
  while (next_ < pending_.size() && pending_[next_].cycle <= now_) apply(pending_[next_++]);
  fabric_->tick(now_);
  for (std::size_t i = 0; i < endpoints_.size(); ++i) {
    nis_[i]->tick_eject(now_);
    endpoints_[i]->tick(now_);
    nis_[i]->tick_inject(now_);
  }
  fabric_->commit();
  ++now_;
}

bool Simulation::quiescent() const {
  if (!fabric_->empty()) return false;
  for (const auto& ni : nis_)
    if (!ni->idle()) return false;
  for (const auto& ep : endpoints_)
    if (!ep->idle()) return false;
  return true;
}

Cycle Simulation::run() {
  for (;;) {
    if (quiescent()) {
      if (next_ == pending_.size()) break;
      // Nothing moves until the next injection.
      now_ = std::max(now_, pending_[next_].cycle);
    }
    if (now_ >= cfg_.max_cycles) timeout();
    step();
  }
  if (metrics_.flits_created != metrics_.flits_destroyed)
    throw SimulatorAssertion("flit conservation violated: " +
                             std::to_string(metrics_.flits_created) + " created, " +
                             std::to_string(metrics_.flits_destroyed) + " destroyed");
  return now_;
}

void Simulation::timeout() const {
  std::vector<std::string> stuck;
  fabric_->describe_stuck(stuck);
  for (const auto& ni : nis_) ni->describe_stuck(stuck);
  for (const auto& ep : endpoints_) ep->describe_stuck(stuck);
  std::string msg = "no quiescence after " + std::to_string(cfg_.max_cycles) + " cycles";
  std::size_t shown = 0;
  for (const auto& s : stuck) {
    if (++shown > 40) {
      msg += "\n  ... " + std::to_string(stuck.size() - 40) + " more";
      break;
    }
    msg += "\n  " + s;
  }
  throw TimeoutError(msg);
}

Topology make_topology(const SimConfig& cfg) {
  Metrics m;
  Fabric f(&m);
  return cfg.topology == TopologyKind::Mesh ? build_mesh(f, cfg) : build_occamy_interconnect(f, cfg);
}

MetricsReport run(const SimConfig& cfg, const InjectionSchedule& workload) {
  Simulation sim(cfg);
  sim.load(workload);
  sim.run();
  return sim.report();
}

}  // namespace chipnoc
