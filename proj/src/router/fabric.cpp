// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#include "chipnoc/router/fabric.hpp"

#include <string>

#include "chipnoc/sim/errors.hpp"

namespace chipnoc {

std::string_view to_string(EndpointKind k) {
  switch (k) {
    case EndpointKind::Cluster: return "cluster";
    case EndpointKind::Hbm: return "hbm";
    case EndpointKind::Host: return "host";
  }
  return "?";
}

EndpointId Topology::cluster_at(Coord c) const {
  if (kind != TopologyKind::Mesh || c.x >= cols || c.y >= rows)
    throw ConfigError("no cluster at " + to_string(c));
  return clusters.at(static_cast<std::size_t>(c.y) * cols + c.x);
}

EndpointId Topology::home_channel(EndpointId cluster) const {
  const EndpointSite& s = site(cluster);
  if (s.kind != EndpointKind::Cluster) throw ConfigError(s.name + " is not a cluster");
  if (hbm.empty()) throw ConfigError("topology has no HBM channels");
  if (kind == TopologyKind::Crossbar) return hbm[s.index % hbm.size()];
  std::uint32_t per_chiplet = static_cast<std::uint32_t>(hbm.size()) / (rows / rows_per_chiplet);
  std::uint32_t local_row = s.target.coord.y % rows_per_chiplet;
  std::uint32_t ch = local_row * per_chiplet / rows_per_chiplet;
  return hbm[s.chiplet * per_chiplet + ch];
}

std::size_t Fabric::add_router(std::string name, RouterKind kind, std::size_t ports, Coord coord,
                               RoutingSetup routing, std::size_t join_capacity) {
  routers_.push_back(std::make_unique<Router>(std::move(name), kind, ports, coord, routing,
                                              join_capacity, &log_, metrics_));
  wiring_.emplace_back(ports);
  return routers_.size() - 1;
}

void Fabric::connect(std::size_t a, std::size_t port_a, std::size_t b, std::size_t port_b,
                     const LinkSpec& spec) {
  auto one_way = [&](Router& from, std::size_t pf, Router& to, std::size_t pt) {
    for (auto c : kAllChannels) {
      OutLink& l = from.output(pf, c);
      if (l.connected()) throw ConfigError(from.name() + " port " + std::to_string(pf) + " wired twice");
      FlitQueue& q = to.input(pt, c);
      q.configure(spec.fifo_depth + spec.delay, &log_);
      l.dst = &q;
      l.delay = spec.delay;
      l.serialization = spec.serialization[index(c)];
      l.stats = &metrics_->add_link(from.name() + ">" + to.name(), c, spec.hop);
    }
  };
  one_way(*routers_.at(a), port_a, *routers_.at(b), port_b);
  one_way(*routers_.at(b), port_b, *routers_.at(a), port_a);
  wiring_[a][port_a] = std::pair{b, port_b};
  wiring_[b][port_b] = std::pair{a, port_a};
}

std::optional<std::pair<std::size_t, std::size_t>> Fabric::neighbor(std::size_t router,
                                                                    std::size_t port) const {
  return wiring_.at(router).at(port);
}

const RouteTable* Fabric::own_table(RouteTable t) {
  tables_.push_back(std::make_unique<RouteTable>(std::move(t)));
  return tables_.back().get();
}

const std::vector<std::uint8_t>* Fabric::own_port_map(std::vector<std::uint8_t> m) {
  port_maps_.push_back(std::make_unique<std::vector<std::uint8_t>>(std::move(m)));
  return port_maps_.back().get();
}

void Fabric::tick(Cycle now) {
  for (auto& r : routers_) r->tick(now);
}

void Fabric::commit() {
  for (FlitQueue* q : log_) q->commit();
  log_.clear();
}

bool Fabric::empty() const {
  for (const auto& r : routers_)
    if (!r->empty()) return false;
  return true;
}

void Fabric::describe_stuck(std::vector<std::string>& out) const {
  for (const auto& r : routers_) r->describe_stuck(out);
}

Topology build_mesh(Fabric& fabric, const SimConfig& cfg) {
  const MeshConfig& m = cfg.mesh;
  Topology topo;
  topo.kind = TopologyKind::Mesh;
  topo.cols = m.cols;
  topo.rows = m.rows * m.chiplets;
  topo.rows_per_chiplet = m.rows;

  RoutingSetup routing;
  routing.algorithm.fill(m.routing);
  if (m.routing == RoutingAlgorithm::Table) {
    for (auto c : kAllChannels)
      routing.tables[index(c)] = fabric.own_table(
          RouteTable::dimension_ordered(topo.cols, topo.rows, routing.order[index(c)]));
  }

  auto rid = [&](std::uint32_t x, std::uint32_t y) { return static_cast<std::size_t>(y) * m.cols + x; };
  for (std::uint32_t y = 0; y < topo.rows; ++y)
    for (std::uint32_t x = 0; x < m.cols; ++x)
      fabric.add_router("r" + std::to_string(x) + "." + std::to_string(y), RouterKind::Mesh,
                        kMeshPorts, {x, y}, routing, cfg.router.join_table);

  LinkSpec on_die;
  on_die.delay = m.link_latency + m.router_latency;
  on_die.fifo_depth = m.fifo_depth;
  LinkSpec d2d = on_die;
  d2d.delay += cfg.d2d.crossing_latency;
  d2d.serialization = {cfg.d2d.narrow_serialization, cfg.d2d.narrow_serialization,
                       cfg.d2d.wide_serialization};

  auto p = [](Port q) { return static_cast<std::size_t>(q); };
  for (std::uint32_t y = 0; y < topo.rows; ++y)
    for (std::uint32_t x = 0; x < m.cols; ++x) {
      if (x + 1 < m.cols) fabric.connect(rid(x, y), p(Port::East), rid(x + 1, y), p(Port::West), on_die);
      if (y + 1 < topo.rows) {
        bool crossing = (y + 1) % m.rows == 0;
        fabric.connect(rid(x, y), p(Port::North), rid(x, y + 1), p(Port::South),
                       crossing ? d2d : on_die);
      }
    }

  auto add = [&](EndpointKind kind, std::string name, Coord c, Port port, std::uint32_t chiplet,
                 std::uint32_t idx) {
    EndpointSite s;
    s.id = static_cast<EndpointId>(topo.endpoints.size());
    s.kind = kind;
    s.name = std::move(name);
    s.router = rid(c.x, c.y);
    s.port = static_cast<std::uint8_t>(port);
    s.target.coord = c;
    s.target.eject = port;
    s.chiplet = chiplet;
    s.index = idx;
    topo.endpoints.push_back(s);
    return s.id;
  };

  for (std::uint32_t y = 0; y < topo.rows; ++y)
    for (std::uint32_t x = 0; x < m.cols; ++x)
      topo.clusters.push_back(add(EndpointKind::Cluster,
                                  "cluster" + std::to_string(x) + "." + std::to_string(y), {x, y},
                                  Port::Local, y / m.rows,
                                  static_cast<std::uint32_t>(topo.clusters.size())));
  for (std::uint32_t c = 0; c < m.chiplets; ++c)
    for (std::uint32_t h = 0; h < cfg.hbm.channels; ++h) {
      std::uint32_t row = c * m.rows + h * m.rows / cfg.hbm.channels;
      topo.hbm.push_back(add(EndpointKind::Hbm, "hbm" + std::to_string(topo.hbm.size()), {0, row},
                             Port::West, c, static_cast<std::uint32_t>(topo.hbm.size())));
    }
  if (m.host) topo.host = add(EndpointKind::Host, "host", {m.cols - 1, 0}, Port::East, 0, 0);
  return topo;
}

}  // namespace chipnoc
