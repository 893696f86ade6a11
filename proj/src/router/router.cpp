// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#include "chipnoc/router/router.hpp"

#include <limits>
#include <string>

#include "chipnoc/noc/collective.hpp"
#include "chipnoc/sim/errors.hpp"

namespace chipnoc {

namespace {

constexpr std::array<ChannelKind, 3> kTickOrder{ChannelKind::Req, ChannelKind::Wide,
                                                ChannelKind::Rsp};

bool is_barrier_request(const Flit& f) {
  return f.header.kind == TxnKind::WriteReq && f.header.collective.kind == CollectiveKind::Barrier;
}

bool is_multicast_response(const Flit& f) {
  return f.header.kind == TxnKind::WriteRsp &&
         f.header.collective.kind == CollectiveKind::Multicast;
}

bool is_join_flit(ChannelKind c, const Flit& f) {
  return (c == ChannelKind::Req && is_barrier_request(f)) ||
         (c == ChannelKind::Rsp && is_multicast_response(f));
}

std::string flit_desc(const Flit& f) {
  return "packet " + std::to_string(f.packet) + " " + std::string(to_string(f.header.kind)) +
         " src " + std::to_string(f.src) + " dst " +
         (f.dst == kNoEndpoint ? std::string("multicast") : std::to_string(f.dst));
}

}  // namespace

Router::Router(std::string name, RouterKind kind, std::size_t ports, Coord coord,
               RoutingSetup routing, std::size_t join_capacity, CommitLog* log, Metrics* metrics)
    : name_(std::move(name)), kind_(kind), ports_(ports), coord_(coord), routing_(routing),
      joins_(join_capacity), metrics_(metrics) {
  if (ports > 31) throw ConfigError("router " + name_ + " has too many ports");
  for (auto c : kAllChannels) {
    in_[index(c)] = std::vector<Input>(ports + 1);
    out_[index(c)] = std::vector<Output>(ports);
    // The turnaround input is private; its capacity only bounds runaway bugs.
    in_[index(c)][ports].queue.configure(std::numeric_limits<std::size_t>::max(), log);
  }
}

bool Router::empty() const {
  for (const auto& ch : in_)
    for (const auto& in : ch)
      if (!in.queue.empty()) return false;
  return true;
}

void Router::describe_stuck(std::vector<std::string>& out) const {
  for (auto c : kAllChannels)
    for (std::size_t p = 0; p <= ports_; ++p) {
      const auto& q = in_[index(c)][p].queue;
      if (q.size() == 0) continue;
      out.push_back(name_ + " in " + std::to_string(p) + "/" + std::string(to_string(c)) + ": " +
                    flit_desc(q.front()) + " (+" + std::to_string(q.size() - 1) + " queued)");
    }
  for (const auto& [id, e] : joins_.entries())
    out.push_back(name_ + " join " + std::to_string(id) + ": " + std::to_string(e.received) + "/" +
                  std::to_string(e.expected) + " arrived");
}

void Router::tick(Cycle now) {
  for (auto c : kTickOrder) {
    auto& ins = in_[index(c)];
    bool any = false;
    for (const auto& in : ins)
      if (in.queue.size()) {
        any = true;
        break;
      }
    if (!any) continue;
    if (c != ChannelKind::Wide) process_joins(c, now);
    for (auto& in : ins) {
      if (in.routed || !in.queue.ready(now)) continue;
      const Flit& f = in.queue.front();
      if (f.channel != c) throw SimulatorAssertion(name_ + ": flit changed channel in flight");
      if (!f.head) throw SimulatorAssertion(name_ + ": body flit without a routed head");
      if (is_join_flit(c, f) && !in.joined) continue;
      route_head(c, in);
    }
    arbitrate(c, now);
    retire(c);
  }
}

void Router::process_joins(ChannelKind c, Cycle now) {
  auto& ins = in_[index(c)];
  for (std::size_t i = 0; i < ports_; ++i) {
    Input& in = ins[i];
    if (in.routed || in.joined || !in.queue.ready(now)) continue;
    Flit& f = in.queue.front();
    if (!is_join_flit(c, f)) continue;
    if (kind_ != RouterKind::Mesh) throw RoutingError(name_ + ": collectives need a mesh router");
    CollectiveInfo& ci = f.header.collective;

    std::uint32_t expected = 1;
    Coord sink{};
    if (c == ChannelKind::Req) {
      sink = barrier_aggregation_node(ci.rect);
      expected = join_fan_in(ci.rect, sink, coord_, routing_.order[index(c)]);
      if (expected > 1 && !joins_.contains(ci.id)) {
        if (joins_.full()) continue;
        joins_.install(ci.id, expected);
      }
    } else {
      DimensionOrder fwd = routing_.order[index(ChannelKind::Wide)];
      if (auto sub = fork_subtree(ci.origin, ci.rect, coord_, fwd))
        expected = static_cast<std::uint32_t>(fork_partition(*sub, coord_, fwd).size());
    }

    JoinOutcome o = joins_.update(ci.id, expected, f.header.status, ci.count);
    if (!o.complete) {
      in.queue.pop();
      ++metrics_->flits_destroyed;
      continue;
    }
    f.header.status = o.status;
    ci.count = o.count;

    if (c == ChannelKind::Req && coord_ == sink) {
      // Every participant has checked in: send the release back down the tree.
      Flit r;
      r.channel = ChannelKind::Rsp;
      r.src = f.src;
      r.dst = kNoEndpoint;
      r.target.multicast = ci.rect;
      r.packet = f.packet;
      r.head = r.tail = true;
      r.inject = now;
      r.header = f.header;
      r.header.kind = TxnKind::WriteRsp;
      r.header.tag = CollectiveTag::Fork;
      in.queue.pop();
      ++metrics_->flits_destroyed;
      in_[index(ChannelKind::Rsp)][ports_].queue.push_now(std::move(r), now);
      ++metrics_->flits_created;
      continue;
    }
    f.header.tag = CollectiveTag::Join;
    in.joined = true;
  }
}

std::uint8_t Router::unicast_port(ChannelKind c, Flit& f) const {
  std::uint8_t p = peek_port(c, f);
  if (kind_ == RouterKind::Mesh && routing_.algorithm[index(c)] == RoutingAlgorithm::Source)
    ++f.route_pos;
  return p;
}

std::uint8_t Router::peek_port(ChannelKind c, const Flit& f) const {
  if (kind_ != RouterKind::Mesh) {
    const auto* table = routing_.endpoint_ports;
    if (!table || f.dst >= table->size() || (*table)[f.dst] == 0xff)
      throw RoutingError(name_ + ": no route to endpoint " + std::to_string(f.dst));
    return (*table)[f.dst];
  }
  Port p = Port::Local;
  switch (routing_.algorithm[index(c)]) {
    case RoutingAlgorithm::DimensionOrdered:
      p = route_dimension_ordered(coord_, f.target.coord, routing_.order[index(c)]);
      break;
    case RoutingAlgorithm::Table: {
      const RouteTable* t = routing_.tables[index(c)];
      if (!t) throw RoutingError(name_ + ": table routing without a table");
      p = route_table(coord_, *t, f.target.coord);
      break;
    }
    case RoutingAlgorithm::Source:
      if (!f.source_route || f.route_pos >= f.source_route->size())
        throw RoutingError(name_ + ": source route exhausted for " + flit_desc(f));
      return static_cast<std::uint8_t>((*f.source_route)[f.route_pos]);
  }
  return static_cast<std::uint8_t>(p == Port::Local ? f.target.eject : p);
}

bool Router::route_head(ChannelKind c, Input& in) {
  Flit& f = in.queue.front();
  in.replicas.clear();
  if (f.target.multicast) {
    if (kind_ != RouterKind::Mesh) throw RoutingError(name_ + ": multicast needs a mesh router");
    auto parts = fork_partition(*f.target.multicast, coord_, routing_.order[index(c)]);
    if (parts.size() > 1 && f.header.kind == TxnKind::WriteReq &&
        f.header.collective.kind == CollectiveKind::Multicast) {
      // Responses will be merged here on their way back.
      if (!joins_.install(f.header.collective.id, static_cast<std::uint32_t>(parts.size())))
        return false;
    }
    for (const auto& p : parts)
      in.replicas.push_back({static_cast<std::uint8_t>(p.port), p.subset});
  } else {
    in.replicas.push_back({unicast_port(c, f), std::nullopt});
  }
  for (const auto& r : in.replicas)
    if (r.port >= ports_ || !out_[index(c)][r.port].link.connected())
      throw RoutingError(name_ + ": route for " + flit_desc(f) + " leaves through unconnected port " +
                         std::to_string(r.port));
  in.routed = true;
  in.pending = (1u << in.replicas.size()) - 1;
  in.locked = 0;
  return true;
}

void Router::arbitrate(ChannelKind c, Cycle now) {
  auto& ins = in_[index(c)];
  auto& outs = out_[index(c)];
  const std::size_t n_in = ins.size();
  auto replica_for = [](const Input& in, std::size_t port) -> int {
    for (std::size_t j = 0; j < in.replicas.size(); ++j)
      if (in.replicas[j].port == port) return (in.pending >> j) & 1u ? static_cast<int>(j) : -1;
    return -1;
  };

  for (std::size_t o = 0; o < ports_; ++o) {
    Output& out = outs[o];
    if (!out.link.can_send(now)) continue;
    int chosen = -1;
    int rep = -1;
    if (out.owner >= 0) {
      const Input& in = ins[static_cast<std::size_t>(out.owner)];
      if (in.routed && in.queue.ready(now)) {
        rep = replica_for(in, o);
        if (rep >= 0) chosen = out.owner;
      }
    } else {
      for (std::size_t k = 0; k < n_in; ++k) {
        std::size_t i = (out.rr + k) % n_in;
        const Input& in = ins[i];
        if (!in.routed || !in.queue.ready(now) || !in.queue.front().head) continue;
        int j = replica_for(in, o);
        if (j < 0) continue;
        // Multicast heads take their output locks in port order, which
        // keeps two forks from each holding what the other waits for.
        std::uint32_t lower = (1u << j) - 1;
        if ((in.locked & lower) != lower) continue;
        chosen = static_cast<int>(i);
        rep = j;
        break;
      }
      if (chosen >= 0) {
        out.owner = chosen;
        out.rr = (static_cast<std::size_t>(chosen) + 1) % n_in;
        ins[static_cast<std::size_t>(chosen)].locked |= 1u << rep;
      }
    }
    if (chosen < 0) continue;

    Input& in = ins[static_cast<std::size_t>(chosen)];
    Flit f = in.queue.front();
    const Replica& r = in.replicas[static_cast<std::size_t>(rep)];
    if (r.subset) f.target.multicast = r.subset;
    if (in.replicas.size() > 1) f.header.tag = CollectiveTag::Fork;
    if (out.link.stats && out.link.stats->hop) ++f.hops;
    bool tail = f.tail;
    out.link.send(std::move(f), now);
    in.pending &= ~(1u << rep);
    if (tail) out.owner = -1;
  }
}

void Router::retire(ChannelKind c) {
  for (auto& in : in_[index(c)]) {
    if (!in.routed || in.pending != 0) continue;
    Flit f = in.queue.pop();
    metrics_->flits_created += in.replicas.size() - 1;
    in.joined = false;
    if (f.tail) {
      in.routed = false;
      in.locked = 0;
      in.replicas.clear();
    } else {
      in.pending = (1u << in.replicas.size()) - 1;
    }
  }
}

}  // namespace chipnoc
