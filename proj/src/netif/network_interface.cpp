// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#include "chipnoc/netif/network_interface.hpp"

#include <string>

#include "chipnoc/sim/errors.hpp"

namespace chipnoc {

namespace {

constexpr std::array<ChannelKind, 3> kEjectOrder{ChannelKind::Req, ChannelKind::Rsp,
                                                 ChannelKind::Wide};
// Collective ids are 32 bit; the flag stays clear of them after the << 8.
constexpr std::uint64_t kMulticastKey = 1ull << 48;

ChannelKind response_channel(const Transaction& req, const PacketFormat& fmt) {
  if (req.kind == TxnKind::WriteReq) return ChannelKind::Rsp;
  Transaction rsp;
  rsp.kind = TxnKind::ReadRsp;
  rsp.length = req.length;
  rsp.elem_size = req.elem_size;
  return default_channel(rsp, fmt);
}

}  // namespace

NetworkInterface::NetworkInterface(NiParams params, const Topology* topo, Metrics* metrics,
                                   EndpointCounters* counters)
    : p_(std::move(params)), topo_(topo), metrics_(metrics), counters_(counters) {}

std::uint64_t NetworkInterface::destination_key(const Transaction& t) const {
  // Responses on different channels, or requests that travel on different
  // channels, are not ordered by the network, so the channel pair is part
  // of the destination.
  std::uint64_t dst = t.collective.kind != CollectiveKind::None
                          ? kMulticastKey | t.collective.id
                          : static_cast<std::uint64_t>(t.dst);
  auto req = static_cast<std::uint64_t>(default_channel(t, p_.format));
  auto rsp = static_cast<std::uint64_t>(response_channel(t, p_.format));
  return dst << 8 | req << 4 | rsp;
}

RouteTarget NetworkInterface::target_for(const Transaction& t) const {
  RouteTarget target;
  if (t.collective.kind == CollectiveKind::Multicast && t.kind == TxnKind::WriteReq) {
    target.multicast = t.collective.rect;
  } else if (t.collective.kind == CollectiveKind::Barrier && t.kind == TxnKind::WriteReq) {
    target.coord = t.collective.rect.lo;
  } else {
    if (t.dst >= topo_->endpoints.size())
      throw ConfigError(p_.name + ": no endpoint " + std::to_string(t.dst));
    target = topo_->site(t.dst).target;
  }
  return target;
}

NiStall NetworkInterface::check(const Transaction& t) const {
  ChannelKind ch = default_channel(t, p_.format);
  if (inject_q_[index(ch)].size() + flit_count(t, ch, p_.format) > p_.inject_flits)
    return NiStall::QueueFull;
  if (is_request(t.kind)) {
    std::size_t space = is_read(t.kind) ? 0 : 1;
    if (count_[space] >= p_.outstanding) return NiStall::TableFull;
    auto it = outstanding_[space].find(t.id);
    if (it != outstanding_[space].end() && !it->second.empty() &&
        it->second.front().key != destination_key(t))
      return NiStall::OrderingHazard;
  }
  return NiStall::None;
}

bool NetworkInterface::try_send(Transaction t, Cycle now) {
  t.src = p_.id;
  if (check(t) != NiStall::None) return false;
  ChannelKind ch = default_channel(t, p_.format);
  PacketId packet = (static_cast<PacketId>(p_.id) << 40) | next_packet_++;
  auto flits = packetize(t, ch, p_.format, packet);
  RouteTarget target = target_for(t);

  std::shared_ptr<const std::vector<Port>> route;
  if (p_.source_routing && !target.multicast) {
    auto key = std::pair{t.dst, static_cast<std::uint8_t>(ch)};
    if (t.collective.kind == CollectiveKind::Barrier) key.first = kNoEndpoint;
    auto it = routes_.find(key);
    if (it == routes_.end() || t.collective.kind == CollectiveKind::Barrier) {
      const EndpointSite& me = topo_->site(p_.id);
      auto ports = source_route(me.target.coord, target.coord, p_.routing.order[index(ch)]);
      ports.back() = target.eject;
      route = std::make_shared<const std::vector<Port>>(std::move(ports));
      if (t.collective.kind != CollectiveKind::Barrier) routes_[key] = route;
    } else {
      route = it->second;
    }
  }

  bool join = t.kind == TxnKind::WriteRsp && t.collective.kind == CollectiveKind::Multicast;
  for (auto& f : flits) {
    f.target = target;
    f.inject = now;
    f.source_route = route;
    if (join) f.header.tag = CollectiveTag::Join;
    inject_q_[index(ch)].push_back(std::move(f));
  }
  metrics_->flits_created += flits.size();
  if (counters_) {
    counters_->tx_bytes += wire_bytes(t);
    counters_->touch(now);
  }
  if (is_request(t.kind)) {
    std::size_t space = is_read(t.kind) ? 0 : 1;
    outstanding_[space][t.id].push_back({destination_key(t), now});
    ++count_[space];
  }
  return true;
}

void NetworkInterface::tick_inject(Cycle now) {
  for (auto c : kAllChannels) {
    auto& q = inject_q_[index(c)];
    if (q.empty() || !inject_link_[index(c)].can_send(now)) continue;
    inject_link_[index(c)].send(std::move(q.front()), now);
    q.pop_front();
  }
}

void NetworkInterface::tick_eject(Cycle now) {
  for (auto c : kEjectOrder) {
    FlitQueue& q = eject_[index(c)];
    if (!q.ready(now)) continue;
    const Flit& f = q.front();
    auto key = std::tuple{f.src, f.packet, static_cast<std::uint8_t>(c)};
    if (!f.tail) {
      if (f.head && partial_.count(key))
        throw ProtocolError(p_.name + ": second head for packet " + std::to_string(f.packet));
      partial_[key].push_back(q.pop());
      continue;
    }
    std::vector<Flit> flits;
    auto it = partial_.find(key);
    if (it != partial_.end()) flits = it->second;
    flits.push_back(f);
    Transaction t = depacketize(flits);
    // Wide also carries read responses, so refusing a wide write here can
    // close a request/response cycle. Requester outstanding limits bound
    // what piles up at a target instead.
    if (sink_ && c == ChannelKind::Req && !sink_->can_accept(t)) continue;
    q.pop();
    if (it != partial_.end()) partial_.erase(it);

    if (!is_request(t.kind)) {
      std::size_t space = is_read(t.kind) ? 0 : 1;
      auto o = outstanding_[space].find(t.id);
      if (o == outstanding_[space].end() || o->second.empty())
        throw ProtocolError(p_.name + ": response id " + std::to_string(t.id) + " from endpoint " +
                            std::to_string(t.src) + " has no outstanding request");
      std::uint64_t dst = o->second.front().key >> 8;
      if (!(dst & kMulticastKey) && dst != t.src)
        throw ProtocolError(p_.name + ": response id " + std::to_string(t.id) +
                            " arrived out of order");
      o->second.pop_front();
      if (o->second.empty()) outstanding_[space].erase(o);
      --count_[space];
    }

    const Flit& head = flits.front();
    PacketRecord r;
    r.packet = head.packet;
    r.src = head.src;
    r.dst = p_.id;
    r.channel = c;
    r.kind = t.kind;
    r.inject = head.inject;
    r.deliver = now;
    r.hops = flits.back().hops;
    r.flits = static_cast<std::uint32_t>(flits.size());
    r.bytes = wire_bytes(t);
    r.probe = t.probe;
    metrics_->record_packet(r);
    metrics_->flits_destroyed += flits.size();
    if (counters_) {
      counters_->rx_bytes += r.bytes;
      counters_->touch(now);
    }
    if (sink_) sink_->deliver(std::move(t), now);
  }
}

bool NetworkInterface::quiet() const {
  for (const auto& q : inject_q_)
    if (!q.empty()) return false;
  for (const auto& q : eject_)
    if (!q.empty()) return false;
  return partial_.empty();
}

bool NetworkInterface::idle() const { return quiet() && count_[0] == 0 && count_[1] == 0; }

void NetworkInterface::describe_stuck(std::vector<std::string>& out) const {
  for (std::size_t s = 0; s < 2; ++s)
    for (const auto& [id, q] : outstanding_[s])
      for (const auto& p : q)
        out.push_back(p_.name + " awaits " + (s == 0 ? "read" : "write") + " id " +
                      std::to_string(id) + " issued at " + std::to_string(p.issued));
  for (auto c : kAllChannels)
    if (!inject_q_[index(c)].empty())
      out.push_back(p_.name + " holds " + std::to_string(inject_q_[index(c)].size()) + " " +
                    std::string(to_string(c)) + " flits for injection");
}

void attach(NetworkInterface& ni, Router& router, std::size_t port, Cycle delay,
            std::size_t fifo_depth, Metrics& metrics, CommitLog* log) {
  for (auto c : kAllChannels) {
    FlitQueue& in = router.input(port, c);
    in.configure(fifo_depth + delay, log);
    OutLink& up = ni.inject_link(c);
    up.dst = &in;
    up.delay = delay;
    up.stats = &metrics.add_link("ni" + std::to_string(ni.id()) + ">" + router.name(), c, false);

    FlitQueue& ej = ni.eject_queue(c);
    ej.configure(fifo_depth + delay, log);
    OutLink& down = router.output(port, c);
    down.dst = &ej;
    down.delay = delay;
    down.stats = &metrics.add_link(router.name() + ">ni" + std::to_string(ni.id()), c, false);
  }
}

}  // namespace chipnoc
