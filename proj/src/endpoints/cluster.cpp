// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#include "chipnoc/endpoints/cluster.hpp"

#include <string>

#include "chipnoc/sim/errors.hpp"

namespace chipnoc {

void TargetServer::serve(const Transaction& req) {
  Transaction rsp;
  rsp.id = req.id;
  rsp.dst = req.src;
  rsp.address = req.address;
  rsp.probe = req.probe;
  if (req.kind == TxnKind::WriteReq) {
    store_->write(req.address, req.payload);
    rsp.kind = TxnKind::WriteRsp;
    if (req.collective.kind == CollectiveKind::Multicast) {
      rsp.collective = req.collective;
      rsp.collective.count = 1;
    }
  } else {
    rsp.kind = TxnKind::ReadRsp;
    rsp.length = req.length;
    rsp.elem_size = req.elem_size;
    if (req.packed()) {
      for (auto a : req.gather) {
        auto bytes = store_->read(a, req.elem_size);
        rsp.payload.insert(rsp.payload.end(), bytes.begin(), bytes.end());
      }
    } else {
      rsp.payload = store_->read(req.address, req.length);
    }
  }
  rsp_.push_back(std::move(rsp));
}

void TargetServer::tick(NetworkInterface& ni, EndpointCounters& counters, Cycle now) {
  if (rsp_.empty()) return;
  std::uint32_t len = rsp_.front().length;
  if (!ni.try_send(rsp_.front(), now)) return;
  counters.useful_bytes += len;
  rsp_.pop_front();
}

ClusterEndpoint::ClusterEndpoint(EndpointId id, NetworkInterface* ni, EndpointCounters* counters,
                                 ClusterParams params)
    : Endpoint(id, ni, counters),
      p_(std::move(params)),
      spm_(0x53504d00ull + id),
      target_(&spm_, 16),
      dma_(p_.dma, p_.format,
           DmaContext{id, p_.coord, &spm_, ni, counters,
                      p_.collectives ? std::function<std::uint32_t()>([this] {
                        return (1u << 31) | (static_cast<std::uint32_t>(id_ & 0x7fff) << 16) |
                               (multicast_seq_++ & 0xffff);
                      })
                                     : std::function<std::uint32_t()>()}),
      rng_(p_.seed, 0x434c0000ull + id) {}

void ClusterEndpoint::send(Transaction t, std::uint32_t tag, Cycle now) {
  t.id = kRawId;
  RawResult r;
  r.tag = tag;
  r.kind = t.kind;
  r.submitted = now;
  raw_queue_.push_back({std::move(t), r});
}

EndpointId ClusterEndpoint::aggregator(const Rect& r) const {
  if (!p_.topo || p_.topo->kind != TopologyKind::Mesh)
    throw ConfigError("software barriers need a mesh topology");
  return p_.topo->cluster_at(r.lo);
}

void ClusterEndpoint::collective(const CollectiveOp& op, Cycle now) {
  if (!op.rect.valid() || !op.rect.contains(p_.coord))
    throw ConfigError("cluster " + std::to_string(id_) + " is not a participant of barrier " +
                      std::to_string(op.id));
  if (op.id >= (1u << 31)) throw ConfigError("barrier id out of range");
  BarrierResult r{op.id, op.tag, now, 0};
  if (op.kind == CollectiveOpKind::Barrier) {
    if (!p_.collectives) throw RoutingError("in-network barriers need a mesh topology");
    barrier_queue_.push_back(r);
    barrier_ops_.push_back(op);
    return;
  }
  EndpointId agg = aggregator(op.rect);
  soft_waiting_[op.id] = r;
  if (agg == id_) soft_agg_[op.id].rect = op.rect;
  Transaction t;
  t.kind = TxnKind::WriteReq;
  t.address = kArriveBase + (op.id & 0xffff) * 8;
  t.length = 8;
  t.payload.resize(8);
  for (int i = 0; i < 8; ++i) t.payload[i] = static_cast<std::uint8_t>(op.id >> (8 * i));
  t.dst = agg;
  mailbox_out_.emplace_back(agg, std::move(t));
}

bool ClusterEndpoint::can_accept(const Transaction& t) const {
  return !is_request(t.kind) || target_.can_accept();
}

void ClusterEndpoint::deliver(Transaction t, Cycle now) {
  counters_->touch(now);
  if (is_request(t.kind)) {
    if (t.kind == TxnKind::WriteReq && t.length == 8 && t.address >= kArriveBase) {
      std::uint32_t bid = 0;
      for (int i = 0; i < 4; ++i) bid |= static_cast<std::uint32_t>(t.payload[i]) << (8 * i);
      if (t.address >= kReleaseBase) {
        auto it = soft_waiting_.find(bid);
        if (it == soft_waiting_.end())
          throw ProtocolError("release for unknown software barrier " + std::to_string(bid));
        it->second.released = now;
        barriers_done_.push_back(it->second);
        soft_waiting_.erase(it);
      } else {
        ++soft_agg_[bid].arrived;
      }
    }
    target_.serve(t);
    return;
  }

  if (DmaEngine::owns_id(t.id)) {
    dma_.on_response(std::move(t), now);
  } else if (t.id == kRawId) {
    auto& q = raw_inflight_[is_read(t.kind) ? 0 : 1];
    if (q.empty()) throw ProtocolError("raw response without request");
    RawResult r = q.front();
    q.pop_front();
    r.completed = now;
    raw_done_.push_back(r);
  } else if (t.id == kBarrierId) {
    for (auto it = barrier_inflight_.begin(); it != barrier_inflight_.end(); ++it) {
      if (it->id != t.collective.id) continue;
      it->released = now;
      barriers_done_.push_back(*it);
      barrier_inflight_.erase(it);
      return;
    }
    throw ProtocolError("release for unknown barrier " + std::to_string(t.collective.id));
  }
  // Background and mailbox acknowledgements carry no state.
}

void ClusterEndpoint::tick_background(Cycle now) {
  if (!background_) return;
  if (now >= background_->until || p_.clusters.size() < 2) {
    background_.reset();
    return;
  }
  if (!rng_.bernoulli(background_->rate)) return;
  EndpointId dst = p_.clusters[rng_.uniform(p_.clusters.size() - 1)];
  if (dst == id_) dst = p_.clusters.back();
  Transaction t;
  t.kind = TxnKind::WriteReq;
  t.dst = dst;
  t.address = 0x10'0000 + (background_sent_ % 512) * 8;
  t.length = background_->bytes;
  t.payload = spm_.read(t.address, t.length);
  for (std::uint16_t k = 0; k < kBackgroundIdCount; ++k) {
    t.id = kBackgroundIdFirst + (next_background_id_ + k) % kBackgroundIdCount;
    if (ni_->check(t) != NiStall::None) continue;
    ni_->try_send(std::move(t), now);
    next_background_id_ = static_cast<std::uint16_t>((next_background_id_ + k + 1) % kBackgroundIdCount);
    ++background_sent_;
    return;
  }
}

void ClusterEndpoint::tick_software_barriers(Cycle now) {
  for (auto it = soft_agg_.begin(); it != soft_agg_.end();) {
    auto& b = it->second;
    if (!b.rect || b.arrived < b.rect->area()) {
      ++it;
      continue;
    }
    for (std::uint32_t y = b.rect->lo.y; y <= b.rect->hi.y; ++y)
      for (std::uint32_t x = b.rect->lo.x; x <= b.rect->hi.x; ++x) {
        Transaction t;
        t.kind = TxnKind::WriteReq;
        t.address = kReleaseBase + (it->first & 0xffff) * 8;
        t.length = 8;
        t.payload.resize(8);
        for (int i = 0; i < 8; ++i) t.payload[i] = static_cast<std::uint8_t>(it->first >> (8 * i));
        t.dst = p_.topo->cluster_at(Coord{x, y});
        mailbox_out_.emplace_back(t.dst, std::move(t));
      }
    it = soft_agg_.erase(it);
  }

  if (mailbox_out_.empty()) return;
  Transaction& t = mailbox_out_.front().second;
  for (std::uint16_t k = 0; k < kMailboxIdCount; ++k) {
    t.id = kMailboxIdFirst + (next_mailbox_id_ + k) % kMailboxIdCount;
    if (ni_->check(t) != NiStall::None) continue;
    ni_->try_send(t, now);
    next_mailbox_id_ = static_cast<std::uint16_t>((next_mailbox_id_ + k + 1) % kMailboxIdCount);
    mailbox_out_.pop_front();
    return;
  }
}

void ClusterEndpoint::tick(Cycle now) {
  target_.tick(*ni_, *counters_, now);
  dma_.tick(now);

  if (!raw_queue_.empty()) {
    RawPending& r = raw_queue_.front();
    TxnKind kind = r.t.kind;
    if (ni_->try_send(r.t, now)) {
      r.result.issued = now;
      raw_inflight_[is_read(kind) ? 0 : 1].push_back(r.result);
      raw_queue_.pop_front();
    }
  }

  if (!barrier_queue_.empty()) {
    const CollectiveOp& op = barrier_ops_.front();
    Transaction t;
    t.kind = TxnKind::WriteReq;
    t.id = kBarrierId;
    t.collective = CollectiveInfo{CollectiveKind::Barrier, op.id, op.rect, op.rect.lo, 1};
    if (ni_->try_send(std::move(t), now)) {
      barrier_inflight_.push_back(barrier_queue_.front());
      barrier_queue_.pop_front();
      barrier_ops_.erase(barrier_ops_.begin());
    }
  }

  tick_software_barriers(now);
  tick_background(now);
}

bool ClusterEndpoint::idle() const {
  return target_.idle() && dma_.idle() && raw_queue_.empty() && raw_inflight_[0].empty() &&
         raw_inflight_[1].empty() && barrier_queue_.empty() && barrier_inflight_.empty() &&
         soft_waiting_.empty() && mailbox_out_.empty() && !background_;
}

void ClusterEndpoint::describe_stuck(std::vector<std::string>& out) const {
  const std::string& n = counters_->name;
  dma_.describe_stuck(out);
  for (const auto& b : barrier_inflight_)
    out.push_back(n + " waits for barrier " + std::to_string(b.id) + " since " +
                  std::to_string(b.submitted));
  for (const auto& [id, b] : soft_waiting_)
    out.push_back(n + " waits for software barrier " + std::to_string(id));
  if (!raw_queue_.empty() || !raw_inflight_[0].empty() || !raw_inflight_[1].empty())
    out.push_back(n + " has " +
                  std::to_string(raw_queue_.size() + raw_inflight_[0].size() +
                                 raw_inflight_[1].size()) +
                  " raw transactions pending");
  if (!target_.idle())
    out.push_back(n + " holds " + std::to_string(target_.pending()) + " responses");
}

bool HostMemory::can_accept(const Transaction& t) const {
  return !is_request(t.kind) || target_.can_accept();
}

void HostMemory::deliver(Transaction t, Cycle now) {
  if (!is_request(t.kind)) throw ProtocolError(counters_->name + ": unexpected response");
  counters_->touch(now);
  target_.serve(t);
}

}  // namespace chipnoc
