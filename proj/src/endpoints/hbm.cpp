// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#include "chipnoc/endpoints/hbm.hpp"

#include <algorithm>
#include <string>

#include "chipnoc/sim/errors.hpp"

namespace chipnoc {

HbmChannel::HbmChannel(EndpointId id, NetworkInterface* ni, EndpointCounters* counters,
                       const HbmConfig& cfg)
    : Endpoint(id, ni, counters), cfg_(cfg), store_(0x4842'4d00ull + id),
      coalescer_(CoalescerConfig{cfg.coalescer_window, cfg.coalescer_age, cfg.granularity,
                                 std::max<std::uint32_t>(64, cfg.granularity)}) {}

bool HbmChannel::can_accept(const Transaction& t) const {
  (void)t;
  return jobs_.size() < cfg_.queue_depth;
}

void HbmChannel::enqueue_span(std::uint64_t seq, std::uint64_t addr, std::uint32_t len) {
  const std::uint64_t g = cfg_.granularity;
  std::uint64_t lo = addr / g * g;
  std::uint64_t hi = (addr + std::max<std::uint32_t>(len, 1) + g - 1) / g * g;
  queue_.push_back({lo, static_cast<std::uint32_t>(hi - lo), len, {seq}});
}

bool HbmChannel::within_granule(std::uint64_t addr, std::uint32_t len) const {
  return len > 0 && addr / cfg_.granularity == (addr + len - 1) / cfg_.granularity;
}

void HbmChannel::deliver(Transaction t, Cycle now) {
  if (!is_request(t.kind)) throw ProtocolError(counters_->name + ": unexpected response");
  counters_->touch(now);
  std::uint64_t seq = first_seq_ + jobs_.size();
  Job job;
  switch (t.kind) {
    case TxnKind::WriteReq:
      store_.write(t.address, t.payload);
      enqueue_span(seq, t.address, t.length);
      job.remaining = 1;
      break;
    case TxnKind::ReadReq:
      if (t.packed()) {
        for (auto a : t.gather) {
          if (cfg_.coalescer && within_granule(a, t.elem_size)) coalescer_.push({a, t.elem_size, seq}, now);
          else enqueue_span(seq, a, t.elem_size);
        }
        job.remaining = static_cast<std::uint32_t>(t.gather.size());
      } else if (cfg_.coalescer && t.length < cfg_.granularity && within_granule(t.address, t.length)) {
        coalescer_.push({t.address, static_cast<std::uint8_t>(t.length), seq}, now);
        job.remaining = 1;
      } else {
        enqueue_span(seq, t.address, t.length);
        job.remaining = 1;
      }
      break;
    default: break;
  }
  job.req = std::move(t);
  jobs_.push_back(std::move(job));
}

void HbmChannel::tick(Cycle now) {
  coalescer_.tick(now);
  while (coalescer_.has_output()) {
    GranuleAccess a = coalescer_.pop_output();
    queue_.push_back({a.address, a.size, a.useful, std::move(a.tags)});
  }

  const std::uint64_t peak = cfg_.peak_bytes;
  while (!queue_.empty() && t_free_ < (now + 1) * peak) {
    MemoryAccess a = std::move(queue_.front());
    queue_.pop_front();
    t_free_ = std::max(t_free_, now * peak) + a.size;
    Cycle done = (t_free_ + peak - 1) / peak + cfg_.latency;
    counters_->access_bytes += a.size;
    ++accesses_started_;
    for (auto seq : a.tags) {
      Job& j = jobs_.at(seq - first_seq_);
      --j.remaining;
      j.ready = std::max(j.ready, done);
    }
  }

  while (!jobs_.empty() && jobs_.front().remaining == 0 && jobs_.front().ready <= now) {
    const Transaction& req = jobs_.front().req;
    Transaction rsp;
    rsp.id = req.id;
    rsp.dst = req.src;
    rsp.address = req.address;
    rsp.probe = req.probe;
    if (req.kind == TxnKind::ReadReq) {
      rsp.kind = TxnKind::ReadRsp;
      rsp.length = req.length;
      rsp.elem_size = req.elem_size;
      if (req.packed()) {
        rsp.payload.reserve(req.length);
        for (auto a : req.gather) {
          auto bytes = store_.read(a, req.elem_size);
          rsp.payload.insert(rsp.payload.end(), bytes.begin(), bytes.end());
        }
      } else {
        rsp.payload = store_.read(req.address, req.length);
      }
    } else {
      rsp.kind = TxnKind::WriteRsp;
    }
    if (!ni_->try_send(rsp, now)) break;
    counters_->useful_bytes += req.length;
    counters_->touch(now);
    jobs_.pop_front();
    ++first_seq_;
  }
}

bool HbmChannel::idle() const { return jobs_.empty() && queue_.empty() && coalescer_.empty(); }

void HbmChannel::describe_stuck(std::vector<std::string>& out) const {
  if (!jobs_.empty())
    out.push_back(counters_->name + " holds " + std::to_string(jobs_.size()) + " requests, " +
                  std::to_string(queue_.size()) + " accesses queued");
}

}  // namespace chipnoc
