// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#include "chipnoc/endpoints/dma.hpp"

#include <algorithm>
#include <string>

#include "chipnoc/endpoints/packing.hpp"
#include "chipnoc/sim/errors.hpp"

namespace chipnoc {

namespace {

constexpr std::uint8_t kMaxBackends = 8;

bool is_local(EndpointId e, EndpointId self) { return e == kNoEndpoint || e == self; }

[[noreturn]] void reject(const std::string& why) { throw ConfigError("dma job rejected: " + why); }

}  // namespace

void validate_job(const DmaJob& job, EndpointId self) {
  const bool src_local = is_local(job.src, self);
  const bool dst_local = is_local(job.dst, self);
  if (job.elem_size != 1 && job.elem_size != 2 && job.elem_size != 4 && job.elem_size != 8)
    reject("element size must be 1, 2, 4 or 8 B");
  if (job.rows == 0) reject("zero rows");
  if (job.backends > kMaxBackends) reject("more than 8 backends");
  if (job.indices.empty()) {
    if (job.length == 0) reject("zero length");
    if (job.length % job.elem_size) reject("length is not a whole number of elements");
  } else {
    if (src_local) reject("gather source must be remote");
    if (!dst_local) reject("gather destination must be the local SPM");
    if (job.rows != 1 || job.multicast) reject("gather jobs are one-dimensional unicast");
  }
  if (job.op.kind != InStreamKind::None) {
    if (job.elem_size != 8) reject("in-stream ops need 8 B elements");
    if (job.length % 8 || job.src_addr % 8 || job.dst_addr % 8 || job.src_stride % 8 ||
        job.dst_stride % 8)
      reject("in-stream data not aligned to element boundary");
    if (job.op.kind == InStreamKind::Reduce && !dst_local)
      reject("reductions deliver their scalar to the local SPM");
  }
  if (job.multicast) {
    if (!src_local) reject("multicast source must be the local SPM");
    if (!job.multicast->valid()) reject("empty multicast rectangle");
    if (job.op.kind == InStreamKind::Reduce) reject("multicast reduction");
  }
}

std::vector<DmaBurst> plan_bursts(const DmaJob& job, EndpointId self, const DmaConfig& cfg,
                                  const PacketFormat& fmt) {
  validate_job(job, self);
  const std::uint32_t k = job.backends ? job.backends : std::min<std::uint32_t>(cfg.backends, kMaxBackends);
  const bool src_local = is_local(job.src, self);
  const bool dst_local = is_local(job.dst, self);
  std::vector<DmaBurst> out;

  if (!job.indices.empty()) {
    std::vector<std::uint64_t> addrs;
    addrs.reserve(job.indices.size());
    for (auto i : job.indices) addrs.push_back(job.src_addr + i * job.elem_size);
    if (job.packed.value_or(cfg.packing)) {
      std::uint64_t pos = 0;
      for (auto& chunk : pack_indices(addrs, job.elem_size, fmt.wide_bytes / 8)) {
        DmaBurst b;
        b.kind = DmaBurst::Kind::Read;
        b.src = job.src;
        b.elem_size = job.elem_size;
        b.length = static_cast<std::uint32_t>(chunk.addresses.size() * job.elem_size);
        b.dst_addr = job.dst_addr + pos * job.elem_size;
        pos += chunk.addresses.size();
        b.gather = std::move(chunk.addresses);
        out.push_back(std::move(b));
      }
    } else {
      for (std::size_t i = 0; i < addrs.size(); ++i) {
        DmaBurst b;
        b.kind = DmaBurst::Kind::Read;
        b.src = job.src;
        b.src_addr = addrs[i];
        b.length = job.elem_size;
        b.dst_addr = job.dst_addr + i * job.elem_size;
        out.push_back(std::move(b));
      }
    }
  } else {
    DmaBurst::Kind kind = src_local && (dst_local && !job.multicast) ? DmaBurst::Kind::Local
                          : src_local                              ? DmaBurst::Kind::Write
                          : dst_local                              ? DmaBurst::Kind::Read
                                                                   : DmaBurst::Kind::ReadWrite;
    for (std::uint32_t r = 0; r < job.rows; ++r) {
      std::uint64_t s = job.src_addr + r * job.src_stride;
      std::uint64_t d = job.dst_addr + r * job.dst_stride;
      for (std::uint64_t off = 0; off < job.length; off += fmt.max_burst) {
        DmaBurst b;
        b.kind = kind;
        b.src = job.src;
        b.dst = job.dst;
        b.src_addr = s + off;
        b.dst_addr = d + off;
        b.length = static_cast<std::uint32_t>(std::min<std::uint64_t>(fmt.max_burst, job.length - off));
        out.push_back(std::move(b));
      }
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].backend = static_cast<std::uint8_t>(i % k);
  return out;
}

DmaEngine::DmaEngine(const DmaConfig& cfg, const PacketFormat& fmt, DmaContext ctx)
    : cfg_(cfg), fmt_(fmt), ctx_(std::move(ctx)), backends_(kMaxBackends) {}

void DmaEngine::submit(DmaJob job, Cycle now) {
  JobState js;
  js.bursts = plan_bursts(job, ctx_.self, cfg_, fmt_);
  if (job.multicast && !ctx_.next_collective_id) reject("multicast needs a mesh cluster");
  js.unit = InStreamUnit(job.op);
  js.result.tag = job.tag;
  js.result.submitted = now;
  js.job = std::move(job);
  if (js.bursts.empty()) {
    js.finishing = true;
    js.finish_at = now;
    js.result.started = js.result.finished = now;
  }
  jobs_.push_back(std::move(js));
}

Transaction DmaEngine::write_txn(const DmaBurst& b, std::uint8_t backend,
                                 std::vector<std::uint8_t> data) {
  Transaction t;
  t.kind = TxnKind::WriteReq;
  t.id = backend;
  t.address = b.dst_addr;
  t.length = b.length;
  t.payload = std::move(data);
  t.dst = b.dst;
  return t;
}

bool DmaEngine::issue_burst(JobState& js, std::uint64_t seq, Cycle now) {
  const DmaBurst& b = js.bursts[js.next];
  Backend& be = backends_[b.backend];
  if (!js.started) {
    js.started = true;
    js.result.started = now;
  }
  switch (b.kind) {
    case DmaBurst::Kind::Local: {
      if (now < local_busy_until_) return false;
      auto data = ctx_.spm->read(b.src_addr, b.length);
      js.unit.feed(data);
      if (js.job.op.kind != InStreamKind::Reduce) ctx_.spm->write(b.dst_addr, data);
      local_busy_until_ = now + (b.length + fmt_.wide_bytes - 1) / fmt_.wide_bytes;
      ++js.next;
      js.result.bytes += b.length;
      complete_burst(js, now);
      return true;
    }
    case DmaBurst::Kind::Read:
    case DmaBurst::Kind::ReadWrite: {
      if (be.outstanding() >= cfg_.outstanding_per_backend) return false;
      Transaction t;
      t.kind = TxnKind::ReadReq;
      t.id = b.backend;
      t.dst = b.src;
      t.address = b.gather.empty() ? b.src_addr : b.gather.front();
      t.length = b.length;
      if (!b.gather.empty()) {
        t.gather = b.gather;
        t.elem_size = b.elem_size;
      }
      if (!ctx_.ni->try_send(std::move(t), now)) return false;
      be.reads.push_back({seq, js.next});
      break;
    }
    case DmaBurst::Kind::Write: {
      if (be.outstanding() >= cfg_.outstanding_per_backend) return false;
      auto data = ctx_.spm->read(b.src_addr, b.length);
      js.unit.feed(data);
      Transaction t = write_txn(b, b.backend, std::move(data));
      if (js.job.multicast) {
        t.dst = kNoEndpoint;
        t.collective.kind = CollectiveKind::Multicast;
        t.collective.rect = *js.job.multicast;
        t.collective.origin = ctx_.coord;
        t.collective.count = 1;
        if (ctx_.ni->check(t) != NiStall::None) return false;
        t.collective.id = ctx_.next_collective_id();
      }
      if (!ctx_.ni->try_send(std::move(t), now)) return false;
      be.writes.push_back({seq, js.next});
      break;
    }
  }
  ++js.next;
  ++js.result.transactions;
  return true;
}

void DmaEngine::complete_burst(JobState& js, Cycle now) {
  ++js.done;
  if (js.done < js.bursts.size()) return;
  js.finishing = true;
  js.finish_at = now + (js.job.op.kind == InStreamKind::None ? 0 : cfg_.pipeline_fill);
  js.result.finished = js.finish_at;
  if (js.job.op.kind == InStreamKind::Reduce) {
    js.result.scalar = js.unit.scalar();
    ctx_.spm->write_u64(js.job.dst_addr, js.unit.scalar());
  }
}

void DmaEngine::on_response(Transaction rsp, Cycle now) {
  if (rsp.id >= backends_.size()) throw ProtocolError("dma response for unknown backend");
  Backend& be = backends_[rsp.id];
  auto& q = rsp.kind == TxnKind::ReadRsp ? be.reads : be.writes;
  if (q.empty()) throw ProtocolError("dma response without an outstanding burst");
  InFlight f = q.front();
  q.pop_front();
  JobState& js = job(f.job);
  const DmaBurst& b = js.bursts[f.burst];
  if (rsp.kind == TxnKind::WriteRsp) {
    if (rsp.status == 0) throw ProtocolError("dma write failed");
    js.result.bytes += b.length;
    complete_burst(js, now);
    return;
  }
  if (rsp.payload.size() != b.length) throw ProtocolError("dma read returned wrong length");
  ctx_.counters->useful_bytes += rsp.payload.size();
  js.unit.feed(rsp.payload);
  if (b.kind == DmaBurst::Kind::ReadWrite) {
    be.staged.push_back({f.job, f.burst, std::move(rsp.payload)});
    return;
  }
  if (js.job.op.kind != InStreamKind::Reduce) ctx_.spm->write(b.dst_addr, rsp.payload);
  js.result.bytes += b.length;
  complete_burst(js, now);
}

void DmaEngine::tick(Cycle now) {
  while (!jobs_.empty() && jobs_.front().finishing && jobs_.front().finish_at <= now) {
    results_.push_back(jobs_.front().result);
    jobs_.pop_front();
    ++first_job_;
  }

  // Second halves of remote-to-remote copies go first.
  for (std::size_t i = 0; i < backends_.size(); ++i) {
    Backend& be = backends_[i];
    if (be.staged.empty() || be.outstanding() >= cfg_.outstanding_per_backend) continue;
    PendingWrite& pw = be.staged.front();
    JobState& js = job(pw.job);
    Transaction t = write_txn(js.bursts[pw.burst], static_cast<std::uint8_t>(i), pw.data);
    if (!ctx_.ni->try_send(std::move(t), now)) return;
    be.writes.push_back({pw.job, pw.burst});
    ++js.result.transactions;
    be.staged.pop_front();
    return;
  }

  std::size_t active = std::min<std::size_t>(cfg_.max_active_jobs, jobs_.size());
  for (std::size_t pos = 0; pos < active; ++pos) {
    JobState& js = jobs_[pos];
    if (js.finishing || js.next >= js.bursts.size()) continue;
    issue_burst(js, first_job_ + pos, now);
    return;
  }
}

void DmaEngine::describe_stuck(std::vector<std::string>& out) const {
  for (const auto& js : jobs_)
    out.push_back("dma job " + std::to_string(js.result.tag) + ": " + std::to_string(js.done) + "/" +
                  std::to_string(js.bursts.size()) + " bursts done, " + std::to_string(js.next) +
                  " issued");
}

}  // namespace chipnoc
