// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <vector>

#include "chipnoc/endpoints/backing_store.hpp"
#include "chipnoc/endpoints/instream.hpp"
#include "chipnoc/netif/network_interface.hpp"
#include "chipnoc/sim/config.hpp"

namespace chipnoc {

/// Transfer descriptor. `src`/`dst` equal to kNoEndpoint mean the local SPM.
struct DmaJob {
  EndpointId src = kNoEndpoint;
  std::uint64_t src_addr = 0;
  EndpointId dst = kNoEndpoint;
  std::uint64_t dst_addr = 0;
  std::uint8_t elem_size = 8;
  /// Bytes per row.
  std::uint64_t length = 0;
  std::uint32_t rows = 1;
  std::uint64_t src_stride = 0;
  std::uint64_t dst_stride = 0;
  /// 0 = engine default.
  std::uint32_t backends = 0;
  InStreamOp op;
  /// Gather: element indices relative to src_addr.
  std::vector<std::uint64_t> indices;
  std::optional<bool> packed;
  /// Write the local source to every cluster in this rectangle.
  std::optional<Rect> multicast;
  std::uint32_t tag = 0;
};

struct DmaJobResult {
  std::uint32_t tag = 0;
  Cycle submitted = 0;
  Cycle started = 0;
  Cycle finished = 0;
  std::uint64_t bytes = 0;
  std::uint32_t transactions = 0;
  std::optional<std::uint64_t> scalar;
};

/// One transaction-sized piece of a job.
struct DmaBurst {
  enum class Kind : std::uint8_t { Read, Write, ReadWrite, Local };
  Kind kind = Kind::Read;
  EndpointId src = kNoEndpoint;
  EndpointId dst = kNoEndpoint;
  std::uint64_t src_addr = 0;
  std::uint64_t dst_addr = 0;
  std::uint32_t length = 0;
  std::vector<std::uint64_t> gather;
  std::uint8_t elem_size = 0;
  std::uint8_t backend = 0;
};

/// Splits a job into bursts of at most max_burst bytes, assigned round-robin
/// to the backends. Rejects malformed jobs with ConfigError.
std::vector<DmaBurst> plan_bursts(const DmaJob& job, EndpointId self, const DmaConfig& cfg,
                                  const PacketFormat& fmt);

void validate_job(const DmaJob& job, EndpointId self);

struct DmaContext {
  EndpointId self = kNoEndpoint;
  Coord coord{};
  BackingStore* spm = nullptr;
  NetworkInterface* ni = nullptr;
  EndpointCounters* counters = nullptr;
  std::function<std::uint32_t()> next_collective_id;
};

/// Multi-backend DMA engine: each backend owns one transaction id, up to two
/// jobs are in flight, and at most one transaction is issued per cycle.
class DmaEngine {
 public:
  DmaEngine(const DmaConfig& cfg, const PacketFormat& fmt, DmaContext ctx);

  void submit(DmaJob job, Cycle now);
  void tick(Cycle now);
  void on_response(Transaction rsp, Cycle now);

  static bool owns_id(std::uint16_t id) { return id < 8; }

  bool idle() const { return jobs_.empty(); }
  std::size_t queued() const { return jobs_.size(); }
  const std::vector<DmaJobResult>& results() const { return results_; }
  void describe_stuck(std::vector<std::string>& out) const;

 private:
  struct JobState {
    DmaJob job;
    std::vector<DmaBurst> bursts;
    std::size_t next = 0;
    std::size_t done = 0;
    InStreamUnit unit;
    DmaJobResult result;
    bool started = false;
    Cycle finish_at = 0;
    bool finishing = false;
  };

  struct InFlight {
    std::uint64_t job;
    std::size_t burst;
  };

  struct PendingWrite {
    std::uint64_t job;
    std::size_t burst;
    std::vector<std::uint8_t> data;
  };

  struct Backend {
    std::deque<InFlight> reads;
    std::deque<InFlight> writes;
    std::deque<PendingWrite> staged;
    std::size_t outstanding() const { return reads.size() + writes.size(); }
  };

  JobState& job(std::uint64_t seq) { return jobs_.at(seq - first_job_); }
  bool issue_burst(JobState& js, std::uint64_t seq, Cycle now);
  void complete_burst(JobState& js, Cycle now);
  Transaction write_txn(const DmaBurst& b, std::uint8_t backend, std::vector<std::uint8_t> data);

  DmaConfig cfg_;
  PacketFormat fmt_;
  DmaContext ctx_;
  std::deque<JobState> jobs_;
  std::uint64_t first_job_ = 0;
  std::vector<Backend> backends_;
  Cycle local_busy_until_ = 0;
  std::vector<DmaJobResult> results_;
};

}  // namespace chipnoc
