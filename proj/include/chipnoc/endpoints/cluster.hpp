// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chipnoc/endpoints/backing_store.hpp"
#include "chipnoc/endpoints/dma.hpp"
#include "chipnoc/endpoints/endpoint.hpp"
#include "chipnoc/sim/rng.hpp"

namespace chipnoc {

// Transaction id plan of a cluster NI.
inline constexpr std::uint16_t kBackgroundIdFirst = 8;
inline constexpr std::uint16_t kBackgroundIdCount = 4;
inline constexpr std::uint16_t kMailboxIdFirst = 12;
inline constexpr std::uint16_t kMailboxIdCount = 2;
inline constexpr std::uint16_t kRawId = 14;
inline constexpr std::uint16_t kBarrierId = 15;

// Software barrier mailboxes live at the top of the SPM address space.
inline constexpr std::uint64_t kArriveBase = 0xff00'0000;
inline constexpr std::uint64_t kReleaseBase = 0xff80'0000;

enum class CollectiveOpKind : std::uint8_t { Barrier, SoftwareBarrier };

struct CollectiveOp {
  CollectiveOpKind kind = CollectiveOpKind::Barrier;
  Rect rect{};
  /// Below 2^31; higher ids belong to DMA multicasts.
  std::uint32_t id = 0;
  std::uint32_t tag = 0;
};

/// Uniform-random narrow writes to other clusters.
struct BackgroundSpec {
  Cycle until = 0;
  double rate = 1.0;
  std::uint32_t bytes = 8;
};

struct RawResult {
  std::uint32_t tag = 0;
  TxnKind kind = TxnKind::ReadReq;
  Cycle submitted = 0;
  Cycle issued = 0;
  Cycle completed = 0;
};

struct BarrierResult {
  std::uint32_t id = 0;
  std::uint32_t tag = 0;
  Cycle submitted = 0;
  Cycle released = 0;
};

/// Serves reads and writes against a backing store; shared by clusters and
/// the host memory.
class TargetServer {
 public:
  TargetServer(BackingStore* store, std::size_t depth) : store_(store), depth_(depth) {}

  bool can_accept() const { return rsp_.size() < depth_; }
  void serve(const Transaction& req);
  /// Sends at most one response.
  void tick(NetworkInterface& ni, EndpointCounters& counters, Cycle now);
  bool idle() const { return rsp_.empty(); }
  std::size_t pending() const { return rsp_.size(); }

 private:
  BackingStore* store_;
  std::size_t depth_;
  std::deque<Transaction> rsp_;
};

struct ClusterParams {
  Coord coord{};
  DmaConfig dma;
  PacketFormat format;
  std::uint64_t seed = 1;
  /// All clusters, for background destination choice.
  std::vector<EndpointId> clusters;
  /// Mesh only: maps a software barrier's aggregation coordinate to its cluster.
  const Topology* topo = nullptr;
  bool collectives = false;
};

class ClusterEndpoint : public Endpoint {
 public:
  ClusterEndpoint(EndpointId id, NetworkInterface* ni, EndpointCounters* counters,
                  ClusterParams params);

  void submit(DmaJob job, Cycle now) { dma_.submit(std::move(job), now); }
  /// Sends t (src is filled in) with a raw id; the response is recorded.
  void send(Transaction t, std::uint32_t tag, Cycle now);
  void collective(const CollectiveOp& op, Cycle now);
  void start_background(const BackgroundSpec& spec) { background_ = spec; }

  bool can_accept(const Transaction& t) const override;
  void deliver(Transaction t, Cycle now) override;
  void tick(Cycle now) override;
  bool idle() const override;
  void describe_stuck(std::vector<std::string>& out) const override;

  BackingStore& spm() { return spm_; }
  const BackingStore& spm() const { return spm_; }
  const DmaEngine& dma() const { return dma_; }
  const std::vector<RawResult>& raw_results() const { return raw_done_; }
  const std::vector<BarrierResult>& barrier_results() const { return barriers_done_; }
  std::uint64_t background_sent() const { return background_sent_; }

 private:
  struct RawPending {
    Transaction t;
    RawResult result;
  };
  struct SoftBarrier {
    std::uint32_t arrived = 0;
    std::optional<Rect> rect;
    std::size_t next_release = 0;
  };

  void tick_background(Cycle now);
  void tick_software_barriers(Cycle now);
  EndpointId aggregator(const Rect& r) const;

  ClusterParams p_;
  BackingStore spm_;
  TargetServer target_;
  DmaEngine dma_;
  std::uint32_t multicast_seq_ = 0;

  std::deque<RawPending> raw_queue_;
  // [0] reads, [1] writes: the two id spaces complete independently.
  std::array<std::deque<RawResult>, 2> raw_inflight_;
  std::vector<RawResult> raw_done_;

  std::deque<BarrierResult> barrier_queue_;
  std::vector<CollectiveOp> barrier_ops_;
  std::deque<BarrierResult> barrier_inflight_;
  std::map<std::uint32_t, BarrierResult> soft_waiting_;
  std::deque<std::pair<EndpointId, Transaction>> mailbox_out_;
  std::map<std::uint32_t, SoftBarrier> soft_agg_;
  std::vector<BarrierResult> barriers_done_;

  std::optional<BackgroundSpec> background_;
  CounterRng rng_;
  std::uint16_t next_background_id_ = 0;
  std::uint16_t next_mailbox_id_ = 0;
  std::uint64_t background_sent_ = 0;
};

/// Host-domain memory stub on the mesh edge.
class HostMemory : public Endpoint {
 public:
  HostMemory(EndpointId id, NetworkInterface* ni, EndpointCounters* counters)
      : Endpoint(id, ni, counters), store_(0x484f'5354ull), target_(&store_, 16) {}

  bool can_accept(const Transaction& t) const override;
  void deliver(Transaction t, Cycle now) override;
  void tick(Cycle now) override { target_.tick(*ni_, *counters_, now); }
  bool idle() const override { return target_.idle(); }

  BackingStore& store() { return store_; }

 private:
  BackingStore store_;
  TargetServer target_;
};

}  // namespace chipnoc
