// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0

// End-to-end acceptance checks. Run with no argument for all criteria or
// with a criterion number for one. Every check prints one PASS/FAIL line.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "chipnoc/cli/scenarios.hpp"
#include "chipnoc/endpoints/instream.hpp"
#include "chipnoc/traffic/generators.hpp"

using namespace chipnoc;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// ---- oracles ---------------------------------------------------------------

std::uint32_t dist(Coord a, Coord b) {
  return static_cast<std::uint32_t>(std::abs(static_cast<int>(a.x) - static_cast<int>(b.x)) +
                                    std::abs(static_cast<int>(a.y) - static_cast<int>(b.y)));
}

/// Nodes of the X-then-Y path from a to b, endpoints included.
std::vector<Coord> xy_walk(Coord a, Coord b) {
  std::vector<Coord> p{a};
  while (a.x != b.x) {
    a.x = a.x < b.x ? a.x + 1 : a.x - 1;
    p.push_back(a);
  }
  while (a.y != b.y) {
    a.y = a.y < b.y ? a.y + 1 : a.y - 1;
    p.push_back(a);
  }
  return p;
}

std::string link_name(Coord a, Coord b) {
  return "r" + std::to_string(a.x) + "." + std::to_string(a.y) + ">r" + std::to_string(b.x) + "." +
         std::to_string(b.y);
}

double cluster_util(const ClusterEndpoint& c, double peak) {
  Cycle s = ~Cycle{0}, e = 0;
  std::uint64_t bytes = 0;
  for (const auto& r : c.dma().results()) {
    s = std::min(s, r.started);
    e = std::max(e, r.finished);
    bytes += r.bytes;
  }
  return e > s ? static_cast<double>(bytes) / (static_cast<double>(e - s) * peak) : 0.0;
}

struct FullLoad {
  double avg = 0, min = 1e9, max = 0, channels = 0;
};

FullLoad full_load(const SimConfig& cfg) {
  Simulation sim(cfg);
  sim.load(gen_hbm_load(Load::Full, sim.topology(), cfg.traffic.transfer_bytes, cfg.traffic.tiles));
  sim.run();
  FullLoad f;
  for (EndpointId id : sim.topology().clusters) {
    double u = cluster_util(sim.cluster(id), cfg.hbm.peak_bytes);
    f.avg += u;
    f.min = std::min(f.min, u);
    f.max = std::max(f.max, u);
  }
  f.avg /= static_cast<double>(sim.topology().clusters.size());
  std::size_t n = 0;
  for (EndpointId h : sim.topology().hbm) {
    const auto& c = sim.hbm(h).counters();
    if (!c.useful_bytes) continue;
    f.channels += static_cast<double>(c.useful_bytes) /
                  (static_cast<double>(c.last_active - c.first_active + 1) * cfg.hbm.peak_bytes);
    ++n;
  }
  f.channels /= static_cast<double>(n);
  return f;
}

// ---- criteria --------------------------------------------------------------

Outcome c1_full_load_cap() {
  auto t0 = Clock::now();
  SimConfig cfg;
  FullLoad f = full_load(cfg);
  double secs = seconds_since(t0);
  bool ok = std::abs(f.min - 0.25) <= 0.01 && std::abs(f.max - 0.25) <= 0.01 && f.channels >= 0.95 &&
            secs < 10.0;
  return {ok, "per-cluster " + num(f.min) + ".." + num(f.max) + ", channels " + num(f.channels) +
                  ", " + num(secs) + " s"};
}

Outcome c2_zero_load() {
  SimConfig cfg;
  Topology topo = make_topology(cfg);
  double lo = 1, worst_secs = 0;
  for (EndpointId c : topo.clusters) {
    auto t0 = Clock::now();
    Simulation sim(cfg);
    sim.load(gen_hbm_load(Load::Zero, topo, cfg.traffic.transfer_bytes, cfg.traffic.tiles, c));
    sim.run();
    lo = std::min(lo, cluster_util(sim.cluster(c), cfg.hbm.peak_bytes));
    worst_secs = std::max(worst_secs, seconds_since(t0));
  }
  bool ok = cfg.traffic.transfer_bytes >= 16384 && cfg.dma.backends > 1 && lo >= 0.95 && worst_secs < 5.0;
  return {ok, "min over 32 clusters " + num(lo) + ", slowest run " + num(worst_secs) + " s"};
}

Outcome c3_xbar_vs_mesh() {
  SimConfig mesh, xbar;
  xbar.topology = TopologyKind::Crossbar;
  FullLoad m = full_load(mesh), x = full_load(xbar);
  bool ok = m.avg >= 1.10 * x.avg;
  return {ok, "mesh " + num(m.avg) + " vs crossbar " + num(x.avg) + ", relative gap " +
                  num(m.avg / x.avg - 1.0) + " (need >= 0.10)"};
}

Outcome c4_latency_linearity() {
  auto t0 = Clock::now();
  SimConfig cfg;
  Simulation sim(cfg);
  sim.load(gen_latency_sweep(Load::Zero, sim.topology(), {}));
  sim.run();
  std::set<std::pair<EndpointId, EndpointId>> seen;
  std::size_t bad = 0;
  for (const auto& p : sim.report().packets) {
    if (!p.probe || p.kind != TxnKind::WriteReq) continue;
    Coord a = sim.topology().site(p.src).target.coord, b = sim.topology().site(p.dst).target.coord;
    Cycle want = 2 * cfg.ni.latency + dist(a, b) * (cfg.mesh.router_latency + cfg.mesh.link_latency);
    bad += p.latency() != want;
    seen.insert({p.src, p.dst});
  }
  double secs = seconds_since(t0);
  bool ok = seen.size() == 32 * 31 && bad == 0 && secs < 5.0;
  return {ok, std::to_string(seen.size()) + " pairs, " + std::to_string(bad) + " mismatches, " + num(secs) + " s"};
}

Outcome c5_multicast() {
  SimConfig cfg;
  cfg.mesh.cols = 4;
  cfg.mesh.rows = 2;
  cfg.hbm.channels = 2;
  Rect rect{{0, 0}, {3, 1}};
  Coord origin{0, 0};
  std::set<std::pair<Coord, Coord>> tree;
  std::uint64_t sum = 0;
  for (std::uint32_t y = 0; y < 2; ++y)
    for (std::uint32_t x = 0; x < 4; ++x) {
      sum += dist(origin, {x, y});
      auto p = xy_walk(origin, {x, y});
      for (std::size_t i = 0; i + 1 < p.size(); ++i) tree.insert({p[i], p[i + 1]});
    }
  Topology topo = make_topology(cfg);
  auto s = gen_collective(CollectivePattern::Broadcast, topo, rect, origin, cfg.noc.wide_bytes);
  MetricsReport r[2];
  std::vector<std::uint8_t> data[2];
  for (int b = 0; b < 2; ++b) {
    Simulation sim(cfg);
    sim.load(b ? s.baseline : s.collective);
    sim.run();
    r[b] = sim.report();
    for (EndpointId c : topo.clusters) {
      auto d = sim.cluster(c).spm().read(kCollectiveAddr, cfg.noc.wide_bytes);
      data[b].insert(data[b].end(), d.begin(), d.end());
    }
  }
  auto wide = [](const MetricsReport& m) {
    std::uint64_t n = 0;
    for (const auto& l : m.links)
      if (l.hop && l.channel == ChannelKind::Wide) n += l.flits;
    return n;
  };
  bool edges = true;
  for (const auto& [a, b] : tree) {
    const LinkReport* l = r[0].link(link_name(a, b), ChannelKind::Wide);
    edges = edges && l && l->flits == 1;
  }
  double ratio = r[0].energy_pj / r[1].energy_pj;
  bool ok = tree.size() == 7 && sum == 16 && wide(r[0]) == tree.size() && wide(r[1]) == sum && edges &&
            std::abs(ratio - 7.0 / 16.0) < 1e-12 && data[0] == data[1];
  return {ok, std::to_string(wide(r[0])) + " vs " + std::to_string(wide(r[1])) + " traversals, energy ratio " +
                  num(ratio)};
}

struct BarrierCheck {
  bool released = false;
  bool req_tree = false;
  bool rsp_tree = false;
};

BarrierCheck barrier_once(const SimConfig& cfg, const Topology& topo, Rect rect, std::uint32_t id) {
  auto s = gen_collective(CollectivePattern::Barrier, topo, rect, rect.lo, 0, id);
  Simulation sim(cfg);
  sim.load(s.collective);
  sim.run();
  BarrierCheck out;
  std::size_t released = 0, outside = 0;
  for (EndpointId c : topo.clusters) {
    Coord at = topo.site(c).target.coord;
    bool member = at.x >= rect.lo.x && at.x <= rect.hi.x && at.y >= rect.lo.y && at.y <= rect.hi.y;
    for (const auto& b : sim.cluster(c).barrier_results()) (member ? released : outside) += b.id == id;
  }
  out.released = released == rect.area() && outside == 0;

  std::set<std::pair<Coord, Coord>> tree;
  for (std::uint32_t y = rect.lo.y; y <= rect.hi.y; ++y)
    for (std::uint32_t x = rect.lo.x; x <= rect.hi.x; ++x) {
      auto p = xy_walk({x, y}, rect.lo);
      for (std::size_t i = 0; i + 1 < p.size(); ++i) tree.insert({p[i], p[i + 1]});
    }
  MetricsReport rep = sim.report();
  std::map<std::string, std::uint64_t> req, rsp;
  for (const auto& l : rep.links) {
    if (!l.hop || !l.flits) continue;
    if (l.channel == ChannelKind::Req) req[l.name] += l.flits;
    if (l.channel == ChannelKind::Rsp) rsp[l.name] += l.flits;
  }
  std::map<std::string, std::uint64_t> want_req, want_rsp;
  for (const auto& [a, b] : tree) {
    want_req[link_name(a, b)] = 1;
    want_rsp[link_name(b, a)] = 1;
  }
  out.req_tree = req == want_req;
  out.rsp_tree = rsp == want_rsp;
  return out;
}

Outcome c6_barrier() {
  SimConfig cfg;
  Topology topo = make_topology(cfg);
  std::mt19937_64 gen(20260101);
  std::vector<Rect> rects;
  // Every shape once, at a random offset, then random rectangles.
  for (std::uint32_t h = 1; h <= topo.rows; ++h)
    for (std::uint32_t w = 1; w <= topo.cols; ++w) {
      std::uint32_t x = static_cast<std::uint32_t>(gen() % (topo.cols - w + 1));
      std::uint32_t y = static_cast<std::uint32_t>(gen() % (topo.rows - h + 1));
      rects.push_back({{x, y}, {x + w - 1, y + h - 1}});
    }
  for (int i = 0; i < 100; ++i) {
    std::uint32_t x0 = gen() % topo.cols, x1 = gen() % topo.cols;
    std::uint32_t y0 = gen() % topo.rows, y1 = gen() % topo.rows;
    rects.push_back({{std::min(x0, x1), std::min(y0, y1)}, {std::max(x0, x1), std::max(y0, y1)}});
  }
  std::size_t ok = 0;
  std::string first_bad;
  for (std::size_t i = 0; i < rects.size(); ++i) {
    BarrierCheck b = barrier_once(cfg, topo, rects[i], static_cast<std::uint32_t>(i + 1));
    bool good = b.released && b.req_tree && b.rsp_tree;
    ok += good;
    if (!good && first_bad.empty()) first_bad = ", first failure " + to_string(rects[i]);
  }
  return {ok == rects.size(), std::to_string(ok) + "/" + std::to_string(rects.size()) + " rectangles" + first_bad};
}

std::uint64_t fold(ReduceKind k, const std::vector<std::uint64_t>& v) {
  std::uint64_t acc;
  switch (k) {
    case ReduceKind::Sum: acc = 0; for (auto x : v) acc += x; return acc;
    case ReduceKind::Min: acc = ~0ull; for (auto x : v) acc = x < acc ? x : acc; return acc;
    case ReduceKind::Max: acc = 0; for (auto x : v) acc = x > acc ? x : acc; return acc;
    case ReduceKind::And: acc = ~0ull; for (auto x : v) acc &= x; return acc;
    case ReduceKind::Or: acc = 0; for (auto x : v) acc |= x; return acc;
    case ReduceKind::Xor: acc = 0; for (auto x : v) acc ^= x; return acc;
  }
  return 0;
}

Outcome c7_instream() {
  std::mt19937_64 gen(7);
  std::size_t bad = 0, checks = 0;
  const ReduceKind kinds[] = {ReduceKind::Sum, ReduceKind::Min, ReduceKind::Max,
                              ReduceKind::And, ReduceKind::Or, ReduceKind::Xor};
  for (int t = 0; t < 1000; ++t) {
    std::vector<std::uint64_t> v(1 + gen() % 4096);
    // Mix full-range values with small ones so Min/And are not trivially 0.
    for (auto& x : v) x = t % 2 ? gen() : gen() | 0xffff'0000'0000'0000ull;
    std::uint64_t c = gen();

    auto map = [&](InStreamOp op, auto f) {
      auto r = instream_apply(op, v);
      std::vector<std::uint8_t> bytes(v.size() * 8);
      std::memcpy(bytes.data(), v.data(), bytes.size());
      InStreamUnit unit(op);
      // Feed in uneven whole-element chunks, as a DMA engine would.
      for (std::size_t off = 0; off < bytes.size();) {
        std::size_t n = std::min<std::size_t>(bytes.size() - off, 8 * (1 + gen() % 64));
        unit.feed(std::span(bytes).subspan(off, n));
        off += n;
      }
      for (std::size_t i = 0; i < v.size(); ++i) {
        std::uint64_t got;
        std::memcpy(&got, bytes.data() + 8 * i, 8);
        bad += r.elements.at(i) != f(v[i]) || got != f(v[i]);
      }
      ++checks;
    };
    map(InStreamOp::add(c), [&](std::uint64_t x) { return x + c; });
    map(InStreamOp::mul(c), [&](std::uint64_t x) { return x * c; });
    for (ReduceKind k : kinds) {
      auto r = instream_apply(InStreamOp::reduction(k), v);
      std::vector<std::uint8_t> bytes(v.size() * 8);
      std::memcpy(bytes.data(), v.data(), bytes.size());
      InStreamUnit unit(InStreamOp::reduction(k));
      unit.feed(bytes);
      std::uint64_t want = fold(k, v);
      bad += !r.scalar || *r.scalar != want || unit.scalar() != want;
      ++checks;
    }
  }
  return {bad == 0, std::to_string(checks) + " stream/op pairs, " + std::to_string(bad) + " mismatches"};
}

Outcome c8_packing() {
  auto t0 = Clock::now();
  double ratio[3];
  int i = 0;
  for (IndexPattern pat : {IndexPattern::Uniform, IndexPattern::Contiguous, IndexPattern::Strided}) {
    double bw[2];
    for (int packed = 0; packed < 2; ++packed) {
      SimConfig cfg;
      cfg.hbm.coalescer = packed == 1;
      Simulation sim(cfg);
      GatherParams p;
      p.n = 65536;
      p.pattern = pat;
      p.packed = packed == 1;
      p.cluster = sim.topology().clusters.front();
      sim.load(gen_scatter_gather(sim.topology(), p));
      sim.run();
      const auto& r = sim.cluster(*p.cluster).dma().results().at(0);
      bw[packed] = static_cast<double>(p.n * 8) / static_cast<double>(r.finished - r.started);
    }
    ratio[i++] = bw[1] / bw[0];
  }
  double secs = seconds_since(t0);
  bool ok = ratio[0] >= 4.0 && ratio[0] <= 8.0 && ratio[1] >= 7.6 && secs < 30.0;
  return {ok, "uniform " + num(ratio[0]) + "x, contiguous " + num(ratio[1]) + "x, strided " + num(ratio[2]) +
                  "x, " + num(secs) + " s"};
}

Outcome c9_energy() {
  auto run = [](double e) {
    SimConfig cfg;
    cfg.energy.pj_per_byte_hop = e;
    Simulation sim(cfg);
    DmaJob j;
    j.dst = sim.topology().cluster_at({1, 0});
    j.length = 4096;
    InjectionSchedule s;
    s.add(0, sim.topology().cluster_at({0, 0}), j);
    sim.load(s);
    sim.run();
    return sim.report().energy_pj;
  };
  double a = run(0.15), b = run(0.1455);
  bool ok = std::abs(a - 614.4) <= 1e-9 && std::abs(b - 595.968) <= 1e-9 && std::abs(b - 596.0) <= 1.0;
  return {ok, num(a) + " pJ at 0.15, " + num(b) + " pJ at 0.1455"};
}

/// Random saturating mix: bulk DMA writes and reads, raw transactions,
/// strided jobs, background writes.
InjectionSchedule random_saturation(const Topology& topo, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  InjectionSchedule s;
  auto pick = [&](const std::vector<EndpointId>& v) { return v[gen() % v.size()]; };
  for (EndpointId c : topo.clusters) {
    for (int k = 0; k < 6; ++k) {
      DmaJob j;
      EndpointId peer = pick(gen() % 3 ? topo.clusters : topo.hbm);
      if (peer == c) peer = topo.hbm.front();
      bool read = gen() % 2;
      (read ? j.src : j.dst) = peer;
      j.rows = 1 + gen() % 4;
      j.length = 8 * (1 + gen() % 512);
      (read ? j.src_stride : j.dst_stride) = j.length + 8 * (gen() % 16);
      (read ? j.dst_stride : j.src_stride) = j.length;
      s.add(gen() % 200, c, j);
    }
    for (int k = 0; k < 8; ++k) {
      Transaction t;
      t.kind = gen() % 2 ? TxnKind::ReadReq : TxnKind::WriteReq;
      t.dst = pick(topo.clusters);
      if (t.dst == c) continue;
      t.address = 8 * (gen() % 1024);
      t.length = 8 * (1 + gen() % 32);
      if (t.kind == TxnKind::WriteReq) t.payload.assign(t.length, static_cast<std::uint8_t>(gen()));
      s.add(gen() % 400, c, t, static_cast<std::uint32_t>(k));
    }
    s.add(0, c, BackgroundSpec{300, 0.3, 8});
  }
  s.sort();
  return s;
}

std::vector<Cycle> probe_round_trips(const SimConfig& cfg, bool loaded) {
  Simulation sim(cfg);
  const Topology& topo = sim.topology();
  InjectionSchedule s;
  // Wide writes along rows 0..4 from x=0 to x=3; probes travel column 1
  // north to south, through the same routers.
  if (loaded)
    for (std::uint32_t y = 0; y < 5; ++y) {
      DmaJob j;
      j.dst = topo.cluster_at({3, y});
      j.length = 64 * 1024;
      s.add(0, topo.cluster_at({0, y}), j);
    }
  for (int k = 0; k < 20; ++k) {
    Transaction t;
    t.kind = TxnKind::WriteReq;
    t.dst = topo.cluster_at({1, 0});
    t.address = 0x100;
    t.length = 8;
    t.payload.assign(8, static_cast<std::uint8_t>(k));
    s.add(200 + 64 * k, topo.cluster_at({1, 5}), t, static_cast<std::uint32_t>(k));
  }
  s.sort();
  sim.load(s);
  sim.run();
  std::vector<Cycle> out;
  for (const auto& r : sim.cluster(topo.cluster_at({1, 5})).raw_results()) out.push_back(r.completed - r.submitted);
  return out;
}

Outcome c10_wormhole_isolation() {
  std::uint64_t interleaved = 0, wide_flits = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SimConfig cfg;
    cfg.seed = seed;
    Simulation sim(cfg);
    sim.load(random_saturation(sim.topology(), seed));
    sim.run();
    for (const auto& l : sim.metrics().links()) {
      interleaved += l.interleaved;
      if (l.channel == ChannelKind::Wide) wide_flits += l.flits;
    }
  }
  SimConfig cfg;
  auto idle = probe_round_trips(cfg, false), busy = probe_round_trips(cfg, true);
  bool ok = interleaved == 0 && wide_flits > 0 && idle.size() == 20 && idle == busy;
  return {ok, std::to_string(interleaved) + " interleaved flits over " + std::to_string(wide_flits) +
                  " wide flits; probe round trip " + (idle.empty() ? "-" : std::to_string(idle.front())) +
                  (idle == busy ? " with and without load" : " changed under load")};
}

Outcome c11_determinism() {
  SimConfig cfg;
  std::size_t same = 0;
  std::string diff;
  for (const auto& p : scenario_presets()) {
    ScenarioResult a = p.run(cfg), b = p.run(cfg);
    bool eq = a.csv() == b.csv() && a.json() == b.json();
    same += eq;
    if (!eq) diff += " " + p.name;
  }
  return {same == scenario_presets().size(),
          std::to_string(same) + "/" + std::to_string(scenario_presets().size()) + " presets byte-identical" +
              (diff.empty() ? "" : ", differ:" + diff)};
}

Outcome c12_d2d() {
  SimConfig cfg;
  cfg.mesh.chiplets = 2;
  Simulation sim(cfg);
  const Topology& topo = sim.topology();
  const std::uint32_t rows = cfg.mesh.rows;
  LatencySweepParams lp;
  lp.gap = 128;
  sim.load(gen_latency_sweep(Load::Zero, topo, lp));
  sim.run();
  std::size_t bad = 0, cross = 0, n = 0;
  for (const auto& p : sim.report().packets) {
    if (!p.probe || p.kind != TxnKind::WriteReq) continue;
    Coord a = topo.site(p.src).target.coord, b = topo.site(p.dst).target.coord;
    std::uint32_t crossings = a.y / rows > b.y / rows ? a.y / rows - b.y / rows : b.y / rows - a.y / rows;
    Cycle want = 2 * cfg.ni.latency + dist(a, b) * (cfg.mesh.router_latency + cfg.mesh.link_latency) +
                 crossings * cfg.d2d.crossing_latency;
    bad += p.latency() != want;
    cross += crossings > 0;
    ++n;
  }

  Simulation s2(cfg);
  DmaJob j;
  j.dst = s2.topology().cluster_at({0, rows});
  j.length = 64 * 1024;
  InjectionSchedule s;
  s.add(0, s2.topology().cluster_at({0, rows - 1}), j);
  s2.load(s);
  s2.run();
  const LinkCounters* d2d = nullptr;
  for (const auto& l : s2.metrics().links())
    if (l.name == link_name({0, rows - 1}, {0, rows}) && l.channel == ChannelKind::Wide) d2d = &l;
  bool tput = false;
  std::string bw = "-";
  if (d2d && d2d->flits) {
    Cycle window = d2d->last_send - d2d->first_send + cfg.d2d.wide_serialization;
    tput = d2d->bytes * cfg.d2d.wide_serialization == window * cfg.noc.wide_bytes;
    bw = num(static_cast<double>(d2d->bytes) / static_cast<double>(window));
  }
  bool ok = n == 64 * 63 && cross > 0 && bad == 0 && tput;
  return {ok, std::to_string(n) + " pairs (" + std::to_string(cross) + " crossing), " + std::to_string(bad) +
                  " mismatches; die-to-die wide " + bw + " B/cycle"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"full-load HBM cap", c1_full_load_cap},
      {"zero-load mesh utilization", c2_zero_load},
      {"crossbar-vs-mesh ordering", c3_xbar_vs_mesh},
      {"latency linearity", c4_latency_linearity},
      {"multicast traffic", c5_multicast},
      {"barrier correctness", c6_barrier},
      {"in-stream oracle equivalence", c7_instream},
      {"packing efficiency", c8_packing},
      {"energy accounting", c9_energy},
      {"wormhole and isolation", c10_wormhole_isolation},
      {"determinism", c11_determinism},
      {"die-to-die virtual mesh", c12_d2d},
  };
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i + 1) != only) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
