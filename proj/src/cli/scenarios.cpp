// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#include "chipnoc/cli/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "chipnoc/noc/collective.hpp"
#include "chipnoc/sim/errors.hpp"
#include "chipnoc/traffic/generators.hpp"
#include "json.hpp"

namespace chipnoc {

bool ScenarioResult::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.pass; });
}

std::optional<double> ScenarioResult::value(std::string_view key) const {
  for (const auto& [k, v] : values)
    if (k == key) return v;
  return std::nullopt;
}

std::string ScenarioResult::summary() const {
  std::ostringstream os;
  os << "scenario " << name << "\n";
  for (const auto& [k, v] : values) os << "  " << k << " = " << format_double(v) << "\n";
  for (const auto& p : properties)
    os << "  [" << (p.pass ? "PASS" : "FAIL") << "] " << p.name
       << (p.detail.empty() ? "" : " (" + p.detail + ")") << "\n";
  os << (passed() ? "all properties hold\n" : "some properties failed\n");
  return os.str();
}

std::string ScenarioResult::csv() const {
  std::ostringstream os;
  write_csv_header(os);
  for (const auto& [k, v] : values) os << "scenario," << name << ',' << k << ',' << format_double(v) << '\n';
  for (const auto& p : properties) os << "property," << name << ',' << p.name << ',' << (p.pass ? 1 : 0) << '\n';
  for (const auto& r : runs) write_csv_rows(os, r.report, r.name);
  return os.str();
}

std::string ScenarioResult::json() const {
  nlohmann::ordered_json j;
  j["scenario"] = name;
  j["passed"] = passed();
  nlohmann::ordered_json vals = nlohmann::ordered_json::object();
  for (const auto& [k, v] : values) vals[k] = v;
  j["values"] = vals;
  nlohmann::ordered_json props = nlohmann::ordered_json::array();
  for (const auto& p : properties) props.push_back({{"name", p.name}, {"pass", p.pass}, {"detail", p.detail}});
  j["properties"] = props;
  nlohmann::ordered_json rs = nlohmann::ordered_json::object();
  for (const auto& r : runs) rs[r.name] = to_json(r.report);
  j["runs"] = rs;
  return j.dump(2) + "\n";
}

std::optional<double> dma_utilization(const ClusterEndpoint& c, std::uint32_t peak) {
  const auto& res = c.dma().results();
  if (res.empty()) return std::nullopt;
  Cycle start = kNever, end = 0;
  std::uint64_t bytes = 0;
  for (const auto& r : res) {
    start = std::min(start, r.started);
    end = std::max(end, r.finished);
    bytes += r.bytes;
  }
  if (end <= start) return std::nullopt;
  return static_cast<double>(bytes) / (static_cast<double>(end - start) * peak);
}

Cycle zero_load_latency(const SimConfig& cfg, const Topology& topo, EndpointId src, EndpointId dst) {
  if (topo.kind != TopologyKind::Mesh) throw ConfigError("zero-load formula applies to meshes");
  Coord a = topo.site(src).target.coord, b = topo.site(dst).target.coord;
  Cycle hops = manhattan(a, b);
  Cycle crossings = a.y / topo.rows_per_chiplet > b.y / topo.rows_per_chiplet
                        ? a.y / topo.rows_per_chiplet - b.y / topo.rows_per_chiplet
                        : b.y / topo.rows_per_chiplet - a.y / topo.rows_per_chiplet;
  return 2 * cfg.ni.latency + hops * (cfg.mesh.router_latency + cfg.mesh.link_latency) +
         crossings * cfg.d2d.crossing_latency;
}

namespace {

std::string fmt(double v) { return format_double(std::round(v * 1e6) / 1e6); }

struct Collector {
  ScenarioResult r;
  void value(std::string k, double v) { r.values.emplace_back(std::move(k), v); }
  void check(std::string name, bool ok, std::string detail = {}) {
    r.properties.push_back({std::move(name), ok, std::move(detail)});
  }
  void keep(std::string run, Simulation& sim) { r.runs.push_back({std::move(run), sim.report()}); }
};

struct Utilization {
  double avg = 0, min = 1, max = 0;
  std::size_t n = 0;
};

Utilization cluster_utilization(Simulation& sim) {
  Utilization u;
  double sum = 0;
  for (EndpointId c : sim.topology().clusters) {
    auto v = dma_utilization(sim.cluster(c), sim.config().hbm.peak_bytes);
    if (!v) continue;
    sum += *v;
    u.min = std::min(u.min, *v);
    u.max = std::max(u.max, *v);
    ++u.n;
  }
  u.avg = u.n ? sum / u.n : 0.0;
  if (!u.n) u.min = 0;
  return u;
}

/// Average over loaded channels of useful bytes / (active cycles x peak).
double channel_utilization(Simulation& sim) {
  double sum = 0;
  std::size_t n = 0;
  for (EndpointId h : sim.topology().hbm) {
    const EndpointCounters& c = sim.hbm(h).counters();
    if (c.useful_bytes == 0) continue;
    sum += static_cast<double>(c.useful_bytes) /
           (static_cast<double>(c.window() + 1) * sim.config().hbm.peak_bytes);
    ++n;
  }
  return n ? sum / n : 0.0;
}

Utilization full_load(const SimConfig& cfg, Collector* out, const std::string& run, double* channels) {
  Simulation sim(cfg);
  sim.load(gen_hbm_load(Load::Full, sim.topology(), cfg.traffic.transfer_bytes, cfg.traffic.tiles));
  sim.run();
  if (channels) *channels = channel_utilization(sim);
  if (out) out->keep(run, sim);
  return cluster_utilization(sim);
}

double zero_load(const SimConfig& cfg, EndpointId cluster, Collector* out, const std::string& run) {
  Simulation sim(cfg);
  sim.load(gen_hbm_load(Load::Zero, sim.topology(), cfg.traffic.transfer_bytes, cfg.traffic.tiles,
                        cluster));
  sim.run();
  if (out) out->keep(run, sim);
  return dma_utilization(sim.cluster(cluster), cfg.hbm.peak_bytes).value_or(0.0);
}

ScenarioResult hbm_zero(const SimConfig& base) {
  Collector c;
  c.r.name = "hbm-zero";
  SimConfig cfg = base;
  Topology topo = make_topology(cfg);
  double sum = 0, lo = 1;
  for (EndpointId id : topo.clusters) {
    double u = zero_load(cfg, id, &c, topo.site(id).name);
    sum += u;
    lo = std::min(lo, u);
  }
  double avg = sum / static_cast<double>(topo.clusters.size());
  c.value("avg_utilization", avg);
  c.value("min_utilization", lo);
  c.check("every cluster sustains >= 95% of its channel alone", lo >= 0.95, "min " + fmt(lo));
  return c.r;
}

ScenarioResult hbm_full(const SimConfig& base) {
  Collector c;
  c.r.name = "hbm-full";
  double channels = 0;
  Utilization u = full_load(base, &c, "full", &channels);
  c.value("clusters", static_cast<double>(u.n));
  c.value("avg_utilization", u.avg);
  c.value("min_utilization", u.min);
  c.value("max_utilization", u.max);
  c.value("channel_utilization", channels);
  Topology topo = make_topology(base);
  // Each cluster gets its share of the channels, and on the crossbar also
  // its share of the group's single wide port.
  double channel_cap = static_cast<double>(topo.hbm.size()) / static_cast<double>(topo.clusters.size());
  double cap = std::min(channel_cap, 1.0);
  if (topo.kind == TopologyKind::Crossbar)
    cap = std::min(cap, static_cast<double>(base.noc.wide_bytes) /
                            (static_cast<double>(base.xbar.clusters_per_group) * base.hbm.peak_bytes));
  c.value("per_cluster_cap", cap);
  c.check("per-cluster utilization within 1 pp of the structural cap",
          u.n > 0 && std::abs(u.min - cap) <= 0.01 && std::abs(u.max - cap) <= 0.01,
          "min " + fmt(u.min) + ", max " + fmt(u.max) + ", cap " + fmt(cap));
  if (cap >= channel_cap)
    c.check("aggregate channel utilization >= 95%", channels >= 0.95, fmt(channels));
  return c.r;
}

/// Probe spacing wide enough that no two zero-load probes are in flight at
/// once; otherwise two of them can meet on a link.
Cycle probe_gap(const SimConfig& cfg) {
  Cycle gap = cfg.traffic.probe_gap;
  if (cfg.topology != TopologyKind::Mesh) return gap;
  Topology topo = make_topology(cfg);
  Cycle worst = zero_load_latency(cfg, topo, topo.clusters.front(), topo.clusters.back());
  for (EndpointId a : topo.clusters)
    for (EndpointId b : {topo.clusters.front(), topo.clusters.back()})
      worst = std::max(worst, zero_load_latency(cfg, topo, a, b));
  return std::max(gap, 2 * worst);
}

struct SweepStats {
  LatencyStats lat;
  std::size_t mismatches = 0;
};

SweepStats sweep(const SimConfig& cfg, Load load, Collector* out, const std::string& run,
                 bool check_formula) {
  Simulation sim(cfg);
  LatencySweepParams p{load == Load::Zero ? probe_gap(cfg) : cfg.traffic.probe_gap, cfg.traffic.background_rate,
                       cfg.traffic.background_bytes};
  sim.load(gen_latency_sweep(load, sim.topology(), p));
  sim.run();
  MetricsReport rep = sim.report();
  SweepStats s{rep.probe_latency, 0};
  if (check_formula)
    for (const auto& pk : rep.packets)
      if (pk.probe && is_request(pk.kind) &&
          pk.latency() != zero_load_latency(cfg, sim.topology(), pk.src, pk.dst))
        ++s.mismatches;
  if (out) out->r.runs.push_back({run, std::move(rep)});
  return s;
}

ScenarioResult latency_sweep(const SimConfig& base) {
  Collector c;
  c.r.name = "latency-sweep";
  bool mesh = base.topology == TopologyKind::Mesh;
  SweepStats zero = sweep(base, Load::Zero, &c, "zero", mesh);
  SweepStats full = sweep(base, Load::Full, &c, "full", false);
  for (auto [tag, s] : {std::pair{"zero", &zero}, std::pair{"full", &full}}) {
    c.value(std::string(tag) + "_min", static_cast<double>(s->lat.min));
    c.value(std::string(tag) + "_avg", s->lat.avg);
    c.value(std::string(tag) + "_max", static_cast<double>(s->lat.max));
    c.value(std::string(tag) + "_probes", static_cast<double>(s->lat.count));
  }
  Topology topo = make_topology(base);
  std::size_t pairs = topo.clusters.size() * (topo.clusters.size() - 1);
  c.check("one probe per ordered pair", zero.lat.count == pairs && full.lat.count == pairs);
  if (mesh)
    c.check("zero-load latency = 2 NI + hops (router + link)", zero.mismatches == 0,
            std::to_string(zero.mismatches) + " mismatches");
  c.check("min-hop latency < max-hop latency", zero.lat.min < zero.lat.max);
  c.check("full-load average >= zero-load average", full.lat.avg >= zero.lat.avg);
  return c.r;
}

ScenarioResult xbar_vs_mesh(const SimConfig& base) {
  Collector c;
  c.r.name = "xbar-vs-mesh";
  SimConfig mesh = base;
  mesh.topology = TopologyKind::Mesh;
  SimConfig xbar = base;
  xbar.topology = TopologyKind::Crossbar;

  Topology mt = make_topology(mesh), xt = make_topology(xbar);
  double mz = zero_load(mesh, mt.clusters.front(), &c, "mesh-zero");
  double xz = zero_load(xbar, xt.clusters.front(), &c, "xbar-zero");
  double mch = 0, xch = 0;
  Utilization mf = full_load(mesh, &c, "mesh-full", &mch);
  Utilization xf = full_load(xbar, &c, "xbar-full", &xch);
  SweepStats ml = sweep(mesh, Load::Zero, nullptr, "", false);
  SweepStats xl = sweep(xbar, Load::Zero, nullptr, "", false);

  c.value("mesh_zero_utilization", mz);
  c.value("xbar_zero_utilization", xz);
  c.value("mesh_full_utilization", mf.avg);
  c.value("xbar_full_utilization", xf.avg);
  c.value("mesh_full_channel_utilization", mch);
  c.value("xbar_full_channel_utilization", xch);
  c.value("mesh_zero_latency_avg", ml.lat.avg);
  c.value("xbar_zero_latency_avg", xl.lat.avg);
  c.value("mesh_zero_latency_min", static_cast<double>(ml.lat.min));
  c.value("xbar_zero_latency_min", static_cast<double>(xl.lat.min));
  c.value("mesh_zero_latency_max", static_cast<double>(ml.lat.max));
  c.value("xbar_zero_latency_max", static_cast<double>(xl.lat.max));
  double gap = xf.avg > 0 ? mf.avg / xf.avg - 1.0 : 0.0;
  c.value("full_load_relative_gap", gap);
  c.check("mesh zero-load utilization >= crossbar", mz >= xz, fmt(mz) + " vs " + fmt(xz));
  c.check("mesh full-load utilization exceeds crossbar by >= 10% relative", gap >= 0.10,
          fmt(mf.avg) + " vs " + fmt(xf.avg));
  return c.r;
}

std::uint64_t payload_digest(Simulation& sim, const Rect& rect, std::uint32_t bytes) {
  std::uint64_t h = 0;
  for (std::uint32_t y = rect.lo.y; y <= rect.hi.y; ++y)
    for (std::uint32_t x = rect.lo.x; x <= rect.hi.x; ++x) {
      auto data = sim.cluster(sim.topology().cluster_at({x, y})).spm().read(kCollectiveAddr, bytes);
      for (auto b : data) h = CounterRng::mix(h ^ b);
    }
  return h;
}

ScenarioResult broadcast(const SimConfig& base) {
  Collector c;
  c.r.name = "broadcast";
  SimConfig cfg = base;
  cfg.topology = TopologyKind::Mesh;
  cfg.mesh.cols = 4;
  cfg.mesh.rows = 2;
  cfg.mesh.chiplets = 1;
  cfg.hbm.channels = std::min(cfg.hbm.channels, 2u);
  const Rect rect{{0, 0}, {3, 1}};
  const Coord origin{0, 0};
  const std::uint32_t bytes = cfg.noc.wide_bytes;

  Topology topo = make_topology(cfg);
  CollectiveSchedules s = gen_collective(CollectivePattern::Broadcast, topo, rect, origin, bytes);
  std::uint64_t flits[2], digest[2];
  double energy[2];
  for (int b = 0; b < 2; ++b) {
    Simulation sim(cfg);
    sim.load(b ? s.baseline : s.collective);
    sim.run();
    MetricsReport rep = sim.report();
    flits[b] = rep.hop_flits_on(ChannelKind::Wide);
    energy[b] = rep.energy_pj;
    digest[b] = payload_digest(sim, rect, bytes);
    c.r.runs.push_back({b ? "unicast" : "multicast", std::move(rep)});
  }
  std::uint64_t tree = fork_tree_edges(origin, rect);
  std::uint64_t dist = 0;
  for (std::uint32_t y = rect.lo.y; y <= rect.hi.y; ++y)
    for (std::uint32_t x = rect.lo.x; x <= rect.hi.x; ++x) dist += manhattan(origin, {x, y});
  c.value("multicast_link_traversals", static_cast<double>(flits[0]));
  c.value("unicast_link_traversals", static_cast<double>(flits[1]));
  c.value("energy_ratio", energy[1] > 0 ? energy[0] / energy[1] : 0.0);
  c.check("multicast traversals = fork tree edges", flits[0] == tree,
          std::to_string(flits[0]) + " vs " + std::to_string(tree));
  c.check("unicast traversals = sum of distances", flits[1] == dist,
          std::to_string(flits[1]) + " vs " + std::to_string(dist));
  c.check("energy ratio = tree edges / sum of distances",
          energy[0] * static_cast<double>(dist) == energy[1] * static_cast<double>(tree),
          std::to_string(tree) + "/" + std::to_string(dist));
  c.check("both variants deliver identical payloads", digest[0] == digest[1]);
  return c.r;
}

/// Directed links the dimension-ordered paths from every participant to the
/// aggregation node use.
std::set<std::pair<Coord, Coord>> join_tree(const Rect& rect, DimensionOrder order) {
  std::set<std::pair<Coord, Coord>> edges;
  Coord sink = barrier_aggregation_node(rect);
  for (std::uint32_t y = rect.lo.y; y <= rect.hi.y; ++y)
    for (std::uint32_t x = rect.lo.x; x <= rect.hi.x; ++x) {
      auto path = route_path({x, y}, sink, order);
      for (std::size_t i = 0; i + 1 < path.size(); ++i) edges.insert({path[i], path[i + 1]});
    }
  return edges;
}

ScenarioResult barrier(const SimConfig& base) {
  Collector c;
  c.r.name = "barrier";
  SimConfig cfg = base;
  cfg.topology = TopologyKind::Mesh;
  Topology topo = make_topology(cfg);
  CounterRng rng(cfg.seed, 0x4241'5252);
  std::size_t ok_release = 0, ok_edges = 0, trials = 100;
  double in_net = 0, software = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    Coord a{static_cast<std::uint32_t>(rng.uniform(topo.cols)), static_cast<std::uint32_t>(rng.uniform(topo.rows))};
    Coord b{static_cast<std::uint32_t>(rng.uniform(topo.cols)), static_cast<std::uint32_t>(rng.uniform(topo.rows))};
    Rect rect{{std::min(a.x, b.x), std::min(a.y, b.y)}, {std::max(a.x, b.x), std::max(a.y, b.y)}};
    auto s = gen_collective(CollectivePattern::Barrier, topo, rect, rect.lo, 0, static_cast<std::uint32_t>(i + 1));
    Simulation sim(cfg);
    sim.load(s.collective);
    sim.run();
    std::size_t released = 0;
    Cycle last = 0;
    for (EndpointId id : topo.clusters)
      for (const auto& r : sim.cluster(id).barrier_results()) {
        ++released;
        last = std::max(last, r.released);
      }
    ok_release += released == rect.area();
    in_net += static_cast<double>(last);

    MetricsReport rep = sim.report();
    auto tree = join_tree(rect, DimensionOrder::XY);
    bool edges_ok = rep.hop_flits_on(ChannelKind::Req) == tree.size();
    for (const auto& [from, to] : tree) {
      const LinkReport* l = rep.link("r" + to_string(from) + ">r" + to_string(to), ChannelKind::Req);
      edges_ok = edges_ok && l && l->flits == 1;
    }
    ok_edges += edges_ok;
    if (i == 0) c.r.runs.push_back({"first", std::move(rep)});

    Simulation soft(cfg);
    soft.load(s.baseline);
    soft.run();
    Cycle slast = 0;
    for (EndpointId id : topo.clusters)
      for (const auto& r : soft.cluster(id).barrier_results()) slast = std::max(slast, r.released);
    software += static_cast<double>(slast);
  }
  c.value("rectangles", static_cast<double>(trials));
  c.value("avg_release_cycle", in_net / trials);
  c.value("avg_software_release_cycle", software / trials);
  c.check("every participant is released", ok_release == trials,
          std::to_string(ok_release) + "/" + std::to_string(trials));
  c.check("one joined request per tree edge", ok_edges == trials,
          std::to_string(ok_edges) + "/" + std::to_string(trials));
  return c.r;
}

ScenarioResult scatter_gather(const SimConfig& base) {
  Collector c;
  c.r.name = "scatter-gather";
  double ratio_uniform = 0, ratio_contig = 0;
  bool in_bounds = true, data_ok = true;
  for (IndexPattern pat : {IndexPattern::Uniform, IndexPattern::Contiguous, IndexPattern::Strided}) {
    double bw[2] = {0, 0};
    for (int packed = 0; packed < 2; ++packed) {
      SimConfig cfg = base;
      cfg.topology = TopologyKind::Mesh;
      // The baseline sends every element on its own, and memory serves it alone.
      cfg.hbm.coalescer = packed == 1;
      GatherParams p;
      p.n = cfg.traffic.gather_elements;
      p.pattern = pat;
      p.packed = packed == 1;
      p.seed = cfg.seed;
      Simulation sim(cfg);
      p.cluster = sim.topology().clusters.front();
      sim.load(gen_scatter_gather(sim.topology(), p));
      sim.run();
      ClusterEndpoint& cl = sim.cluster(*p.cluster);
      const DmaJobResult& r = cl.dma().results().at(0);
      bw[packed] = static_cast<double>(r.bytes) / static_cast<double>(r.finished - r.started);
      auto idx = gather_indices(p);
      const BackingStore& mem = sim.hbm(sim.topology().home_channel(*p.cluster)).store();
      for (std::size_t i = 0; i < idx.size(); i += 97)
        data_ok = data_ok && cl.spm().read_u64(i * 8) == mem.read_u64(idx[i] * 8);
      std::string run = std::string(to_string(pat)) + (packed ? "-packed" : "-unpacked");
      c.value(run + "_bytes_per_cycle", bw[packed]);
      c.keep(run, sim);
    }
    double ratio = bw[1] / bw[0];
    c.value(std::string(to_string(pat)) + "_ratio", ratio);
    in_bounds = in_bounds && ratio >= 1.0 && ratio <= 8.0;
    if (pat == IndexPattern::Uniform) ratio_uniform = ratio;
    if (pat == IndexPattern::Contiguous) ratio_contig = ratio;
  }
  c.check("uniform packed/unpacked in [4, 8]", ratio_uniform >= 4.0 && ratio_uniform <= 8.0, fmt(ratio_uniform));
  c.check("contiguous packed/unpacked >= 7.6", ratio_contig >= 7.6, fmt(ratio_contig));
  c.check("every pattern's gain in [1, 8]", in_bounds);
  c.check("gathered elements match memory", data_ok);
  return c.r;
}

ScenarioResult instream_reduce(const SimConfig& base) {
  Collector c;
  c.r.name = "instream-reduce";
  SimConfig cfg = base;
  cfg.topology = TopologyKind::Mesh;
  const std::uint64_t bytes = cfg.traffic.transfer_bytes / 8 * 8;
  const std::uint64_t n = bytes / 8;

  std::vector<InStreamOp> ops{InStreamOp{}, InStreamOp::add(5), InStreamOp::mul(3)};
  for (auto k : kAllReduceKinds) ops.push_back(InStreamOp::reduction(k));

  Cycle copy_time = 0;
  bool exact = true, stream_rate = true;
  for (const auto& op : ops) {
    Simulation sim(cfg);
    EndpointId cl = sim.topology().clusters.front();
    EndpointId ch = sim.topology().home_channel(cl);
    DmaJob j;
    j.src = ch;
    j.length = bytes;
    j.dst_addr = op.kind == InStreamKind::Reduce ? bytes : 0;
    j.op = op;
    InjectionSchedule s;
    s.add(0, cl, j);
    sim.load(s);
    sim.run();
    const DmaJobResult& r = sim.cluster(cl).dma().results().at(0);
    Cycle t = r.finished - r.started;
    if (op.kind == InStreamKind::None) copy_time = t;
    std::vector<std::uint64_t> in(n);
    for (std::uint64_t i = 0; i < n; ++i) in[i] = sim.hbm(ch).store().read_u64(i * 8);
    InStreamResult want = instream_apply(op, in);
    const BackingStore& spm = sim.cluster(cl).spm();
    if (op.kind == InStreamKind::Reduce) {
      exact = exact && r.scalar == want.scalar && spm.read_u64(bytes) == want.scalar;
    } else {
      for (std::uint64_t i = 0; i < n; ++i) exact = exact && spm.read_u64(i * 8) == want.elements[i];
    }
    if (op.kind != InStreamKind::None)
      stream_rate = stream_rate && t <= copy_time + cfg.dma.pipeline_fill;
    std::string name = op.kind == InStreamKind::Reduce ? "reduce-" + std::string(to_string(op.reduce))
                                                       : std::string(to_string(op.kind));
    c.value(name + "_cycles", static_cast<double>(t));
    if (op.kind == InStreamKind::Reduce) {
      // A core folding the copied data one element per cycle afterwards.
      double baseline = static_cast<double>(copy_time + n);
      c.value(name + "_speedup_vs_core", baseline / static_cast<double>(t));
    }
    c.keep(name, sim);
  }
  c.check("results match a direct map/fold", exact);
  c.check("in-stream ops run at copy rate plus pipeline fill", stream_rate);
  return c.r;
}

ScenarioResult d2d_cross(const SimConfig& base) {
  Collector c;
  c.r.name = "d2d-cross";
  SimConfig cfg = base;
  cfg.topology = TopologyKind::Mesh;
  cfg.mesh.chiplets = std::max(cfg.mesh.chiplets, 2u);
  SweepStats lat = sweep(cfg, Load::Zero, &c, "latency", true);
  c.value("probes", static_cast<double>(lat.lat.count));
  c.value("latency_avg", lat.lat.avg);
  c.value("latency_max", static_cast<double>(lat.lat.max));
  c.check("cross-chiplet latency = on-die formula + crossing", lat.mismatches == 0 && lat.lat.count > 0,
          std::to_string(lat.mismatches) + " mismatches");

  Simulation sim(cfg);
  const std::uint32_t y = cfg.mesh.rows - 1;
  EndpointId src = sim.topology().cluster_at({0, y});
  EndpointId dst = sim.topology().cluster_at({0, y + 1});
  DmaJob j;
  j.dst = dst;
  j.length = 64 * 1024;
  InjectionSchedule s;
  s.add(0, src, j);
  sim.load(s);
  sim.run();
  MetricsReport rep = sim.report();
  const LinkReport* l = rep.link("r0." + std::to_string(y) + ">r0." + std::to_string(y + 1), ChannelKind::Wide);
  const LinkCounters* lc = nullptr;
  for (const auto& x : sim.metrics().links())
    if (l && x.name == l->name && x.channel == ChannelKind::Wide) lc = &x;
  double bpc = 0;
  bool exact = false;
  if (lc && lc->flits > 0) {
    Cycle window = lc->last_send - lc->first_send + cfg.d2d.wide_serialization;
    bpc = static_cast<double>(lc->bytes) / static_cast<double>(window);
    exact = lc->bytes * cfg.d2d.wide_serialization == static_cast<std::uint64_t>(window) * cfg.noc.wide_bytes;
  }
  c.value("d2d_wide_bytes_per_cycle", bpc);
  c.value("d2d_wide_expected", static_cast<double>(cfg.noc.wide_bytes) / cfg.d2d.wide_serialization);
  c.check("die-to-die wide throughput = link width / serialization", exact, fmt(bpc));
  c.r.runs.push_back({"stream", std::move(rep)});
  return c.r;
}

}  // namespace

const std::vector<ScenarioPreset>& scenario_presets() {
  static const std::vector<ScenarioPreset> p{
      {"hbm-zero", "one cluster at a time streams from its HBM channel", hbm_zero},
      {"hbm-full", "every cluster streams from its HBM channel", hbm_full},
      {"latency-sweep", "probe latency over all cluster pairs, idle and loaded", latency_sweep},
      {"xbar-vs-mesh", "HBM utilization and latency, crossbar hierarchy against mesh", xbar_vs_mesh},
      {"broadcast", "4x2 broadcast: in-network multicast against unicasts", broadcast},
      {"barrier", "in-network barriers over random rectangles", barrier},
      {"scatter-gather", "random/contiguous/strided gathers, packed against unpacked", scatter_gather},
      {"instream-reduce", "in-stream map and reduction against direct computation", instream_reduce},
      {"d2d-cross", "two chiplets: crossing latency and die-to-die throughput", d2d_cross},
  };
  return p;
}

const ScenarioPreset* find_scenario(std::string_view name) {
  for (const auto& s : scenario_presets())
    if (s.name == name) return &s;
  return nullptr;
}

ScenarioResult run_scenario(std::string_view name, const SimConfig& base) {
  const ScenarioPreset* p = find_scenario(name);
  if (!p) throw ConfigError("unknown scenario '" + std::string(name) + "'");
  return p->run(base);
}

std::vector<std::filesystem::path> write_outputs(const ScenarioResult& r,
                                                 const std::filesystem::path& dir, OutputFormat f) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> out;
  auto put = [&](const std::string& ext, const std::string& text) {
    auto path = dir / (r.name + ext);
    std::ofstream os(path, std::ios::binary);
    os << text;
    if (!os) throw std::runtime_error(path.string() + ": write failed");
    out.push_back(path);
  };
  if (f != OutputFormat::Json) put(".csv", r.csv());
  if (f != OutputFormat::Csv) put(".json", r.json());
  put(".txt", r.summary());
  return out;
}

}  // namespace chipnoc
