// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#include "chipnoc/metrics/report.hpp"

#include <charconv>
#include <ostream>

namespace chipnoc {

void LatencyStats::add(Cycle v) {
  if (count == 0 || v < min) min = v;
  if (v > max) max = v;
  ++count;
  sum_ += v;
}

void LatencyStats::finish() { avg = count ? static_cast<double>(sum_) / count : 0.0; }

const LinkReport* MetricsReport::link(std::string_view name, ChannelKind c) const {
  for (const auto& l : links)
    if (l.name == name && l.channel == c) return &l;
  return nullptr;
}

const EndpointReport* MetricsReport::endpoint(std::string_view name) const {
  for (const auto& e : endpoints)
    if (e.name == name) return &e;
  return nullptr;
}

std::uint64_t MetricsReport::hop_flits_on(ChannelKind c) const {
  std::uint64_t n = 0;
  for (const auto& l : links)
    if (l.hop && l.channel == c) n += l.flits;
  return n;
}

MetricsReport compute_report(const Metrics& m, Cycle cycles, const SimConfig& cfg) {
  MetricsReport r;
  r.cycles = cycles;
  r.flits_created = m.flits_created;
  r.flits_destroyed = m.flits_destroyed;
  const double e = cfg.energy.pj_per_byte_hop;
  for (const auto& l : m.links()) {
    LinkReport lr{l.name, l.channel, l.hop, l.flits, l.bytes, l.busy, l.interleaved, 0.0};
    if (l.hop) {
      lr.energy_pj = static_cast<double>(l.bytes) * e;
      r.hop_flits += l.flits;
      r.hop_bytes += l.bytes;
    }
    r.links.push_back(std::move(lr));
  }
  // One multiplication over the total keeps the energy exact for integral byte counts.
  r.energy_pj = static_cast<double>(r.hop_bytes) * e;
  for (const auto& c : m.endpoints()) {
    EndpointReport er;
    er.name = c.name;
    er.kind = c.kind;
    er.rx_bytes = c.rx_bytes;
    er.tx_bytes = c.tx_bytes;
    er.useful_bytes = c.useful_bytes;
    er.access_bytes = c.access_bytes;
    if (c.first_active != kNever) {
      er.first_active = c.first_active;
      er.last_active = c.last_active;
      double cap = static_cast<double>(c.window() + 1) * cfg.noc.wide_bytes;
      er.utilization = static_cast<double>(c.useful_bytes) / cap;
    }
    r.endpoints.push_back(std::move(er));
  }
  r.packets = m.packets();
  for (const auto& p : r.packets) {
    r.latency.add(p.latency());
    if (p.probe && is_request(p.kind)) r.probe_latency.add(p.latency());
  }
  r.latency.finish();
  r.probe_latency.finish();
  return r;
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_csv_header(std::ostream& os) { os << "kind,entity,metric,value\n"; }

namespace {

struct Rows {
  std::ostream& os;
  std::string prefix;

  void row(std::string_view kind, std::string_view entity, std::string_view metric,
           std::uint64_t v) {
    os << kind << ',' << prefix << entity << ',' << metric << ',' << v << '\n';
  }
  void row(std::string_view kind, std::string_view entity, std::string_view metric, double v) {
    os << kind << ',' << prefix << entity << ',' << metric << ',' << format_double(v) << '\n';
  }
  void stats(std::string_view entity, const LatencyStats& s) {
    row("latency", entity, "count", s.count);
    row("latency", entity, "min", static_cast<std::uint64_t>(s.min));
    row("latency", entity, "avg", s.avg);
    row("latency", entity, "max", static_cast<std::uint64_t>(s.max));
  }
};

}  // namespace

void write_csv_rows(std::ostream& os, const MetricsReport& r, std::string_view run) {
  Rows w{os, run.empty() ? std::string() : std::string(run) + "/"};
  w.row("summary", "sim", "cycles", static_cast<std::uint64_t>(r.cycles));
  w.row("summary", "sim", "energy_pj", r.energy_pj);
  w.row("summary", "sim", "hop_flits", r.hop_flits);
  w.row("summary", "sim", "hop_bytes", r.hop_bytes);
  w.row("summary", "sim", "flits_created", r.flits_created);
  w.row("summary", "sim", "flits_destroyed", r.flits_destroyed);
  w.stats("all", r.latency);
  w.stats("probe", r.probe_latency);
  for (const auto& [k, v] : r.scenario) w.row("scenario", k.substr(0, k.find(':')), k.substr(k.find(':') + 1), v);
  for (const auto& l : r.links) {
    if (l.flits == 0) continue;
    std::string ent = l.name + ":" + std::string(to_string(l.channel));
    w.row("link", ent, "flits", l.flits);
    w.row("link", ent, "bytes", l.bytes);
    w.row("link", ent, "busy", l.busy);
    w.row("link", ent, "interleaved", l.interleaved);
    if (l.hop) w.row("link", ent, "energy_pj", l.energy_pj);
  }
  for (const auto& e : r.endpoints) {
    if (e.rx_bytes == 0 && e.tx_bytes == 0 && e.useful_bytes == 0) continue;
    w.row("endpoint", e.name, "rx_bytes", e.rx_bytes);
    w.row("endpoint", e.name, "tx_bytes", e.tx_bytes);
    w.row("endpoint", e.name, "useful_bytes", e.useful_bytes);
    w.row("endpoint", e.name, "access_bytes", e.access_bytes);
    w.row("endpoint", e.name, "first_active", static_cast<std::uint64_t>(e.first_active));
    w.row("endpoint", e.name, "last_active", static_cast<std::uint64_t>(e.last_active));
    w.row("endpoint", e.name, "utilization", e.utilization);
  }
  bool all = r.packets.size() <= kPacketRowLimit;
  for (const auto& p : r.packets) {
    if (!all && !p.probe) continue;
    std::string ent = std::to_string(p.packet);
    w.row("packet", ent, "inject", static_cast<std::uint64_t>(p.inject));
    w.row("packet", ent, "deliver", static_cast<std::uint64_t>(p.deliver));
    w.row("packet", ent, "hops", static_cast<std::uint64_t>(p.hops));
  }
}

nlohmann::ordered_json to_json(const MetricsReport& r) {
  using nlohmann::ordered_json;
  auto stats = [](const LatencyStats& s) {
    return ordered_json{{"count", s.count}, {"min", s.min}, {"avg", s.avg}, {"max", s.max}};
  };
  ordered_json j;
  j["cycles"] = r.cycles;
  j["energy_pj"] = r.energy_pj;
  j["hop_flits"] = r.hop_flits;
  j["hop_bytes"] = r.hop_bytes;
  j["flits_created"] = r.flits_created;
  j["flits_destroyed"] = r.flits_destroyed;
  j["latency"] = stats(r.latency);
  j["probe_latency"] = stats(r.probe_latency);
  ordered_json sc = ordered_json::object();
  for (const auto& [k, v] : r.scenario) sc[k] = v;
  j["scenario"] = sc;
  ordered_json links = ordered_json::array();
  for (const auto& l : r.links) {
    if (l.flits == 0) continue;
    links.push_back({{"name", l.name},
                     {"channel", to_string(l.channel)},
                     {"hop", l.hop},
                     {"flits", l.flits},
                     {"bytes", l.bytes},
                     {"busy", l.busy},
                     {"interleaved", l.interleaved},
                     {"energy_pj", l.energy_pj}});
  }
  j["links"] = links;
  ordered_json eps = ordered_json::array();
  for (const auto& e : r.endpoints) {
    if (e.rx_bytes == 0 && e.tx_bytes == 0 && e.useful_bytes == 0) continue;
    eps.push_back({{"name", e.name},
                   {"kind", e.kind},
                   {"useful_bytes", e.useful_bytes},
                   {"access_bytes", e.access_bytes},
                   {"utilization", e.utilization}});
  }
  j["endpoints"] = eps;
  return j;
}

}  // namespace chipnoc
