// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#include "chipnoc/cli/config_parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include "chipnoc/sim/errors.hpp"
#include "json.hpp"

namespace chipnoc {

namespace {

using nlohmann::json;

struct Field {
  std::string key;
  std::function<void(SimConfig&, const json&, const std::string&)> set;
  std::function<json(const SimConfig&)> get;
};

template <typename T>
Field uint_field(std::string key, T SimConfig::*section, std::uint32_t T::*member) {
  return {key,
          [section, member](SimConfig& c, const json& v, const std::string& k) {
            if (!v.is_number_unsigned() || v.get<std::uint64_t>() > std::numeric_limits<std::uint32_t>::max())
              throw ConfigError(k + ": expected an unsigned 32-bit integer");
            c.*section.*member = v.get<std::uint32_t>();
          },
          [section, member](const SimConfig& c) { return json(c.*section.*member); }};
}

template <typename T>
Field bool_field(std::string key, T SimConfig::*section, bool T::*member) {
  return {key,
          [section, member](SimConfig& c, const json& v, const std::string& k) {
            if (!v.is_boolean()) throw ConfigError(k + ": expected true or false");
            c.*section.*member = v.get<bool>();
          },
          [section, member](const SimConfig& c) { return json(c.*section.*member); }};
}

template <typename T>
Field real_field(std::string key, T SimConfig::*section, double T::*member) {
  return {key,
          [section, member](SimConfig& c, const json& v, const std::string& k) {
            if (!v.is_number()) throw ConfigError(k + ": expected a number");
            c.*section.*member = v.get<double>();
          },
          [section, member](const SimConfig& c) { return json(c.*section.*member); }};
}

Field u64_field(std::string key, std::uint64_t SimConfig::*member) {
  return {key,
          [member](SimConfig& c, const json& v, const std::string& k) {
            if (!v.is_number_unsigned()) throw ConfigError(k + ": expected an unsigned integer");
            c.*member = v.get<std::uint64_t>();
          },
          [member](const SimConfig& c) { return json(c.*member); }};
}

template <typename E>
Field enum_field(std::string key, std::function<E&(SimConfig&)> ref,
                 std::vector<std::pair<std::string, E>> names) {
  return {key,
          [ref, names](SimConfig& c, const json& v, const std::string& k) {
            std::string all;
            if (v.is_string())
              for (const auto& [n, e] : names)
                if (n == v.get<std::string>()) {
                  ref(c) = e;
                  return;
                }
            for (const auto& [n, e] : names) all += (all.empty() ? "" : ", ") + n;
            throw ConfigError(k + ": expected one of " + all);
          },
          [ref, names](const SimConfig& c) {
            E e = ref(const_cast<SimConfig&>(c));
            for (const auto& [n, x] : names)
              if (x == e) return json(n);
            return json();
          }};
}

const std::vector<Field>& fields() {
  static const std::vector<Field> f = [] {
    using S = SimConfig;
    std::vector<Field> v;
    v.push_back(enum_field<TopologyKind>("topology", [](S& c) -> TopologyKind& { return c.topology; },
                                         {{"mesh", TopologyKind::Mesh}, {"crossbar", TopologyKind::Crossbar}}));
    v.push_back(uint_field("mesh.cols", &S::mesh, &MeshConfig::cols));
    v.push_back(uint_field("mesh.rows", &S::mesh, &MeshConfig::rows));
    v.push_back(uint_field("mesh.chiplets", &S::mesh, &MeshConfig::chiplets));
    v.push_back(enum_field<RoutingAlgorithm>(
        "mesh.routing", [](S& c) -> RoutingAlgorithm& { return c.mesh.routing; },
        {{"xy", RoutingAlgorithm::DimensionOrdered},
         {"table", RoutingAlgorithm::Table},
         {"source", RoutingAlgorithm::Source}}));
    v.push_back(uint_field("mesh.fifo_depth", &S::mesh, &MeshConfig::fifo_depth));
    v.push_back(uint_field("mesh.router_latency", &S::mesh, &MeshConfig::router_latency));
    v.push_back(uint_field("mesh.link_latency", &S::mesh, &MeshConfig::link_latency));
    v.push_back(bool_field("mesh.host", &S::mesh, &MeshConfig::host));
    v.push_back(uint_field("noc.wide_bytes", &S::noc, &PacketFormat::wide_bytes));
    v.push_back(uint_field("noc.narrow_bytes", &S::noc, &PacketFormat::narrow_bytes));
    v.push_back(uint_field("noc.max_burst", &S::noc, &PacketFormat::max_burst));
    v.push_back(uint_field("ni.latency", &S::ni, &NiConfig::latency));
    v.push_back(uint_field("ni.outstanding", &S::ni, &NiConfig::outstanding));
    v.push_back(uint_field("ni.inject_flits", &S::ni, &NiConfig::inject_flits));
    v.push_back(uint_field("hbm.channels", &S::hbm, &HbmConfig::channels));
    v.push_back(uint_field("hbm.peak_bytes", &S::hbm, &HbmConfig::peak_bytes));
    v.push_back(uint_field("hbm.latency", &S::hbm, &HbmConfig::latency));
    v.push_back(uint_field("hbm.granularity", &S::hbm, &HbmConfig::granularity));
    v.push_back(uint_field("hbm.queue_depth", &S::hbm, &HbmConfig::queue_depth));
    v.push_back(bool_field("hbm.coalescer", &S::hbm, &HbmConfig::coalescer));
    v.push_back(uint_field("hbm.coalescer_window", &S::hbm, &HbmConfig::coalescer_window));
    v.push_back(uint_field("hbm.coalescer_age", &S::hbm, &HbmConfig::coalescer_age));
    v.push_back(uint_field("d2d.crossing_latency", &S::d2d, &D2dConfig::crossing_latency));
    v.push_back(uint_field("d2d.wide_serialization", &S::d2d, &D2dConfig::wide_serialization));
    v.push_back(uint_field("d2d.narrow_serialization", &S::d2d, &D2dConfig::narrow_serialization));
    v.push_back(uint_field("dma.backends", &S::dma, &DmaConfig::backends));
    v.push_back(uint_field("dma.outstanding_per_backend", &S::dma, &DmaConfig::outstanding_per_backend));
    v.push_back(uint_field("dma.max_active_jobs", &S::dma, &DmaConfig::max_active_jobs));
    v.push_back(uint_field("dma.pipeline_fill", &S::dma, &DmaConfig::pipeline_fill));
    v.push_back(bool_field("dma.packing", &S::dma, &DmaConfig::packing));
    v.push_back(real_field("energy.pj_per_byte_hop", &S::energy, &EnergyConfig::pj_per_byte_hop));
    v.push_back(uint_field("router.join_table", &S::router, &RouterConfig::join_table));
    v.push_back(uint_field("xbar.groups", &S::xbar, &XbarConfig::groups));
    v.push_back(uint_field("xbar.clusters_per_group", &S::xbar, &XbarConfig::clusters_per_group));
    v.push_back(uint_field("xbar.hbm_channels", &S::xbar, &XbarConfig::hbm_channels));
    v.push_back(uint_field("xbar.stage_latency", &S::xbar, &XbarConfig::stage_latency));
    v.push_back(uint_field("xbar.fifo_depth", &S::xbar, &XbarConfig::fifo_depth));
    v.push_back(real_field("traffic.background_rate", &S::traffic, &TrafficConfig::background_rate));
    v.push_back(uint_field("traffic.background_bytes", &S::traffic, &TrafficConfig::background_bytes));
    v.push_back(uint_field("traffic.probe_gap", &S::traffic, &TrafficConfig::probe_gap));
    v.push_back(uint_field("traffic.transfer_bytes", &S::traffic, &TrafficConfig::transfer_bytes));
    v.push_back(uint_field("traffic.tiles", &S::traffic, &TrafficConfig::tiles));
    v.push_back(uint_field("traffic.gather_elements", &S::traffic, &TrafficConfig::gather_elements));
    v.push_back(u64_field("sim.seed", &S::seed));
    v.push_back(u64_field("sim.max_cycles", &S::max_cycles));
    return v;
  }();
  return f;
}

const Field* find_field(const std::string& key) {
  for (const auto& f : fields())
    if (f.key == key) return &f;
  return nullptr;
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

void apply(SimConfig& cfg, const std::string& key, const json& v) {
  if (v.is_object()) {
    const std::string prefix = key + ".";
    bool section = std::any_of(fields().begin(), fields().end(),
                               [&](const Field& f) { return f.key.rfind(prefix, 0) == 0; });
    if (!section) throw ConfigError(key + ": unknown key");
    for (const auto& [k, sub] : v.items()) apply(cfg, prefix + k, sub);
    return;
  }
  const Field* f = find_field(key);
  if (!f) throw ConfigError(key + ": unknown key");
  f->set(cfg, v, key);
}

}  // namespace

SimConfig parse_config_text(std::string_view text, std::string_view origin) {
  SimConfig cfg;
  if (std::all_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
    return cfg;
  json doc;
  try {
    doc = json::parse(text.begin(), text.end(), nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] parse error at line X, column Y: " prefix.
    auto colon = what.find(": ");
    throw ConfigError(std::string(origin) + ":" + std::to_string(line_of(text, e.byte - (e.byte > 0))) +
                      ": parse error: " + (colon == std::string::npos ? what : what.substr(colon + 2)));
  }
  if (!doc.is_object()) throw ConfigError(std::string(origin) + ":1: top level must be an object");
  for (const auto& [k, v] : doc.items()) apply(cfg, k, v);
  cfg.validate();
  return cfg;
}

SimConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str(), path);
}

std::vector<std::string> config_keys() {
  std::vector<std::string> out;
  for (const auto& f : fields()) out.push_back(f.key);
  return out;
}

std::string dump_config(const SimConfig& cfg) {
  nlohmann::ordered_json j;
  for (const auto& f : fields()) {
    auto dot = f.key.find('.');
    if (dot == std::string::npos) j[f.key] = f.get(cfg);
    else j[f.key.substr(0, dot)][f.key.substr(dot + 1)] = f.get(cfg);
  }
  return j.dump(2) + "\n";
}

}  // namespace chipnoc
