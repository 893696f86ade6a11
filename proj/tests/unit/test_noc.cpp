// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <set>

#include "chipnoc/noc/collective.hpp"
#include "chipnoc/noc/packet.hpp"
#include "chipnoc/noc/routing.hpp"
#include "chipnoc/sim/errors.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace chipnoc;

TEST_SUITE("routing") {
  TEST_CASE("xy goes east-west first, then north-south") {
    CHECK(route_dimension_ordered({0, 0}, {2, 3}) == Port::East);
    CHECK(route_dimension_ordered({2, 0}, {2, 3}) == Port::North);
    CHECK(route_dimension_ordered({2, 3}, {0, 0}) == Port::West);
    CHECK(route_dimension_ordered({0, 3}, {0, 0}) == Port::South);
    CHECK(route_dimension_ordered({1, 1}, {1, 1}) == Port::Local);
    CHECK(route_dimension_ordered({0, 0}, {2, 3}, DimensionOrder::YX) == Port::North);
  }

  TEST_CASE("paths are minimal and follow the dimension order") {
    gen::Gen g(11);
    for (int i = 0; i < 500; ++i) {
      Coord a = g.coord(16, 16), b = g.coord(16, 16);
      bool xy = g.coin();
      auto p = route_path(a, b, xy ? DimensionOrder::XY : DimensionOrder::YX);
      CHECK(p == gen::walk(a, b, xy));
      CHECK(p.size() == gen::manhattan(a, b) + 1);
    }
  }

  TEST_CASE("source routes replay the path and end in Local") {
    gen::Gen g(12);
    for (int i = 0; i < 300; ++i) {
      Coord a = g.coord(8, 8), b = g.coord(8, 8);
      auto ports = source_route(a, b);
      REQUIRE(!ports.empty());
      CHECK(ports.back() == Port::Local);
      Coord cur = a;
      for (std::size_t k = 0; k + 1 < ports.size(); ++k) cur = step(cur, ports[k]);
      CHECK(cur == b);
      CHECK(ports.size() == gen::manhattan(a, b) + 1);
    }
  }

  TEST_CASE("route tables") {
    RouteTable t = RouteTable::dimension_ordered(4, 3, DimensionOrder::XY);
    gen::Gen g(13);
    for (int i = 0; i < 200; ++i) {
      Coord n = g.coord(4, 3), d = g.coord(4, 3);
      CHECK(route_table(n, t, d) == route_dimension_ordered(n, d));
    }
    t.erase({1, 1}, {3, 2});
    CHECK_FALSE(t.find({1, 1}, {3, 2}).has_value());
    CHECK_THROWS_AS(route_table({1, 1}, t, {3, 2}), RoutingError);
    t.set({1, 1}, {3, 2}, Port::North);
    CHECK(route_table({1, 1}, t, {3, 2}) == Port::North);
  }
}

TEST_SUITE("collective") {
  TEST_CASE("fork partition splits a rectangle by direction") {
    // 4x2 broadcast seen from the origin corner.
    auto r = fork_partition({{0, 0}, {3, 1}}, {0, 0});
    REQUIRE(r.size() == 3);
    CHECK(r[0] == ForkReplica{Port::Local, Rect::point({0, 0})});
    CHECK(r[1] == ForkReplica{Port::North, Rect{{0, 1}, {0, 1}}});
    CHECK(r[2] == ForkReplica{Port::East, Rect{{1, 0}, {3, 1}}});
    CHECK_THROWS_AS(fork_partition({{2, 0}, {1, 0}}, {0, 0}), std::invalid_argument);
  }

  TEST_CASE("fork partition is a disjoint cover routed toward its members") {
    gen::Gen g(21);
    for (int i = 0; i < 400; ++i) {
      Rect set = g.rect(8, 8);
      Coord cur = g.coord(8, 8);
      bool xy = g.coin();
      auto order = xy ? DimensionOrder::XY : DimensionOrder::YX;
      auto reps = fork_partition(set, cur, order);
      std::multiset<Coord> covered;
      for (std::size_t k = 0; k < reps.size(); ++k) {
        if (k) CHECK(static_cast<int>(reps[k - 1].port) < static_cast<int>(reps[k].port));
        for (Coord m : gen::members(reps[k].subset)) {
          covered.insert(m);
          CHECK(gen::inside(set, m));
          CHECK(route_dimension_ordered(cur, m, order) == reps[k].port);
        }
      }
      auto all = gen::members(set);
      CHECK(covered.size() == all.size());
      CHECK(std::set<Coord>(covered.begin(), covered.end()).size() == all.size());
    }
  }

  TEST_CASE("fork tree edges equal the union of dimension-ordered paths") {
    CHECK(fork_tree_edges({0, 0}, {{0, 0}, {3, 1}}) == 7);
    gen::Gen g(22);
    for (int i = 0; i < 300; ++i) {
      Rect set = g.rect(8, 6);
      Coord o = g.coord(8, 6);
      std::set<std::pair<Coord, Coord>> edges;
      for (Coord m : gen::members(set)) {
        auto p = gen::walk(o, m);
        for (std::size_t k = 0; k + 1 < p.size(); ++k) edges.insert({p[k], p[k + 1]});
      }
      CHECK(fork_tree_edges(o, set) == edges.size());
    }
  }

  TEST_CASE("fork subtree holds the members whose path crosses a node") {
    gen::Gen g(23);
    for (int i = 0; i < 300; ++i) {
      Rect set = g.rect(6, 6);
      Coord o = g.coord(6, 6), cur = g.coord(6, 6);
      std::vector<Coord> want;
      for (Coord m : gen::members(set)) {
        auto p = gen::walk(o, m);
        if (std::find(p.begin(), p.end(), cur) != p.end()) want.push_back(m);
      }
      auto sub = fork_subtree(o, set, cur);
      if (want.empty()) {
        CHECK_FALSE(sub.has_value());
      } else {
        REQUIRE(sub.has_value());
        auto got = gen::members(*sub);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want);
      }
    }
  }

  TEST_CASE("join fan-in counts distinct entry ports") {
    gen::Gen g(24);
    for (int i = 0; i < 300; ++i) {
      Rect src = g.rect(6, 6);
      Coord sink = src.lo, cur = g.coord(6, 6);
      std::set<Coord> from;
      for (Coord m : gen::members(src)) {
        auto p = gen::walk(m, sink);
        auto it = std::find(p.begin(), p.end(), cur);
        if (it == p.end()) continue;
        // Local arrivals are keyed by the node itself.
        from.insert(it == p.begin() ? cur : *(it - 1));
      }
      CHECK(join_fan_in(src, sink, cur, DimensionOrder::XY) == from.size());
    }
  }

  TEST_CASE("barriers aggregate at the low corner") {
    CHECK(barrier_aggregation_node({{2, 3}, {5, 7}}) == Coord{2, 3});
  }
}

TEST_SUITE("packet") {
  Transaction random_txn(gen::Gen & g, const PacketFormat& fmt) {
    Transaction t;
    t.kind = static_cast<TxnKind>(g.range(0, 3));
    t.id = static_cast<std::uint16_t>(g.range(0, 15));
    t.address = g.range(0, 1 << 20) * 8;
    t.src = static_cast<EndpointId>(g.range(0, 40));
    t.dst = static_cast<EndpointId>(g.range(0, 40));
    t.probe = g.coin();
    t.length = static_cast<std::uint32_t>(g.range(1, fmt.max_burst / 8) * 8);
    if (t.kind == TxnKind::WriteReq || t.kind == TxnKind::ReadRsp) t.payload = g.bytes(t.length);
    if (t.kind == TxnKind::WriteRsp) t.length = 0;
    return t;
  }

  TEST_CASE("single-flit control and eight-flit bursts") {
    PacketFormat fmt;
    Transaction rd;
    rd.kind = TxnKind::ReadReq;
    rd.length = 512;
    CHECK(default_channel(rd, fmt) == ChannelKind::Req);
    CHECK(flit_count(rd, ChannelKind::Req, fmt) == 1);
    Transaction wr;
    wr.kind = TxnKind::WriteReq;
    wr.length = 512;
    wr.payload.assign(512, 1);
    CHECK(default_channel(wr, fmt) == ChannelKind::Wide);
    CHECK(flit_count(wr, ChannelKind::Wide, fmt) == 8);
    CHECK(payload_capacity(ChannelKind::Wide, fmt) == 64);
    CHECK(payload_capacity(ChannelKind::Req, fmt) == 8);
  }

  TEST_CASE("packetize then depacketize is the identity") {
    PacketFormat fmt;
    gen::Gen g(31);
    for (int i = 0; i < 500; ++i) {
      Transaction t = random_txn(g, fmt);
      ChannelKind c = default_channel(t, fmt);
      auto flits = packetize(t, c, fmt, 77);
      REQUIRE(flits.size() == flit_count(t, c, fmt));
      CHECK(flits.front().head);
      CHECK(flits.back().tail);
      for (std::size_t k = 0; k < flits.size(); ++k) {
        CHECK(flits[k].packet == 77);
        CHECK(flits[k].channel == c);
        CHECK(flits[k].length <= payload_capacity(c, fmt));
        if (k && k + 1 < flits.size()) CHECK_FALSE((flits[k].head || flits[k].tail));
      }
      CHECK(depacketize(flits) == t);
    }
  }

  TEST_CASE("oversized or inconsistent transactions are rejected") {
    PacketFormat fmt;
    Transaction t;
    t.kind = TxnKind::WriteReq;
    t.length = 1024;
    t.payload.assign(1024, 0);
    CHECK_THROWS_AS(packetize(t, ChannelKind::Wide, fmt), ProtocolError);
    t.length = 64;
    t.payload.assign(32, 0);
    CHECK_THROWS_AS(packetize(t, ChannelKind::Wide, fmt), ProtocolError);
    CHECK_THROWS_AS(depacketize(std::span<const Flit>{}), ProtocolError);
  }
}
