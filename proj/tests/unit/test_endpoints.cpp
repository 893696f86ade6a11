// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cstring>
#include <map>
#include <set>

#include "chipnoc/endpoints/backing_store.hpp"
#include "chipnoc/endpoints/coalescer.hpp"
#include "chipnoc/endpoints/dma.hpp"
#include "chipnoc/endpoints/instream.hpp"
#include "chipnoc/endpoints/packing.hpp"
#include "chipnoc/router/join_table.hpp"
#include "chipnoc/sim/errors.hpp"
#include "doctest.h"
#include "gen.hpp"

using namespace chipnoc;

TEST_SUITE("backing_store") {
  TEST_CASE("unwritten memory is a stable salted pattern") {
    BackingStore a(1), b(1), c(2);
    CHECK(a.read(12345, 64) == b.read(12345, 64));
    CHECK(a.read(12345, 64) != c.read(12345, 64));
    CHECK(a.pages() == 0);
  }

  TEST_CASE("writes read back, across page boundaries") {
    gen::Gen g(41);
    BackingStore s(3);
    std::map<std::uint64_t, std::uint8_t> shadow;
    for (int i = 0; i < 200; ++i) {
      std::uint64_t at = g.range(0, 5 * BackingStore::kPage);
      auto data = g.bytes(g.range(1, 300));
      s.write(at, data);
      for (std::size_t k = 0; k < data.size(); ++k) shadow[at + k] = data[k];
    }
    for (int i = 0; i < 200; ++i) {
      std::uint64_t at = g.range(0, 5 * BackingStore::kPage);
      auto got = s.read(at, 64);
      for (std::size_t k = 0; k < 64; ++k) {
        auto it = shadow.find(at + k);
        CHECK(got[k] == (it == shadow.end() ? s.pattern(at + k) : it->second));
      }
    }
  }

  TEST_CASE("64-bit accessors are little endian") {
    BackingStore s;
    s.write_u64(8, 0x0807060504030201ull);
    auto b = s.read(8, 8);
    for (int i = 0; i < 8; ++i) CHECK(b[i] == i + 1);
    CHECK(s.read_u64(8) == 0x0807060504030201ull);
  }
}

TEST_SUITE("packing") {
  TEST_CASE("eight 8-byte indices fill one wide flit") {
    std::vector<std::uint64_t> a{0, 8, 80, 800, 8000, 16, 24, 32, 40};
    auto p = pack_indices(a, 8, 8);
    REQUIRE(p.size() == 2);
    CHECK(p[0].addresses.size() == 8);
    CHECK(p[1].addresses.size() == 1);
  }

  TEST_CASE("pack then unpack preserves order and element size") {
    gen::Gen g(42);
    for (int i = 0; i < 200; ++i) {
      std::uint8_t elem = static_cast<std::uint8_t>(1u << g.range(0, 3));
      std::uint32_t per = static_cast<std::uint32_t>(g.range(1, 16));
      std::vector<std::uint64_t> a(g.range(0, 100));
      for (auto& x : a) x = g.range(0, 1 << 20) * elem;
      auto packed = pack_indices(a, elem, per);
      CHECK(packed.size() == (a.size() + per - 1) / per);
      for (std::size_t k = 0; k + 1 < packed.size(); ++k) CHECK(packed[k].addresses.size() == per);
      auto back = unpack(packed);
      REQUIRE(back.size() == a.size());
      for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(back[k].address == a[k]);
        CHECK(back[k].size == elem);
      }
    }
  }
}

TEST_SUITE("coalescer") {
  TEST_CASE("requests to one granule merge until it is full") {
    Coalescer c({16, 8, 32, 32});
    for (std::uint64_t a = 0; a < 32; a += 8) c.push({a, 8, a}, 0);
    REQUIRE(c.has_output());
    auto g = c.pop_output();
    CHECK(g.address == 0);
    CHECK(g.size == 32);
    CHECK(g.useful == 32);
    CHECK(g.tags.size() == 4);
    CHECK(c.empty());
  }

  TEST_CASE("partial granules leave after the age limit") {
    Coalescer c({16, 8, 32, 32});
    c.push({40, 8, 1}, 3);
    c.tick(10);
    CHECK_FALSE(c.has_output());
    CHECK(c.next_deadline() == 11);
    c.tick(11);
    REQUIRE(c.has_output());
    auto g = c.pop_output();
    CHECK(g.address == 32);
    CHECK(g.useful == 8);
  }

  TEST_CASE("a full window forces the eldest out") {
    Coalescer c({2, 100, 32, 32});
    c.push({0, 8, 0}, 0);
    c.push({64, 8, 1}, 0);
    CHECK_FALSE(c.has_output());
    c.push({128, 8, 2}, 0);
    REQUIRE(c.has_output());
    CHECK(c.pop_output().address == 0);
  }

  TEST_CASE("neighbouring granules pair up when accesses may be larger") {
    Coalescer c({16, 4, 32, 64});
    c.push({0, 8, 0}, 0);
    c.push({32, 8, 1}, 0);
    c.tick(4);
    auto out = c.drain();
    REQUIRE(out.size() == 1);
    CHECK(out[0].size == 64);
    CHECK(out[0].useful == 16);
  }

  TEST_CASE("straddling requests are rejected") {
    Coalescer c;
    CHECK_THROWS_AS(c.push({28, 8, 0}, 0), std::invalid_argument);
  }

  TEST_CASE("every request leaves exactly once, inside its access") {
    gen::Gen g(43);
    for (int round = 0; round < 50; ++round) {
      CoalescerConfig cfg{static_cast<std::uint32_t>(g.range(1, 16)), static_cast<std::uint32_t>(g.range(1, 16)),
                          32, g.coin() ? 32u : 64u};
      Coalescer c(cfg);
      std::map<std::uint64_t, NarrowRequest> sent;
      std::vector<GranuleAccess> out;
      Cycle now = 0;
      for (std::uint64_t tag = 0; tag < 300; ++tag) {
        std::uint8_t size = static_cast<std::uint8_t>(1u << g.range(0, 3));
        NarrowRequest r{g.range(0, 64) * size, size, tag};
        sent[tag] = r;
        c.push(r, now);
        now += g.range(0, 2);
        c.tick(now);
        while (c.has_output()) out.push_back(c.pop_output());
      }
      c.tick(now + 100);
      while (c.has_output()) out.push_back(c.pop_output());
      CHECK(c.empty());
      std::set<std::uint64_t> seen;
      for (const auto& a : out) {
        CHECK(a.address % a.size == 0);
        std::set<std::uint64_t> bytes;
        for (auto t : a.tags) {
          CHECK(seen.insert(t).second);
          const auto& r = sent.at(t);
          CHECK(r.address >= a.address);
          CHECK(r.address + r.size <= a.address + a.size);
          for (std::uint64_t b = r.address; b < r.address + r.size; ++b) bytes.insert(b);
        }
        CHECK(a.useful == bytes.size());
      }
      CHECK(seen.size() == sent.size());
    }
  }
}

TEST_SUITE("instream") {
  TEST_CASE("reduction identities") {
    CHECK(reduce_identity(ReduceKind::Sum) == 0);
    CHECK(reduce_identity(ReduceKind::Min) == ~0ull);
    CHECK(reduce_identity(ReduceKind::Max) == 0);
    CHECK(reduce_identity(ReduceKind::And) == ~0ull);
    CHECK(reduce_identity(ReduceKind::Or) == 0);
    CHECK(reduce_identity(ReduceKind::Xor) == 0);
  }

  TEST_CASE("element ops wrap around") {
    std::vector<std::uint64_t> v{~0ull, 2};
    auto r = instream_apply(InStreamOp::add(3), v);
    CHECK(r.elements == std::vector<std::uint64_t>{2, 5});
    CHECK_FALSE(r.scalar.has_value());
    r = instream_apply(InStreamOp::mul(1ull << 63), v);
    CHECK(r.elements == std::vector<std::uint64_t>{1ull << 63, 0});
    r = instream_apply(InStreamOp{}, v);
    CHECK(r.elements == v);
  }

  TEST_CASE("an empty reduction yields the identity") {
    auto r = instream_apply(InStreamOp::reduction(ReduceKind::Min), {});
    REQUIRE(r.scalar.has_value());
    CHECK(*r.scalar == ~0ull);
  }

  TEST_CASE("streaming unit matches the whole-stream form for any chunking") {
    gen::Gen g(44);
    for (int i = 0; i < 200; ++i) {
      auto v = g.words(g.range(1, 300));
      InStreamOp op = g.coin() ? InStreamOp::reduction(static_cast<ReduceKind>(g.range(0, 5)))
                               : (g.coin() ? InStreamOp::add(g.u64()) : InStreamOp::mul(g.u64()));
      auto want = instream_apply(op, v);
      std::vector<std::uint8_t> bytes(v.size() * 8);
      std::memcpy(bytes.data(), v.data(), bytes.size());
      InStreamUnit u(op);
      for (std::size_t off = 0; off < bytes.size();) {
        std::size_t n = std::min<std::size_t>(bytes.size() - off, 8 * g.range(1, 20));
        u.feed(std::span(bytes).subspan(off, n));
        off += n;
      }
      if (op.kind == InStreamKind::Reduce) {
        CHECK(u.scalar() == *want.scalar);
      } else {
        std::vector<std::uint64_t> got(v.size());
        std::memcpy(got.data(), bytes.data(), bytes.size());
        CHECK(got == want.elements);
      }
    }
  }

  TEST_CASE("partial words are rejected") {
    InStreamUnit u(InStreamOp::add(1));
    std::vector<std::uint8_t> b(12);
    CHECK_THROWS_AS(u.feed(b), std::invalid_argument);
  }
}

TEST_SUITE("join_table") {
  TEST_CASE("arrivals fold until the expected count") {
    JoinTable t(2);
    CHECK(t.install(5, 3));
    auto o = t.update(5, 3, 1, 2);
    CHECK_FALSE(o.complete);
    o = t.update(5, 3, 0, 1);
    CHECK_FALSE(o.complete);
    o = t.update(5, 3, 1, 4);
    CHECK(o.complete);
    CHECK(o.status == 0);
    CHECK(o.count == 7);
    CHECK_FALSE(t.contains(5));
  }

  TEST_CASE("capacity, duplicates and pass-through") {
    JoinTable t(1);
    CHECK(t.install(1, 2));
    CHECK(t.full());
    CHECK_FALSE(t.install(2, 2));
    CHECK_THROWS_AS(t.install(1, 2), ProtocolError);
    auto o = t.update(9, 1, 1, 1);
    CHECK(o.complete);
    CHECK_THROWS_AS(t.update(10, 2, 1, 1), ProtocolError);
  }
}

TEST_SUITE("dma") {
  TEST_CASE("malformed jobs are rejected") {
    DmaJob ok;
    ok.src = 3;
    ok.length = 64;
    CHECK_NOTHROW(validate_job(ok, 0));

    auto bad = [&](auto edit) {
      DmaJob j = ok;
      edit(j);
      CHECK_THROWS_AS(validate_job(j, 0), ConfigError);
    };
    bad([](DmaJob& j) { j.length = 0; });
    bad([](DmaJob& j) { j.elem_size = 3; });
    bad([](DmaJob& j) { j.rows = 0; });
    bad([](DmaJob& j) { j.backends = 9; });
    bad([](DmaJob& j) { j.length = 12; });
    bad([](DmaJob& j) { j.op = InStreamOp::add(1); j.src_addr = 4; });
    bad([](DmaJob& j) { j.multicast = Rect{{0, 0}, {1, 1}}; });
    bad([](DmaJob& j) { j.op = InStreamOp::reduction(ReduceKind::Sum); j.dst = 5; });
    bad([](DmaJob& j) { j.indices = {1, 2}; j.src = kNoEndpoint; });
  }

  TEST_CASE("bursts cover the job exactly, round-robin over backends") {
    gen::Gen g(45);
    DmaConfig cfg;
    PacketFormat fmt;
    for (int i = 0; i < 300; ++i) {
      DmaJob j;
      (g.coin() ? j.src : j.dst) = 7;
      j.rows = static_cast<std::uint32_t>(g.range(1, 4));
      j.length = 8 * g.range(1, 300);
      j.src_addr = 8 * g.range(0, 1000);
      j.dst_addr = 8 * g.range(0, 1000);
      j.src_stride = j.length + 8 * g.range(0, 10);
      j.dst_stride = j.length + 8 * g.range(0, 10);
      j.backends = static_cast<std::uint32_t>(g.range(0, 8));
      auto plan = plan_bursts(j, 0, cfg, fmt);
      std::uint32_t k = j.backends ? j.backends : cfg.backends;
      std::map<std::uint64_t, std::uint64_t> src_cover, dst_cover;
      for (std::size_t b = 0; b < plan.size(); ++b) {
        const auto& p = plan[b];
        CHECK(p.length > 0);
        CHECK(p.length <= fmt.max_burst);
        CHECK(p.backend == b % k);
        CHECK(p.kind == (j.src == 7 ? DmaBurst::Kind::Read : DmaBurst::Kind::Write));
        // Same row and same offset within the row on both sides.
        std::uint64_t so = p.src_addr - j.src_addr, d_o = p.dst_addr - j.dst_addr;
        CHECK(so / j.src_stride == d_o / j.dst_stride);
        CHECK(so % j.src_stride == d_o % j.dst_stride);
        src_cover[p.src_addr] += p.length;
        dst_cover[p.dst_addr] += p.length;
      }
      // Row r covers [addr + r*stride, addr + r*stride + length) on both sides.
      auto covered = [&](const std::map<std::uint64_t, std::uint64_t>& m, std::uint64_t base, std::uint64_t stride) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> want, got;
        for (std::uint32_t r = 0; r < j.rows; ++r) want.push_back({base + r * stride, j.length});
        std::uint64_t run_start = 0, run_len = 0;
        for (auto [a, l] : m) {
          if (run_len && a == run_start + run_len && (a - base) % stride != 0) {
            run_len += l;
          } else {
            if (run_len) got.push_back({run_start, run_len});
            run_start = a;
            run_len = l;
          }
        }
        if (run_len) got.push_back({run_start, run_len});
        return got == want;
      };
      CHECK(covered(src_cover, j.src_addr, j.src_stride));
      CHECK(covered(dst_cover, j.dst_addr, j.dst_stride));
    }
  }

  TEST_CASE("unpacked gathers issue one narrow read per element") {
    DmaConfig cfg;
    cfg.packing = false;
    DmaJob j;
    j.src = 33;
    j.indices = {5, 1, 9};
    j.length = 24;
    auto plan = plan_bursts(j, 0, cfg, {});
    REQUIRE(plan.size() == 3);
    CHECK(plan[0].src_addr == 40);
    CHECK(plan[1].src_addr == 8);
    CHECK(plan[0].length == 8);
    CHECK(plan[2].dst_addr == 16);
  }

  TEST_CASE("packed gathers put eight indices in each request") {
    DmaConfig cfg;
    DmaJob j;
    j.src = 33;
    j.indices.resize(20);
    for (std::size_t i = 0; i < 20; ++i) j.indices[i] = 3 * i;
    j.length = 160;
    auto plan = plan_bursts(j, 0, cfg, {});
    REQUIRE(plan.size() == 3);
    CHECK(plan[0].gather.size() == 8);
    CHECK(plan[2].gather.size() == 4);
    CHECK(plan[1].gather[0] == 24 * 8);
    CHECK(plan[1].dst_addr == 64);
  }
}
