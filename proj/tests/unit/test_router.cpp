// SPDX-FileCopyrightText: © 2026 The chipnoc authors
//
// SPDX-License-Identifier: Apache-2.0
#include "chipnoc/router/flit_queue.hpp"
#include "chipnoc/sim/errors.hpp"
#include "chipnoc/sim/simulation.hpp"
#include "chipnoc/traffic/schedule.hpp"
#include "doctest.h"

using namespace chipnoc;

TEST_SUITE("router") {
  TEST_CASE("staged flits appear only after commit") {
    CommitLog log;
    FlitQueue q(2, &log);
    Flit f;
    f.packet = 1;
    q.stage(f, 5);
    CHECK(q.size() == 0);
    CHECK_FALSE(q.has_credit());
    CHECK(log.size() == 1);
    q.commit();
    CHECK(q.size() == 1);
    CHECK_FALSE(q.ready(4));
    CHECK(q.ready(5));
  }

  TEST_CASE("credit reflects start-of-cycle occupancy") {
    FlitQueue q(1, nullptr);
    q.stage(Flit{}, 0);
    q.commit();
    CHECK_FALSE(q.has_credit());
    q.pop();
    // The slot frees up for the upstream only at the next cycle.
    CHECK_FALSE(q.has_credit());
    q.commit();
    CHECK(q.has_credit());
    q.stage(Flit{}, 0);
    CHECK_THROWS_AS(q.stage(Flit{}, 0), SimulatorAssertion);
  }

  TEST_CASE("links add delay and hold for serialization") {
    FlitQueue q(4, nullptr);
    OutLink l{&q, 3, 2};
    CHECK(l.can_send(0));
    l.send(Flit{}, 0);
    q.commit();
    CHECK_FALSE(l.can_send(1));
    CHECK(l.can_send(2));
    CHECK(q.ready(3));
    CHECK_FALSE(q.ready(2));
  }
}

TEST_SUITE("netif") {
  TEST_CASE("same-id requests to another destination wait for the older response") {
    SimConfig cfg;
    Simulation sim(cfg);
    const Topology& topo = sim.topology();
    EndpointId src = topo.cluster_at({0, 0});
    InjectionSchedule s;
    for (int k = 0; k < 2; ++k) {
      Transaction t;
      t.kind = TxnKind::ReadReq;
      t.dst = topo.cluster_at({static_cast<std::uint32_t>(3 - 2 * k), 7});
      t.address = 0;
      t.length = 8;
      s.add(0, src, t, static_cast<std::uint32_t>(k));
    }
    sim.load(s);
    sim.run();
    const auto& r = sim.cluster(src).raw_results();
    REQUIRE(r.size() == 2);
    CHECK(r[1].issued >= r[0].completed);
  }

  TEST_CASE("same-id requests to one destination pipeline") {
    SimConfig cfg;
    Simulation sim(cfg);
    const Topology& topo = sim.topology();
    EndpointId src = topo.cluster_at({0, 0});
    InjectionSchedule s;
    for (int k = 0; k < 4; ++k) {
      Transaction t;
      t.kind = TxnKind::ReadReq;
      t.dst = topo.cluster_at({3, 7});
      t.address = 64 * k;
      t.length = 8;
      s.add(0, src, t, static_cast<std::uint32_t>(k));
    }
    sim.load(s);
    sim.run();
    const auto& r = sim.cluster(src).raw_results();
    REQUIRE(r.size() == 4);
    CHECK(r[3].issued < r[0].completed);
    for (std::size_t k = 1; k < r.size(); ++k) CHECK(r[k].completed > r[k - 1].completed);
  }
}
