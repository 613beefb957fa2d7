#include <doctest.h>

#include <algorithm>

#include "lpor/simulator.hpp"
#include "scenarios.hpp"

using namespace lpor;

TEST_CASE("void warning, reroute around the hole, acknowledgement to the trigger") {
  auto sim = scenarios::hole_with_detour();
  sim.run_until(5.0);

  std::vector<std::pair<TraceKind, NodeId>> seq;
  for (const auto& e : sim.trace()) seq.emplace_back(e.kind, e.node);
  const std::vector<std::pair<TraceKind, NodeId>> expected{
      {TraceKind::kSend, 0}, {TraceKind::kVoid, 1}, {TraceKind::kFwd, 0}, {TraceKind::kFwd, 2},
      {TraceKind::kFwd, 3},  {TraceKind::kFwd, 4},  {TraceKind::kRecv, 5}, {TraceKind::kAck, 5},
      {TraceKind::kAck, 0},
  };
  CHECK(seq == expected);

  const auto& t = sim.trace();
  CHECK(t[0].next_hop == 1);
  CHECK(t[1].peer == 0);
  CHECK(t[2].reroute);
  CHECK(t[2].next_hop == 2);
  CHECK(t[3].next_hop == 3);  // 2 would pick 1 again without the carried void list

  const PacketKey key{0, 0};
  const auto& trigger = sim.node_state(0);
  CHECK(trigger.exclusions.at(key) == std::vector<NodeId>{1});
  CHECK(trigger.void_records.at(key).state == VoidState::kAcked);
  CHECK(trigger.void_records.at(key).void_node == 1);
  CHECK(sim.node_state(1).voided.contains(key));

  CHECK(sim.metrics().received == 1);
  CHECK(sim.metrics().hops == std::vector<std::uint32_t>{4});
  CHECK(sim.metrics().forwarded == 4);
  CHECK(sim.metrics().routing_failures == 0);
  REQUIRE(sim.deliveries().size() == 1);
  CHECK(sim.deliveries()[0].rerouted);
}

TEST_CASE("no alternate: disrupt and a counted routing failure") {
  auto sim = scenarios::hole_without_alternate();
  sim.run_until(5.0);
  std::vector<TraceKind> kinds;
  for (const auto& e : sim.trace()) kinds.push_back(e.kind);
  CHECK(kinds == std::vector<TraceKind>{TraceKind::kSend, TraceKind::kVoid, TraceKind::kDisrupt,
                                        TraceKind::kDrop});
  CHECK(sim.metrics().routing_failures == 1);
  CHECK(sim.metrics().received == 0);
  CHECK(sim.node_state(0).void_records.at({0, 0}).state == VoidState::kDisrupted);
}

TEST_CASE("disrupt cascades to the previous hop, which reroutes") {
  // 0 -> 1 -> 2, where 2 is a dead end; 1 has no other option and
  // disrupts back to 0, which then takes the detour through 3.
  std::vector<MobilityState> nodes;
  for (Point2D p : {Point2D{0, 0}, Point2D{150, 0}, Point2D{300, 0}, Point2D{120, 170},
                    Point2D{300, 270}, Point2D{500, 220}, Point2D{680, 120}}) {
    nodes.push_back(stationary(p));
  }
  Simulator sim(SimParams{}, std::move(nodes), 1);
  sim.schedule_packet(1.0, 0, 6);
  sim.run_until(5.0);
  const auto has = [&](TraceKind k, NodeId n) {
    return std::any_of(sim.trace().begin(), sim.trace().end(),
                       [&](const TraceEvent& e) { return e.kind == k && e.node == n; });
  };
  CHECK(has(TraceKind::kVoid, 2));
  CHECK(has(TraceKind::kDisrupt, 1));
  CHECK(sim.metrics().received == 1);
  const auto check = scenarios::check_hole_invariants(sim);
  CHECK(check.loop_free);
  CHECK(check.no_silent_stall);
  for (const auto& e : sim.trace()) {
    if (e.kind == TraceKind::kFwd && e.node == 0) CHECK(e.next_hop == 3);
    if (e.kind == TraceKind::kFwd && e.node == 3) CHECK(e.next_hop == 4);
  }
}

TEST_CASE("void warnings about unknown packets are ignored") {
  auto sim = scenarios::hole_with_detour();
  sim.run_until(5.0);
  const auto before = sim.trace().size();
  sim.run_until(10.0);
  CHECK(sim.trace().size() == before);
}

TEST_CASE("random sparse topologies never reselect a void node") {
  std::size_t voids = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto sim = scenarios::random_hole(seed);
    sim.run_until(10.0);
    const auto check = scenarios::check_hole_invariants(sim);
    INFO(check.detail);
    CHECK(check.loop_free);
    CHECK(check.no_silent_stall);
    voids += check.voids;
  }
  CHECK(voids > 0);
}
