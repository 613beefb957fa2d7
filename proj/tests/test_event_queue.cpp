#include <doctest.h>

#include <string>
#include <vector>

#include "lpor/event_queue.hpp"

using lpor::CausalityError;
using Queue = lpor::EventQueue<int>;

TEST_CASE("equal times pop in insertion order") {
  Queue q;
  q.schedule(1.0, 10);
  q.schedule(0.5, 5);
  q.schedule(1.0, 11);
  q.schedule(1.0, 12);
  std::vector<int> order;
  q.run_until(2.0, [&](Queue::Event& e) { order.push_back(e.payload); });
  CHECK(order == std::vector<int>{5, 10, 11, 12});
}

TEST_CASE("events past t_end never run") {
  Queue q;
  q.schedule(1.0, 1);
  q.schedule(3.0, 3);
  int runs = 0;
  q.run_until(2.0, [&](Queue::Event&) { ++runs; });
  CHECK(runs == 1);
  CHECK(q.now() == 2.0);
  CHECK(q.size() == 1);
}

TEST_CASE("handler runs exactly once and the clock never decreases") {
  Queue q;
  q.schedule(0.25, 0);
  int runs = 0;
  double last = 0.0;
  q.run_until(10.0, [&](Queue::Event& e) {
    CHECK(e.time >= last);
    CHECK(q.now() == e.time);
    last = e.time;
    ++runs;
    if (e.payload < 5) q.schedule(q.now() + 0.5, e.payload + 1);
    if (e.payload == 5) q.schedule(20.0, 99);  // beyond the horizon
  });
  CHECK(runs == 6);
  CHECK(q.executed() == 6);
}

TEST_CASE("empty queue returns immediately") {
  Queue q;
  q.run_until(200.0, [](Queue::Event&) { FAIL("no events expected"); });
  CHECK(q.now() == 200.0);
}

TEST_CASE("scheduling in the past is a causality error") {
  Queue q;
  q.schedule(1.0, 0);
  q.run_until(1.0, [&](Queue::Event&) { CHECK_THROWS_AS(q.schedule(0.5, 1), CausalityError); });
  CHECK_NOTHROW(q.schedule(1.0, 2));
}
