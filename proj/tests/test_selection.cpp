#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "lpor/selection.hpp"
#include "oracle.hpp"

using namespace lpor;

namespace {

const RadioParams kRadio{};
constexpr NodeId kDest = 99;
constexpr Point2D kDestPos{500, 0};

}  // namespace

TEST_CASE("destination in the neighbour list is chosen directly") {
  const std::vector<Neighbor> nbrs{{1, {100, 0}}, {kDest, {200, 0}}};
  CHECK(select_best_forwarder({0, 0}, nbrs, kDest, {200, 0}, kRadio) == kDest);
  CHECK(por_select_forwarder({0, 0}, nbrs, kDest, {200, 0}) == kDest);
}

TEST_CASE("link metric prefers the nearest progressing neighbour; greedy prefers the farthest") {
  const std::vector<Neighbor> nbrs{{0, {100, 0}}, {1, {200, 0}}, {2, {-50, 0}}};
  // Oracle check: powers of A and B, C excluded for lack of progress.
  CHECK(oracle::best_forwarder({0, 0}, nbrs, kDest, kDestPos, kRadio) == NodeId{0});
  CHECK(select_best_forwarder({0, 0}, nbrs, kDest, kDestPos, kRadio) == NodeId{0});
  CHECK(por_select_forwarder({0, 0}, nbrs, kDest, kDestPos) == NodeId{1});
}

TEST_CASE("no progressing neighbour is a routing hole") {
  const std::vector<Neighbor> nbrs{{0, {-100, 0}}, {1, {0, 300}}};
  CHECK_FALSE(select_best_forwarder({0, 0}, nbrs, kDest, kDestPos, kRadio).has_value());
  CHECK_FALSE(por_select_forwarder({0, 0}, nbrs, kDest, kDestPos).has_value());
  CHECK_FALSE(select_best_forwarder({0, 0}, {}, kDest, kDestPos, kRadio).has_value());
}

TEST_CASE("a non-progressing neighbour does not stop the scan") {
  // Listed first; a literal "break" would return no forwarder.
  const std::vector<Neighbor> nbrs{{5, {-10, 0}}, {6, {150, 0}}};
  CHECK(select_best_forwarder({0, 0}, nbrs, kDest, kDestPos, kRadio) == NodeId{6});
}

TEST_CASE("ties go to the smaller id and exclusions are honoured") {
  const std::vector<Neighbor> nbrs{{7, {100, 0}}, {3, {0, 100}}, {4, {150, 0}}};
  // 7 and 3 are both 100 m away, but only 7 progresses.
  CHECK(select_best_forwarder({0, 0}, nbrs, kDest, kDestPos, kRadio) == NodeId{7});
  const std::vector<Neighbor> twins{{7, {100, 10}}, {3, {100, -10}}};
  CHECK(select_best_forwarder({0, 0}, twins, kDest, kDestPos, kRadio) == NodeId{3});
  CHECK(por_select_forwarder({0, 0}, twins, kDest, kDestPos) == NodeId{3});
  const std::vector<NodeId> exclude{3};
  CHECK(select_best_forwarder({0, 0}, twins, kDest, kDestPos, kRadio, exclude) == NodeId{7});
}

TEST_CASE("select_candidates geometry") {
  const Neighbor fwd{0, {100, 0}};
  SUBCASE("node inside the forwarding area qualifies") {
    // |H - A| = 50 <= 112.5 and |H - D| = 441.02 lies in (400, 500).
    const std::vector<Neighbor> nbrs{fwd, {1, {60, 30}}};
    CHECK(select_candidates({0, 0}, fwd, nbrs, kDest, kDestPos, kRadio) == std::vector<NodeId>{1});
  }
  SUBCASE("node closer to the destination than the forwarder is rejected") {
    const std::vector<Neighbor> nbrs{fwd, {1, {150, 0}}};
    CHECK(select_candidates({0, 0}, fwd, nbrs, kDest, kDestPos, kRadio).empty());
  }
  SUBCASE("only the forwarder in range") {
    const std::vector<Neighbor> nbrs{fwd};
    CHECK(select_candidates({0, 0}, fwd, nbrs, kDest, kDestPos, kRadio).empty());
  }
  SUBCASE("at most two, strongest first") {
    const std::vector<Neighbor> nbrs{fwd, {1, {60, 30}}, {2, {70, -20}}, {3, {90, 60}}, {4, {80, 40}}};
    const auto c = select_candidates({0, 0}, fwd, nbrs, kDest, kDestPos, kRadio);
    REQUIRE(c.size() == 2);
    CHECK(c[0] == 1);  // 67.1 m from the sender
    CHECK(c[1] == 2);  // 72.8 m
  }
  SUBCASE("forwarder is the destination") {
    const Neighbor d{kDest, {100, 0}};
    const std::vector<Neighbor> nbrs{d, {1, {60, 30}}};
    CHECK(select_candidates({0, 0}, d, nbrs, kDest, {100, 0}, kRadio).empty());
  }
}

TEST_CASE("random scenes: oracle equivalence, nearest-neighbour equivalence, candidate soundness") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 800.0);
  for (int scene = 0; scene < 300; ++scene) {
    std::vector<Neighbor> all;
    const int n = 2 + static_cast<int>(rng() % 40);
    for (int i = 0; i < n; ++i) all.push_back({static_cast<NodeId>(i), {u(rng), u(rng)}});
    const Point2D cur = all[0].pos;
    const NodeId dest = static_cast<NodeId>(1 + rng() % (n - 1));
    const Point2D dest_pos = all[dest].pos;
    std::vector<Neighbor> nbrs;
    for (const auto& nb : all) {
      if (nb.id != 0 && oracle::dist(cur, nb.pos) <= kRadio.range_m) nbrs.push_back(nb);
    }

    const auto got = select_best_forwarder(cur, nbrs, dest, dest_pos, kRadio);
    CHECK(got == oracle::best_forwarder(cur, nbrs, dest, dest_pos, kRadio));

    if (got && *got != dest) {
      // Homogeneous radios: highest power is the nearest progressing node.
      double best = 1e18;
      NodeId nearest = kNoNode;
      for (const auto& nb : nbrs) {
        const double d = oracle::dist(cur, nb.pos);
        if (oracle::dist(nb.pos, dest_pos) < oracle::dist(cur, dest_pos) && d < best) {
          best = d;
          nearest = nb.id;
        }
      }
      CHECK(*got == nearest);

      const auto fwd = *std::find_if(nbrs.begin(), nbrs.end(), [&](auto& x) { return x.id == *got; });
      for (NodeId c : select_candidates(cur, fwd, nbrs, dest, dest_pos, kRadio)) {
        const auto cn = *std::find_if(nbrs.begin(), nbrs.end(), [&](auto& x) { return x.id == c; });
        CHECK(c != *got);
        CHECK(oracle::candidate_ok(cur, fwd.pos, cn.pos, dest_pos, kRadio.range_m));
      }
    }
  }
}
