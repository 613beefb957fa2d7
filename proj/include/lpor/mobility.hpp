#pragma once

#include <cstdint>
#include <vector>

#include "lpor/geom_radio.hpp"
#include "lpor/rng.hpp"

namespace lpor {

struct Area {
  double width = 800.0;
  double height = 800.0;

  bool contains(Point2D p) const noexcept {
    return p.x >= 0.0 && p.x <= width && p.y >= 0.0 && p.y <= height;
  }
  friend bool operator==(const Area&, const Area&) = default;
};

/// Random-waypoint state of one node. Each node owns its RNG stream so a
/// trajectory depends only on (seed, node index, speed, area).
struct MobilityState {
  Point2D position;
  Point2D waypoint;
  Point2D leg_origin;        // where the current leg toward waypoint began
  double leg_start = 0.0;    // time the node left leg_origin
  double speed = 0.0;        // m/s
  double pause_time = 0.0;   // s spent at each waypoint
  double pause_until = 0.0;
  double last_update = 0.0;
  Area area;
  Rng rng{0};
};

/// n uniform placements in the area; waypoints are drawn from the same
/// per-node stream. Throws std::invalid_argument for n == 0 or an empty area.
std::vector<MobilityState> init_positions(std::uint64_t seed, std::size_t n, Area area,
                                          double speed, double pause_time = 0.0);

/// A node parked at p forever.
MobilityState stationary(Point2D p, Area area = {});

/// Advances the state to time t and returns the position there. t earlier
/// than the last update throws std::logic_error.
Point2D position_at(MobilityState& state, double t);

}  // namespace lpor
