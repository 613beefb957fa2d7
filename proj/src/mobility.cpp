#include "lpor/mobility.hpp"

#include <algorithm>
#include <utility>
#include <stdexcept>

namespace lpor {
namespace {

Point2D draw_point(Rng& rng, const Area& area) {
  const double x = rng.uniform(0.0, area.width);
  const double y = rng.uniform(0.0, area.height);
  return {x, y};
}

}  // namespace

std::vector<MobilityState> init_positions(std::uint64_t seed, std::size_t n, Area area,
                                          double speed, double pause_time) {
  if (n == 0) throw std::invalid_argument("init_positions: node count must be > 0");
  if (!(area.width > 0.0) || !(area.height > 0.0)) {
    throw std::invalid_argument("init_positions: area must have positive extent");
  }
  if (speed < 0.0) throw std::invalid_argument("init_positions: speed must be >= 0");

  std::vector<MobilityState> states;
  states.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    MobilityState s;
    s.rng = Rng(seed, i);
    s.area = area;
    s.speed = speed;
    s.pause_time = pause_time;
    s.position = draw_point(s.rng, area);
    s.leg_origin = s.position;
    do {
      s.waypoint = draw_point(s.rng, area);
    } while (s.waypoint == s.position);
    states.push_back(std::move(s));
  }
  return states;
}

MobilityState stationary(Point2D p, Area area) {
  MobilityState s;
  s.area = area;
  s.position = p;
  s.waypoint = p;
  s.leg_origin = p;
  return s;
}

Point2D position_at(MobilityState& s, double t) {
  if (t < s.last_update) throw std::logic_error("position_at: time moved backwards");
  s.last_update = t;
  if (s.speed <= 0.0) return s.position;

  // Positions are interpolated from the leg origin, never from the previous
  // sample, so the trajectory does not depend on how often it is queried.
  for (;;) {
    const double depart = std::max(s.leg_start, s.pause_until);
    if (t <= depart) {
      s.position = s.leg_origin;
      return s.position;
    }
    const double length = euclid_distance(s.leg_origin, s.waypoint);
    const double arrival = depart + length / s.speed;
    if (t < arrival) {
      const double frac = (t - depart) / (arrival - depart);
      s.position = {s.leg_origin.x + (s.waypoint.x - s.leg_origin.x) * frac,
                    s.leg_origin.y + (s.waypoint.y - s.leg_origin.y) * frac};
      return s.position;
    }
    s.leg_origin = s.waypoint;
    s.leg_start = arrival;
    s.pause_until = arrival + s.pause_time;
    do {
      s.waypoint = draw_point(s.rng, s.area);
    } while (s.waypoint == s.leg_origin);
  }
}

}  // namespace lpor
