#pragma once

// Brute-force reference implementations used only by tests. They follow
// the forwarder-selection steps literally and compute power from the
// free-space formula directly, sharing no code with the library's
// selection path.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "lpor/geom_radio.hpp"
#include "lpor/packet.hpp"
#include "lpor/selection.hpp"

namespace oracle {

inline double dist(lpor::Point2D a, lpor::Point2D b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

inline double power(const lpor::RadioParams& rp, double d) {
  const double denom = (4.0 * std::numbers::pi * d) * (4.0 * std::numbers::pi * d) * rp.system_loss;
  return rp.tx_power_watts * rp.tx_gain * rp.rx_gain * rp.wavelength_m * rp.wavelength_m / denom;
}

/// Destination check, progress filter into an array, power for
/// every array entry, maximum. Neighbours are visited in ascending id
/// order with a strict comparison, so ties resolve to the smaller id.
inline std::optional<lpor::NodeId> best_forwarder(lpor::Point2D cur,
                                                  std::vector<lpor::Neighbor> neighbors,
                                                  lpor::NodeId dest, lpor::Point2D dest_pos,
                                                  const lpor::RadioParams& rp,
                                                  const std::vector<lpor::NodeId>& exclude = {}) {
  for (const auto& n : neighbors) {
    if (n.id == dest) return dest;
  }
  std::sort(neighbors.begin(), neighbors.end(),
            [](const lpor::Neighbor& a, const lpor::Neighbor& b) { return a.id < b.id; });
  std::vector<lpor::Neighbor> array;
  for (const auto& n : neighbors) {
    if (dist(n.pos, dest_pos) >= dist(cur, dest_pos)) continue;
    bool skip = false;
    for (auto e : exclude) skip = skip || e == n.id;
    if (!skip) array.push_back(n);
  }
  std::optional<lpor::NodeId> best;
  double best_power = -1.0;
  for (const auto& n : array) {
    const double p = power(rp, dist(cur, n.pos));
    if (p > best_power) {
      best_power = p;
      best = n.id;
    }
  }
  return best;
}

/// Forwarding-area geometry: every predicate a candidate
/// must satisfy.
inline bool candidate_ok(lpor::Point2D cur, lpor::Point2D fwd, lpor::Point2D n,
                         lpor::Point2D dest_pos, double range) {
  return dist(n, fwd) <= range / 2.0 && dist(cur, n) <= range &&
         dist(n, dest_pos) < dist(cur, dest_pos) && dist(n, dest_pos) > dist(fwd, dest_pos);
}

}  // namespace oracle
