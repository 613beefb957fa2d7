#include "lpor/selection.hpp"

#include <algorithm>

namespace lpor {
namespace {

bool excluded(std::span<const NodeId> exclude, NodeId id) {
  return std::find(exclude.begin(), exclude.end(), id) != exclude.end();
}

bool has_neighbor(std::span<const Neighbor> neighbors, NodeId id) {
  return std::any_of(neighbors.begin(), neighbors.end(),
                     [id](const Neighbor& n) { return n.id == id; });
}

// Strictly better score wins; equal scores go to the smaller id.
template <typename Score>
std::optional<NodeId> arg_best(Point2D cur, std::span<const Neighbor> neighbors, Point2D dest_pos,
                               std::span<const NodeId> exclude, Score score) {
  std::optional<NodeId> best;
  double best_score = 0.0;
  for (const Neighbor& n : neighbors) {
    // A non-progressing neighbour is skipped, not a reason to stop scanning.
    if (!positive_progress(n.pos, cur, dest_pos) || excluded(exclude, n.id)) continue;
    const double s = score(n);
    if (!best || s > best_score || (s == best_score && n.id < *best)) {
      best = n.id;
      best_score = s;
    }
  }
  return best;
}

}  // namespace

std::optional<NodeId> select_best_forwarder(Point2D cur, std::span<const Neighbor> neighbors,
                                            NodeId dest, Point2D dest_pos, const RadioParams& rp,
                                            std::span<const NodeId> exclude, LinkMetric metric) {
  if (has_neighbor(neighbors, dest)) return dest;
  return arg_best(cur, neighbors, dest_pos, exclude, [&](const Neighbor& n) {
    return received_power(metric, rp, euclid_distance(cur, n.pos));
  });
}

std::optional<NodeId> por_select_forwarder(Point2D cur, std::span<const Neighbor> neighbors,
                                           NodeId dest, Point2D dest_pos,
                                           std::span<const NodeId> exclude) {
  if (has_neighbor(neighbors, dest)) return dest;
  return arg_best(cur, neighbors, dest_pos, exclude,
                  [&](const Neighbor& n) { return -euclid_distance(n.pos, dest_pos); });
}

std::vector<NodeId> select_candidates(Point2D cur, const Neighbor& forwarder,
                                      std::span<const Neighbor> neighbors, NodeId dest,
                                      Point2D dest_pos, const RadioParams& rp,
                                      std::span<const NodeId> exclude, LinkMetric metric) {
  if (forwarder.id == dest) return {};

  const double cur_to_dest = euclid_distance(cur, dest_pos);
  const double fwd_to_dest = euclid_distance(forwarder.pos, dest_pos);
  const double half_range = rp.range_m / 2.0;

  struct Scored {
    double power;
    NodeId id;
  };
  std::vector<Scored> eligible;
  for (const Neighbor& n : neighbors) {
    if (n.id == forwarder.id || n.id == dest || excluded(exclude, n.id)) continue;
    const double to_cur = euclid_distance(cur, n.pos);
    const double to_dest = euclid_distance(n.pos, dest_pos);
    if (to_cur > rp.range_m || to_cur <= 0.0) continue;
    if (euclid_distance(n.pos, forwarder.pos) > half_range) continue;
    if (!(to_dest < cur_to_dest && to_dest > fwd_to_dest)) continue;
    eligible.push_back({received_power(metric, rp, to_cur), n.id});
  }

  std::sort(eligible.begin(), eligible.end(), [](const Scored& a, const Scored& b) {
    return a.power != b.power ? a.power > b.power : a.id < b.id;
  });
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < eligible.size() && i < kMaxCandidates; ++i) {
    out.push_back(eligible[i].id);
  }
  return out;
}

}  // namespace lpor
