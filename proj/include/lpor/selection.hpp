#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lpor/geom_radio.hpp"
#include "lpor/packet.hpp"

namespace lpor {

struct Neighbor {
  NodeId id = kNoNode;
  Point2D pos;
};

/// Best forwarder by link stability.
///
/// Returns the destination when it is a listed neighbour. Otherwise scans
/// every neighbour, skips those without strict positive progress or in
/// `exclude`, and returns the one with the highest received power from
/// `cur`. Equal powers go to the smaller id. std::nullopt means the node
/// sits in a routing hole.
std::optional<NodeId> select_best_forwarder(Point2D cur, std::span<const Neighbor> neighbors,
                                            NodeId dest, Point2D dest_pos, const RadioParams& rp,
                                            std::span<const NodeId> exclude = {},
                                            LinkMetric metric = LinkMetric::kFriis);

/// Greedy-distance baseline: same eligibility, but picks the neighbour
/// closest to the destination.
std::optional<NodeId> por_select_forwarder(Point2D cur, std::span<const Neighbor> neighbors,
                                           NodeId dest, Point2D dest_pos,
                                           std::span<const NodeId> exclude = {});

/// Up to two backup receivers inside the forwarding area: within R of cur,
/// within R/2 of the forwarder, closer to dest than cur and farther from
/// dest than the forwarder. Ordered by received power from cur (CN1 first),
/// ties to the smaller id. Empty when the forwarder is the destination.
std::vector<NodeId> select_candidates(Point2D cur, const Neighbor& forwarder,
                                      std::span<const Neighbor> neighbors, NodeId dest,
                                      Point2D dest_pos, const RadioParams& rp,
                                      std::span<const NodeId> exclude = {},
                                      LinkMetric metric = LinkMetric::kFriis);

inline constexpr std::size_t kMaxCandidates = 2;

}  // namespace lpor
