#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "lpor/geom_radio.hpp"

namespace lpor {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

/// Identifies one data packet end to end: (source, sequence number).
struct PacketKey {
  NodeId source = kNoNode;
  std::uint32_t seq = 0;

  friend auto operator<=>(const PacketKey&, const PacketKey&) = default;
};

/// The seven routing header fields carried by every data frame.
/// send_time is restamped by every transmitter; candidates time their
/// takeover from it.
struct PacketHeader {
  std::uint32_t seq = 0;
  NodeId source = kNoNode;
  NodeId destination = kNoNode;
  NodeId forwarder = kNoNode;
  std::optional<NodeId> cn1;
  std::optional<NodeId> cn2;
  double send_time = 0.0;

  PacketKey key() const noexcept { return {source, seq}; }
  friend bool operator==(const PacketHeader&, const PacketHeader&) = default;
};

/// One transmission along a packet's path, recorded for invariant checks.
/// Distances are to the header destination position and were measured at
/// the moment the transmitter chose its forwarder.
struct HopRecord {
  NodeId transmitter = kNoNode;
  double self_dist = 0.0;
  NodeId forwarder = kNoNode;
  double forwarder_dist = 0.0;
  std::optional<NodeId> cn1;
  std::optional<NodeId> cn2;
  double cn1_dist = 0.0;
  double cn2_dist = 0.0;
};

enum class FrameKind { kData, kHello, kVoid, kDisrupt, kAck };

/// Everything that goes over the air. Only `header` is protocol state for
/// data frames; the remaining fields are either control-message payload or
/// simulator instrumentation (hop counter, origin time, path log).
struct Frame {
  FrameKind kind = FrameKind::kData;
  NodeId sender = kNoNode;
  std::uint32_t size_bytes = 512;

  // Data.
  PacketHeader header;
  Point2D dest_pos;          // looked up once at the source
  std::uint32_t hop_count = 0;
  double origin_time = 0.0;
  bool rerouted = false;     // went through hole handling at least once
  NodeId trigger = kNoNode;  // most recent trigger node, if rerouted
  std::vector<NodeId> voids; // void nodes known for this packet
  std::vector<HopRecord> path;

  // Control (VOID / DISRUPT / ACK).
  NodeId target = kNoNode;
  PacketKey about;
  NodeId void_node = kNoNode;
  std::vector<NodeId> ack_route;  // remaining relays toward the trigger, nearest last

  // Hello.
  Point2D position;
};

}  // namespace lpor
