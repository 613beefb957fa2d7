#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <variant>
#include <vector>

#include "lpor/event_queue.hpp"
#include "lpor/forwarding_table.hpp"
#include "lpor/geom_radio.hpp"
#include "lpor/metrics.hpp"
#include "lpor/mobility.hpp"
#include "lpor/packet.hpp"
#include "lpor/rng.hpp"
#include "lpor/selection.hpp"
#include "lpor/trace.hpp"

namespace lpor {

enum class Protocol { kLpor, kPor };
enum class NeighborMode { kOracle, kBeacon };

struct SimParams {
  Protocol protocol = Protocol::kLpor;
  RadioParams radio;
  LinkMetric metric = LinkMetric::kFriis;
  NeighborMode neighbor_mode = NeighborMode::kOracle;
  double candidate_wait = 0.010;   // per candidate rank, from the header send time
  double table_lifetime = 2.0;     // forwarding table entries and retained packets
  double beacon_interval = 1.0;
  double neighbor_timeout = 2.0;   // beacon mode: forget neighbours not heard for this long
  double drop_prob = 0.0;          // independent per receiver and frame
  double bandwidth_bps = 2.0e6;
  double propagation_speed = 299792458.0;
  std::uint32_t control_bytes = 32;
  std::uint32_t hello_bytes = 32;
  bool record_trace = true;
};

/// Constant-bit-rate traffic: one packet every `interval` seconds from
/// `start` while the send time stays <= `stop`.
struct Flow {
  NodeId source = kNoNode;
  NodeId destination = kNoNode;
  double start = 0.0;
  double interval = 0.25;
  double stop = 0.0;
  std::uint32_t packet_bytes = 512;
};

/// A delivered packet as seen by its destination.
struct DeliveryRecord {
  PacketKey key;
  NodeId destination = kNoNode;
  double time = 0.0;
  std::uint32_t hop_count = 0;
  bool rerouted = false;
  std::vector<HopRecord> path;
};

enum class VoidState { kRerouting, kAcked, kDisrupted };

struct VoidRecord {
  NodeId trigger = kNoNode;
  NodeId void_node = kNoNode;
  PacketKey key;
  VoidState state = VoidState::kRerouting;
};

/// Routing state of one node.
struct NodeProtocolState {
  struct NeighborEntry {
    Point2D pos;
    double heard_at = 0.0;
  };
  struct PendingCandidate {
    std::shared_ptr<const Frame> frame;
    int rank = 0;
    double fire_time = 0.0;
    std::uint64_t token = 0;
  };
  /// The packet as this node received it, kept so it can be resent around
  /// a hole until the table lifetime runs out.
  struct Retained {
    std::shared_ptr<const Frame> frame;
    NodeId prev_hop = kNoNode;
    double expiry = 0.0;
  };

  std::map<NodeId, NeighborEntry> neighbors;  // beacon mode only
  std::set<PacketKey> seen;
  ForwardingTable table;
  std::map<PacketKey, PendingCandidate> pending;
  std::map<PacketKey, Retained> retained;
  std::map<PacketKey, std::vector<NodeId>> exclusions;  // voids recorded as trigger
  std::map<PacketKey, VoidRecord> void_records;
  std::set<PacketKey> voided;  // packets for which this node was the void node
  std::uint32_t next_seq = 0;
  bool failed = false;
};

/// Single-threaded discrete-event simulation of one network running L-POR
/// or the greedy-distance baseline over an idealized broadcast medium.
class Simulator {
 public:
  Simulator(SimParams params, std::vector<MobilityState> nodes, std::uint64_t seed);

  std::size_t node_count() const noexcept { return mobility_.size(); }
  double now() const noexcept { return queue_.now(); }

  void add_flow(const Flow& flow);
  /// One packet from source to destination at time t.
  void schedule_packet(double t, NodeId source, NodeId destination,
                       std::uint32_t packet_bytes = 512);
  /// A failed node neither receives nor transmits anything.
  void set_failed(NodeId node, bool failed = true);

  void run_until(double t_end);

  const SimParams& params() const noexcept { return params_; }
  const MetricsAccumulator& metrics() const noexcept { return metrics_; }
  const std::vector<TraceEvent>& trace() const noexcept { return trace_; }
  const std::vector<DeliveryRecord>& deliveries() const noexcept { return deliveries_; }
  const NodeProtocolState& node_state(NodeId node) const { return nodes_.at(node); }
  std::uint64_t transmissions() const noexcept { return transmissions_; }
  std::uint64_t data_broadcasts() const noexcept { return data_broadcasts_; }
  std::uint64_t events_executed() const noexcept { return queue_.executed(); }

  /// Current position of a node; advances its mobility state to now().
  Point2D position(NodeId node);
  /// What `node` currently believes its neighbourhood to be.
  std::vector<Neighbor> neighbor_view(NodeId node);

 private:
  struct PacketDelivery {
    NodeId receiver;
    std::shared_ptr<const Frame> frame;
  };
  struct CandidateTimer {
    NodeId node;
    PacketKey key;
    std::uint64_t token;
  };
  struct TrafficFire {
    std::size_t flow;
  };
  struct BeaconFire {
    NodeId node;
  };
  struct TableExpiry {
    NodeId node;
  };
  using Payload = std::variant<PacketDelivery, CandidateTimer, TrafficFire, BeaconFire, TableExpiry>;

  enum class SendReason { kOriginate, kForward, kTakeover, kReroute };

  void dispatch(EventQueue<Payload>::Event& ev);
  void broadcast(NodeId sender, std::shared_ptr<const Frame> frame);
  void originate(NodeId source, NodeId destination, std::uint32_t packet_bytes);

  // Data path.
  void on_receive(NodeId node, const std::shared_ptr<const Frame>& frame);
  void on_candidate_timeout(NodeId node, PacketKey key, std::uint64_t token);
  /// Picks forwarder and candidates from `node`, stamps the header and
  /// broadcasts. Returns false when no forwarder exists.
  bool route_and_send(NodeId node, Frame frame, NodeId prev_hop, std::span<const NodeId> exclude,
                      SendReason reason);
  std::optional<NodeId> pick_forwarder(Point2D cur, std::span<const Neighbor> neighbors,
                                       NodeId dest, Point2D dest_pos,
                                       std::span<const NodeId> exclude) const;

  // Hole handling (hole_handling.cpp).
  void detect_void(NodeId node, const std::shared_ptr<const Frame>& frame, NodeId prev_hop);
  void handle_void_warning(NodeId trigger, PacketKey key, NodeId void_node,
                           std::span<const NodeId> carried_voids);
  void on_control(NodeId node, const Frame& frame);
  void send_ack(NodeId dest, const Frame& delivered);
  void send_control(NodeId sender, Frame frame);
  void record_failure(NodeId node, PacketKey key);

  void emit(TraceKind kind, NodeId node, const PacketHeader& h, NodeId next_hop = kNoNode,
            NodeId peer = kNoNode, bool reroute = false, bool takeover = false);
  void retain(NodeId node, const std::shared_ptr<const Frame>& frame, NodeId prev_hop);

  SimParams params_;
  std::vector<MobilityState> mobility_;
  std::vector<NodeProtocolState> nodes_;
  std::vector<Flow> flows_;
  EventQueue<Payload> queue_;
  Rng channel_rng_;
  MetricsAccumulator metrics_;
  std::vector<TraceEvent> trace_;
  std::vector<DeliveryRecord> deliveries_;
  std::set<PacketKey> failed_packets_;
  std::uint64_t transmissions_ = 0;
  std::uint64_t data_broadcasts_ = 0;
  std::uint64_t next_token_ = 0;
};

}  // namespace lpor
