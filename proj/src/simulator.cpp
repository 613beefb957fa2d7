#include "lpor/simulator.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpor {
namespace {

constexpr std::uint64_t kChannelStream = 0x6368616eULL;
constexpr std::uint64_t kBeaconStream = 0x6265636eULL;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

Simulator::Simulator(SimParams params, std::vector<MobilityState> nodes, std::uint64_t seed)
    : params_(params),
      mobility_(std::move(nodes)),
      nodes_(mobility_.size()),
      channel_rng_(seed, kChannelStream) {
  params_.radio.validate();
  if (mobility_.empty()) throw std::invalid_argument("simulator needs at least one node");
  if (!(params_.candidate_wait > 0.0) || !(params_.table_lifetime > 0.0) ||
      !(params_.beacon_interval > 0.0) || !(params_.neighbor_timeout > 0.0) ||
      !(params_.bandwidth_bps > 0.0) || !(params_.propagation_speed > 0.0)) {
    throw std::invalid_argument("simulator timing parameters must be positive");
  }
  if (params_.drop_prob < 0.0 || params_.drop_prob >= 1.0) {
    throw std::invalid_argument("drop probability must lie in [0, 1)");
  }

  if (params_.neighbor_mode == NeighborMode::kBeacon) {
    Rng jitter(seed, kBeaconStream);
    for (NodeId id = 0; id < mobility_.size(); ++id) {
      queue_.schedule(jitter.uniform(0.0, params_.beacon_interval), BeaconFire{id});
    }
  }
}

void Simulator::add_flow(const Flow& flow) {
  if (flow.source >= node_count() || flow.destination >= node_count() ||
      flow.source == flow.destination) {
    throw std::invalid_argument("flow endpoints must be distinct existing nodes");
  }
  if (!(flow.interval > 0.0)) throw std::invalid_argument("flow interval must be positive");
  flows_.push_back(flow);
  if (flow.start <= flow.stop) queue_.schedule(flow.start, TrafficFire{flows_.size() - 1});
}

void Simulator::schedule_packet(double t, NodeId source, NodeId destination,
                                std::uint32_t packet_bytes) {
  add_flow(Flow{source, destination, t, 1.0, t, packet_bytes});
}

void Simulator::set_failed(NodeId node, bool failed) { nodes_.at(node).failed = failed; }

void Simulator::run_until(double t_end) {
  if (t_end < 0.0) throw std::invalid_argument("run_until: t_end must be >= 0");
  queue_.run_until(t_end, [this](EventQueue<Payload>::Event& ev) { dispatch(ev); });
}

Point2D Simulator::position(NodeId node) { return position_at(mobility_.at(node), now()); }

std::vector<Neighbor> Simulator::neighbor_view(NodeId node) {
  std::vector<Neighbor> out;
  if (params_.neighbor_mode == NeighborMode::kOracle) {
    const Point2D self = position(node);
    for (NodeId id = 0; id < node_count(); ++id) {
      if (id == node) continue;
      const Point2D p = position(id);
      if (in_range(self, p, params_.radio.range_m)) out.push_back({id, p});
    }
    return out;
  }
  const double horizon = now() - params_.neighbor_timeout;
  for (const auto& [id, entry] : nodes_[node].neighbors) {
    if (entry.heard_at >= horizon) out.push_back({id, entry.pos});
  }
  return out;
}

void Simulator::dispatch(EventQueue<Payload>::Event& ev) {
  std::visit(Overloaded{
                 [this](PacketDelivery& d) {
                   if (nodes_[d.receiver].failed) return;
                   switch (d.frame->kind) {
                     case FrameKind::kData:
                       on_receive(d.receiver, d.frame);
                       break;
                     case FrameKind::kHello:
                       nodes_[d.receiver].neighbors[d.frame->sender] = {d.frame->position, now()};
                       break;
                     default:
                       on_control(d.receiver, *d.frame);
                       break;
                   }
                 },
                 [this](CandidateTimer& t) { on_candidate_timeout(t.node, t.key, t.token); },
                 [this](TrafficFire& f) {
                   const Flow& flow = flows_[f.flow];
                   originate(flow.source, flow.destination, flow.packet_bytes);
                   const double next = now() + flow.interval;
                   if (next <= flow.stop) queue_.schedule(next, TrafficFire{f.flow});
                 },
                 [this](BeaconFire& b) {
                   if (!nodes_[b.node].failed) {
                     auto hello = std::make_shared<Frame>();
                     hello->kind = FrameKind::kHello;
                     hello->sender = b.node;
                     hello->size_bytes = params_.hello_bytes;
                     hello->position = position(b.node);
                     broadcast(b.node, std::move(hello));
                   }
                   queue_.schedule(now() + params_.beacon_interval, BeaconFire{b.node});
                 },
                 [this](TableExpiry& e) {
                   NodeProtocolState& st = nodes_[e.node];
                   st.table.purge(now());
                   std::erase_if(st.retained,
                                 [this](const auto& kv) { return kv.second.expiry <= now(); });
                 },
             },
             ev.payload);
}

void Simulator::broadcast(NodeId sender, std::shared_ptr<const Frame> frame) {
  ++transmissions_;
  if (frame->kind == FrameKind::kData) ++data_broadcasts_;

  const Point2D origin = position(sender);
  const double tx_delay = static_cast<double>(frame->size_bytes) * 8.0 / params_.bandwidth_bps;
  for (NodeId id = 0; id < node_count(); ++id) {
    if (id == sender) continue;
    const double d = euclid_distance(origin, position(id));
    if (d > params_.radio.range_m) continue;
    if (params_.drop_prob > 0.0 && channel_rng_.uniform() < params_.drop_prob) continue;
    queue_.schedule(now() + tx_delay + d / params_.propagation_speed, PacketDelivery{id, frame});
  }
}

void Simulator::originate(NodeId source, NodeId destination, std::uint32_t packet_bytes) {
  if (destination >= node_count()) throw std::invalid_argument("unknown destination id");
  NodeProtocolState& st = nodes_[source];
  ++metrics_.sent;
  if (st.failed) return;

  Frame frame;
  frame.kind = FrameKind::kData;
  frame.size_bytes = packet_bytes;
  frame.header.seq = st.next_seq++;
  frame.header.source = source;
  frame.header.destination = destination;
  frame.header.send_time = now();
  frame.dest_pos = position(destination);  // location service lookup
  frame.origin_time = now();

  if (route_and_send(source, frame, kNoNode, {}, SendReason::kOriginate)) return;

  ++metrics_.source_blocked;
  auto held = std::make_shared<const Frame>(std::move(frame));
  retain(source, held, kNoNode);
  detect_void(source, held, kNoNode);
}

std::optional<NodeId> Simulator::pick_forwarder(Point2D cur, std::span<const Neighbor> neighbors,
                                                NodeId dest, Point2D dest_pos,
                                                std::span<const NodeId> exclude) const {
  if (params_.protocol == Protocol::kPor) {
    return por_select_forwarder(cur, neighbors, dest, dest_pos, exclude);
  }
  return select_best_forwarder(cur, neighbors, dest, dest_pos, params_.radio, exclude,
                               params_.metric);
}

bool Simulator::route_and_send(NodeId node, Frame frame, NodeId prev_hop,
                               std::span<const NodeId> exclude, SendReason reason) {
  const Point2D self = position(node);
  const std::vector<Neighbor> neighbors = neighbor_view(node);
  const NodeId dest = frame.header.destination;
  const std::optional<NodeId> chosen = pick_forwarder(self, neighbors, dest, frame.dest_pos, exclude);
  if (!chosen) return false;

  const auto fwd = std::find_if(neighbors.begin(), neighbors.end(),
                                [&](const Neighbor& n) { return n.id == *chosen; });
  const std::vector<NodeId> cands = select_candidates(
      self, *fwd, neighbors, dest, frame.dest_pos, params_.radio, exclude, params_.metric);
  auto dist_of = [&](NodeId id) {
    for (const Neighbor& n : neighbors) {
      if (n.id == id) return euclid_distance(n.pos, frame.dest_pos);
    }
    return 0.0;
  };

  NodeProtocolState& st = nodes_[node];
  const PacketKey key = frame.header.key();
  if (reason != SendReason::kReroute) retain(node, std::make_shared<const Frame>(frame), prev_hop);

  PacketHeader& h = frame.header;
  h.forwarder = *chosen;
  h.cn1 = cands.size() > 0 ? std::optional<NodeId>(cands[0]) : std::nullopt;
  h.cn2 = cands.size() > 1 ? std::optional<NodeId>(cands[1]) : std::nullopt;
  h.send_time = now();

  HopRecord hop;
  hop.transmitter = node;
  hop.self_dist = euclid_distance(self, frame.dest_pos);
  hop.forwarder = *chosen;
  hop.forwarder_dist = dist_of(*chosen);
  hop.cn1 = h.cn1;
  hop.cn2 = h.cn2;
  if (h.cn1) hop.cn1_dist = dist_of(*h.cn1);
  if (h.cn2) hop.cn2_dist = dist_of(*h.cn2);
  frame.path.push_back(hop);

  frame.sender = node;
  ++frame.hop_count;
  st.seen.insert(key);
  st.table.install(h.source, h.destination,
                   ForwardingTableEntry{*chosen, cands, now() + params_.table_lifetime});
  queue_.schedule(now() + params_.table_lifetime, TableExpiry{node});

  if (reason == SendReason::kOriginate) {
    emit(TraceKind::kSend, node, h, *chosen);
  } else {
    ++metrics_.forwarded;
    emit(TraceKind::kFwd, node, h, *chosen, kNoNode, reason == SendReason::kReroute,
         reason == SendReason::kTakeover);
  }
  broadcast(node, std::make_shared<const Frame>(std::move(frame)));
  return true;
}

void Simulator::on_receive(NodeId node, const std::shared_ptr<const Frame>& frame) {
  NodeProtocolState& st = nodes_[node];
  const PacketHeader& h = frame->header;
  const PacketKey key = h.key();

  // Hearing any transmission of a packet we hold as a candidate means some
  // higher-priority node already forwarded it.
  if (auto it = st.pending.find(key); it != st.pending.end()) {
    st.pending.erase(it);
    emit(TraceKind::kSuppress, node, h, kNoNode, frame->sender);
  }

  const bool is_dest = node == h.destination;
  const bool is_forwarder = node == h.forwarder;
  const int rank = h.cn1 == node ? 1 : h.cn2 == node ? 2 : 0;

  if (st.seen.contains(key)) {
    if (is_dest) ++metrics_.duplicate_arrivals;
    if (is_dest || is_forwarder || rank > 0) emit(TraceKind::kDrop, node, h, kNoNode, frame->sender);
    return;
  }

  if (is_dest) {
    st.seen.insert(key);
    metrics_.record_delivery(frame->hop_count, now() - frame->origin_time);
    deliveries_.push_back(DeliveryRecord{key, node, now(), frame->hop_count, frame->rerouted,
                                         frame->path});
    emit(TraceKind::kRecv, node, h, kNoNode, frame->sender);
    if (frame->rerouted && frame->trigger != kNoNode) send_ack(node, *frame);
    return;
  }

  if (is_forwarder) {
    // Voids recorded during earlier hole handling stay excluded downstream,
    // otherwise a detour can lead straight back into the hole.
    if (!route_and_send(node, *frame, frame->sender, frame->voids, SendReason::kForward)) {
      st.seen.insert(key);
      retain(node, frame, frame->sender);
      detect_void(node, frame, frame->sender);
    }
    return;
  }

  if (rank > 0) {
    const double fire = std::max(now(), h.send_time + params_.candidate_wait * rank);
    const std::uint64_t token = next_token_++;
    st.pending[key] = NodeProtocolState::PendingCandidate{frame, rank, fire, token};
    queue_.schedule(fire, CandidateTimer{node, key, token});
  }
}

void Simulator::on_candidate_timeout(NodeId node, PacketKey key, std::uint64_t token) {
  NodeProtocolState& st = nodes_[node];
  auto it = st.pending.find(key);
  if (it == st.pending.end() || it->second.token != token) return;
  std::shared_ptr<const Frame> frame = std::move(it->second.frame);
  st.pending.erase(it);
  if (st.failed || st.seen.contains(key)) return;

  ++metrics_.takeovers;
  if (!route_and_send(node, *frame, frame->sender, frame->voids, SendReason::kTakeover)) {
    st.seen.insert(key);
    retain(node, frame, frame->sender);
    detect_void(node, frame, frame->sender);
  }
}

void Simulator::retain(NodeId node, const std::shared_ptr<const Frame>& frame, NodeId prev_hop) {
  const double expiry = now() + params_.table_lifetime;
  auto [it, inserted] =
      nodes_[node].retained.try_emplace(frame->header.key(), NodeProtocolState::Retained{});
  if (inserted || it->second.expiry <= now()) {
    it->second = NodeProtocolState::Retained{frame, prev_hop, expiry};
    queue_.schedule(expiry, TableExpiry{node});
  }
}

void Simulator::emit(TraceKind kind, NodeId node, const PacketHeader& h, NodeId next_hop,
                     NodeId peer, bool reroute, bool takeover) {
  if (!params_.record_trace) return;
  trace_.push_back(TraceEvent{now(), kind, node, h.source, h.destination, h.seq, next_hop,
                              reroute, takeover, peer});
}

}  // namespace lpor
