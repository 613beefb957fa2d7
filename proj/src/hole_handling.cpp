#include <algorithm>

#include "lpor/simulator.hpp"

namespace lpor {
namespace {

void merge_into(std::vector<NodeId>& set, std::span<const NodeId> more) {
  for (NodeId id : more) {
    if (id == kNoNode) continue;
    auto pos = std::lower_bound(set.begin(), set.end(), id);
    if (pos == set.end() || *pos != id) set.insert(pos, id);
  }
}

}  // namespace

// The node that found no forwarder warns the node it heard the packet from.
// A source with no forwarder is its own trigger.
void Simulator::detect_void(NodeId node, const std::shared_ptr<const Frame>& frame,
                            NodeId prev_hop) {
  NodeProtocolState& st = nodes_[node];
  const PacketKey key = frame->header.key();
  ++metrics_.voids;
  st.voided.insert(key);
  emit(TraceKind::kVoid, node, frame->header, kNoNode, prev_hop);

  if (prev_hop == kNoNode) {
    handle_void_warning(node, key, kNoNode, frame->voids);
    return;
  }

  Frame warning;
  warning.kind = FrameKind::kVoid;
  warning.header = frame->header;
  warning.target = prev_hop;
  warning.about = key;
  warning.void_node = node;
  warning.voids = frame->voids;
  merge_into(warning.voids, std::span<const NodeId>(&node, 1));
  send_control(node, std::move(warning));
}

void Simulator::handle_void_warning(NodeId trigger, PacketKey key, NodeId void_node,
                                    std::span<const NodeId> carried_voids) {
  NodeProtocolState& st = nodes_[trigger];
  auto held = st.retained.find(key);
  if (held == st.retained.end() || held->second.expiry <= now()) {
    record_failure(trigger, key);
    return;
  }
  const NodeProtocolState::Retained copy = held->second;

  std::vector<NodeId>& exclude = st.exclusions[key];
  merge_into(exclude, std::span<const NodeId>(&void_node, 1));
  merge_into(exclude, carried_voids);
  merge_into(exclude, copy.frame->voids);

  VoidRecord& rec = st.void_records[key];
  rec = VoidRecord{trigger, void_node, key, VoidState::kRerouting};

  Frame frame = *copy.frame;
  frame.voids = exclude;
  frame.rerouted = true;
  frame.trigger = trigger;
  if (route_and_send(trigger, std::move(frame), copy.prev_hop, exclude, SendReason::kReroute)) {
    return;
  }

  rec.state = VoidState::kDisrupted;
  emit(TraceKind::kDisrupt, trigger, copy.frame->header, kNoNode, copy.prev_hop);
  if (copy.prev_hop == kNoNode) {
    record_failure(trigger, key);
    return;
  }
  Frame disrupt;
  disrupt.kind = FrameKind::kDisrupt;
  disrupt.header = copy.frame->header;
  disrupt.target = copy.prev_hop;
  disrupt.about = key;
  disrupt.void_node = trigger;
  disrupt.voids = exclude;
  merge_into(disrupt.voids, std::span<const NodeId>(&trigger, 1));
  send_control(trigger, std::move(disrupt));
}

void Simulator::on_control(NodeId node, const Frame& frame) {
  if (frame.target != node) return;
  switch (frame.kind) {
    case FrameKind::kVoid:
      handle_void_warning(node, frame.about, frame.void_node, frame.voids);
      break;
    case FrameKind::kDisrupt:
      // Cascade: the trigger downstream gave up, so it is a void for us.
      handle_void_warning(node, frame.about, frame.sender, frame.voids);
      break;
    case FrameKind::kAck: {
      if (frame.ack_route.empty()) break;
      Frame next = frame;
      next.ack_route.pop_back();
      if (next.ack_route.empty()) {
        NodeProtocolState& st = nodes_[node];
        if (auto it = st.void_records.find(frame.about); it != st.void_records.end()) {
          it->second.state = VoidState::kAcked;
        }
        st.retained.erase(frame.about);
        emit(TraceKind::kAck, node, frame.header, kNoNode, frame.sender);
      } else {
        next.target = next.ack_route.back();
        send_control(node, std::move(next));
      }
      break;
    }
    default:
      break;
  }
}

// The acknowledgement retraces the hops taken since the trigger rerouted.
void Simulator::send_ack(NodeId dest, const Frame& delivered) {
  auto from_trigger = std::find_if(delivered.path.rbegin(), delivered.path.rend(),
                                   [&](const HopRecord& h) {
                                     return h.transmitter == delivered.trigger;
                                   });
  if (from_trigger == delivered.path.rend()) return;

  Frame ack;
  ack.kind = FrameKind::kAck;
  ack.header = delivered.header;
  ack.about = delivered.header.key();
  for (auto it = from_trigger.base() - 1; it != delivered.path.end(); ++it) {
    ack.ack_route.push_back(it->transmitter);
  }
  ack.target = ack.ack_route.back();
  emit(TraceKind::kAck, dest, delivered.header, kNoNode, delivered.trigger);
  send_control(dest, std::move(ack));
}

void Simulator::send_control(NodeId sender, Frame frame) {
  frame.sender = sender;
  frame.size_bytes = params_.control_bytes;
  broadcast(sender, std::make_shared<const Frame>(std::move(frame)));
}

void Simulator::record_failure(NodeId node, PacketKey key) {
  if (failed_packets_.insert(key).second) ++metrics_.routing_failures;
  PacketHeader h;
  h.source = key.source;
  h.seq = key.seq;
  if (auto it = nodes_[node].retained.find(key); it != nodes_[node].retained.end()) {
    h = it->second.frame->header;
  }
  emit(TraceKind::kDrop, node, h);
}

}  // namespace lpor
