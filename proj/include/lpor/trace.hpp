#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lpor/packet.hpp"

namespace lpor {

enum class TraceKind { kSend, kRecv, kFwd, kDrop, kVoid, kDisrupt, kAck, kSuppress };

std::string_view to_string(TraceKind kind) noexcept;

/// One protocol action. Only time/kind/node/src/dst/seq reach the text
/// trace; the rest is kept for in-process checks.
struct TraceEvent {
  double time = 0.0;
  TraceKind kind = TraceKind::kSend;
  NodeId node = kNoNode;
  NodeId src = kNoNode;
  NodeId dst = kNoNode;
  std::uint32_t seq = 0;

  NodeId next_hop = kNoNode;   // SEND/FWD: chosen forwarder
  bool reroute = false;        // FWD issued by a trigger during hole handling
  bool takeover = false;       // FWD issued by a candidate after its timer
  NodeId peer = kNoNode;       // VOID/DISRUPT/ACK: addressee; SUPPRESS: overheard sender
};

/// `t=<sec> ev=<TAG> node=<id> src=<id> dst=<id> seq=<n>`
std::string format_trace_line(const TraceEvent& ev);
void write_trace(std::ostream& os, const std::vector<TraceEvent>& events);

}  // namespace lpor
