#include "lpor/trace.hpp"

#include <cstdio>
#include <ostream>

namespace lpor {

std::string_view to_string(TraceKind kind) noexcept {
  switch (kind) {
    case TraceKind::kSend: return "SEND";
    case TraceKind::kRecv: return "RECV";
    case TraceKind::kFwd: return "FWD";
    case TraceKind::kDrop: return "DROP";
    case TraceKind::kVoid: return "VOID";
    case TraceKind::kDisrupt: return "DISRUPT";
    case TraceKind::kAck: return "ACK";
    case TraceKind::kSuppress: return "SUPPRESS";
  }
  return "?";
}

std::string format_trace_line(const TraceEvent& ev) {
  char buf[160];
  const std::string_view tag = to_string(ev.kind);
  std::snprintf(buf, sizeof buf, "t=%.9f ev=%.*s node=%u src=%u dst=%u seq=%u", ev.time,
                static_cast<int>(tag.size()), tag.data(), ev.node, ev.src, ev.dst, ev.seq);
  return buf;
}

void write_trace(std::ostream& os, const std::vector<TraceEvent>& events) {
  for (const TraceEvent& ev : events) os << format_trace_line(ev) << '\n';
}

}  // namespace lpor
