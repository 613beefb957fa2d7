#include "lpor/forwarding_table.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpor {

void ForwardingTable::install(NodeId source, NodeId destination, ForwardingTableEntry entry) {
  if (std::find(entry.candidates.begin(), entry.candidates.end(), entry.next_hop) !=
      entry.candidates.end()) {
    throw std::invalid_argument("forwarding table: candidates must exclude the next hop");
  }
  entries_[{source, destination}] = std::move(entry);
}

std::optional<ForwardingTableEntry> ForwardingTable::lookup(NodeId source, NodeId destination,
                                                            double now) const {
  auto it = entries_.find({source, destination});
  if (it == entries_.end() || it->second.expiry <= now) return std::nullopt;
  return it->second;
}

void ForwardingTable::purge(double now) {
  std::erase_if(entries_, [now](const auto& kv) { return kv.second.expiry <= now; });
}

}  // namespace lpor
