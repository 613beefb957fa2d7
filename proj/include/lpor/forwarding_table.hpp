#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lpor/packet.hpp"

namespace lpor {

struct ForwardingTableEntry {
  NodeId next_hop = kNoNode;
  std::vector<NodeId> candidates;
  double expiry = 0.0;
};

/// Per-flow (source, destination) -> next hop and candidates, each entry
/// readable only until its expiry time.
class ForwardingTable {
 public:
  using Key = std::pair<NodeId, NodeId>;

  void install(NodeId source, NodeId destination, ForwardingTableEntry entry);
  std::optional<ForwardingTableEntry> lookup(NodeId source, NodeId destination,
                                             double now) const;
  /// Drops every entry whose expiry is <= now.
  void purge(double now);
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::map<Key, ForwardingTableEntry> entries_;
};

}  // namespace lpor
