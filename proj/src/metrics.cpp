#include "lpor/metrics.hpp"

#include <numeric>

namespace lpor {

void MetricsAccumulator::record_delivery(std::uint32_t hop_count, double latency) {
  if (hop_count == 0) throw MetricsError("delivered packet must have at least one hop");
  ++received;
  hops.push_back(hop_count);
  latencies.push_back(latency);
}

std::uint64_t MetricsAccumulator::hop_sum() const noexcept {
  return std::accumulate(hops.begin(), hops.end(), std::uint64_t{0});
}

double pdr(const MetricsAccumulator& m) {
  if (m.sent == 0) throw MetricsError("pdr undefined: no packets sent");
  return static_cast<double>(m.received) / static_cast<double>(m.sent);
}

double fth(const MetricsAccumulator& m) {
  const std::uint64_t hop_total = m.hop_sum();
  if (hop_total == 0) throw MetricsError("fth undefined: no packets delivered");
  return static_cast<double>(m.sent + m.forwarded) / static_cast<double>(hop_total);
}

double ftp(const MetricsAccumulator& m) {
  if (m.received == 0) throw MetricsError("ftp undefined: no packets delivered");
  return static_cast<double>(m.sent + m.forwarded) / static_cast<double>(m.received);
}

double avg_path_length(const MetricsAccumulator& m) {
  if (m.hops.empty()) throw MetricsError("path length undefined: no packets delivered");
  return static_cast<double>(m.hop_sum()) / static_cast<double>(m.hops.size());
}

double avg_e2e_delay(const MetricsAccumulator& m) {
  if (m.latencies.empty()) throw MetricsError("delay undefined: no packets delivered");
  return std::accumulate(m.latencies.begin(), m.latencies.end(), 0.0) /
         static_cast<double>(m.latencies.size());
}

}  // namespace lpor
