#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lpor {

struct MetricsError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Delivery counters for one run.
///
/// sent       packets originated at sources (Ns)
/// forwarded  data rebroadcasts by relays, candidates and triggers (Nf)
/// received   unique deliveries at destinations (Nr)
/// Control frames (beacons, VOID, DISRUPT, ACK) never touch these.
struct MetricsAccumulator {
  std::uint64_t sent = 0;
  std::uint64_t forwarded = 0;
  std::uint64_t received = 0;
  std::vector<std::uint32_t> hops;     // N_hi per delivered packet
  std::vector<double> latencies;       // receive time - origin time

  // Diagnostics outside the five reported metrics.
  std::uint64_t source_blocked = 0;    // originations that never left the source
  std::uint64_t routing_failures = 0;
  std::uint64_t duplicate_arrivals = 0;
  std::uint64_t takeovers = 0;
  std::uint64_t voids = 0;

  void record_delivery(std::uint32_t hop_count, double latency);
  std::uint64_t hop_sum() const noexcept;
};

/// Nr / Ns. Throws MetricsError when nothing was sent.
double pdr(const MetricsAccumulator& m);
/// (Ns + Nf) / sum of N_hi. Throws MetricsError when nothing was delivered.
double fth(const MetricsAccumulator& m);
/// (Ns + Nf) / Nr. Throws MetricsError when nothing was delivered.
double ftp(const MetricsAccumulator& m);
double avg_path_length(const MetricsAccumulator& m);
double avg_e2e_delay(const MetricsAccumulator& m);

}  // namespace lpor
