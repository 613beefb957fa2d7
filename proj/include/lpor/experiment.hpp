#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lpor/config.hpp"
#include "lpor/metrics.hpp"
#include "lpor/simulator.hpp"
#include "lpor/trace.hpp"

namespace lpor {

struct RunSpec {
  Protocol protocol = Protocol::kLpor;
  double speed = 0.0;
  std::uint64_t seed = 0;
};

struct RunOptions {
  bool keep_trace = false;
  bool keep_deliveries = false;
};

struct RunResult {
  RunSpec spec;
  std::uint32_t nodes = 0;
  MetricsAccumulator metrics;
  std::uint64_t data_broadcasts = 0;
  std::uint64_t events = 0;
  std::vector<TraceEvent> trace;
  std::vector<DeliveryRecord> deliveries;
};

/// Every (protocol, speed, seed) combination, ordered by protocol (lpor
/// first), then speed, then seed. Duplicates are removed.
std::vector<RunSpec> expand_runs(const ScenarioConfig& cfg);

SimParams make_sim_params(const ScenarioConfig& cfg, Protocol protocol);

/// Constant-rate flows between distinct random node pairs. Depends only on
/// the seed, so both protocols see the same traffic.
std::vector<Flow> make_flows(const ScenarioConfig& cfg, std::uint64_t seed);

RunResult run_single(const ScenarioConfig& cfg, const RunSpec& spec, RunOptions opts = {});

/// Runs are independent and executed in parallel with OpenMP; results come
/// back in expand_runs() order regardless of thread count.
std::vector<RunResult> run_experiment(const ScenarioConfig& cfg, RunOptions opts = {},
                                      int threads = 0);

/// Reference sweep, one run after another. Must match run_experiment().
std::vector<RunResult> run_experiment_serial(const ScenarioConfig& cfg, RunOptions opts = {});

std::string csv_header();
std::string csv_row(const RunResult& r);
void write_csv(std::ostream& os, const std::vector<RunResult>& results);

}  // namespace lpor
