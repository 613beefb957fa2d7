#include "lpor/experiment.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <ostream>
#include <tuple>

#include "lpor/mobility.hpp"
#include "lpor/rng.hpp"

namespace lpor {
namespace {

constexpr std::uint64_t kTrafficStream = 0x74726166ULL;

std::string fmt_metric(double v) {
  if (!std::isfinite(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string fmt_shortest(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

template <typename F>
double or_nan(const MetricsAccumulator& m, F f) {
  try {
    return f(m);
  } catch (const MetricsError&) {
    return std::nan("");
  }
}

}  // namespace

std::vector<RunSpec> expand_runs(const ScenarioConfig& cfg) {
  std::vector<RunSpec> runs;
  for (Protocol p : cfg.protocols) {
    for (double s : cfg.speeds) {
      for (std::uint64_t seed : cfg.seeds) runs.push_back({p, s, seed});
    }
  }
  auto key = [](const RunSpec& r) { return std::tuple(static_cast<int>(r.protocol), r.speed, r.seed); };
  std::sort(runs.begin(), runs.end(), [&](const RunSpec& a, const RunSpec& b) { return key(a) < key(b); });
  runs.erase(std::unique(runs.begin(), runs.end(),
                         [&](const RunSpec& a, const RunSpec& b) { return key(a) == key(b); }),
             runs.end());
  return runs;
}

SimParams make_sim_params(const ScenarioConfig& cfg, Protocol protocol) {
  SimParams p;
  p.protocol = protocol;
  p.radio = cfg.radio;
  p.metric = cfg.metric;
  p.neighbor_mode = cfg.neighbor_mode;
  p.candidate_wait = cfg.candidate_wait;
  p.table_lifetime = cfg.table_lifetime;
  p.beacon_interval = cfg.beacon_interval;
  p.neighbor_timeout = cfg.neighbor_timeout;
  p.drop_prob = cfg.drop_prob;
  p.bandwidth_bps = cfg.bandwidth_bps;
  return p;
}

std::vector<Flow> make_flows(const ScenarioConfig& cfg, std::uint64_t seed) {
  Rng rng(seed, kTrafficStream);
  const double interval = 1.0 / cfg.rate;
  std::vector<Flow> flows;
  for (std::uint32_t i = 0; i < cfg.flows; ++i) {
    Flow f;
    f.source = static_cast<NodeId>(rng.below(cfg.nodes));
    do {
      f.destination = static_cast<NodeId>(rng.below(cfg.nodes));
    } while (f.destination == f.source);
    f.start = cfg.traffic_start + rng.uniform(0.0, interval);
    f.interval = interval;
    f.stop = cfg.sim_time;
    f.packet_bytes = cfg.packet_bytes;
    flows.push_back(f);
  }
  return flows;
}

RunResult run_single(const ScenarioConfig& cfg, const RunSpec& spec, RunOptions opts) {
  SimParams params = make_sim_params(cfg, spec.protocol);
  params.record_trace = opts.keep_trace;
  Simulator sim(params, init_positions(spec.seed, cfg.nodes, cfg.area, spec.speed, cfg.pause_time),
                spec.seed);
  for (const Flow& f : make_flows(cfg, spec.seed)) sim.add_flow(f);
  sim.run_until(cfg.sim_time);

  RunResult r;
  r.spec = spec;
  r.nodes = cfg.nodes;
  r.metrics = sim.metrics();
  r.data_broadcasts = sim.data_broadcasts();
  r.events = sim.events_executed();
  if (opts.keep_trace) r.trace = sim.trace();
  if (opts.keep_deliveries) r.deliveries = sim.deliveries();
  return r;
}

std::vector<RunResult> run_experiment(const ScenarioConfig& cfg, RunOptions opts, int threads) {
  validate_config(cfg);
  const std::vector<RunSpec> runs = expand_runs(cfg);
  std::vector<RunResult> results(runs.size());
  if (threads <= 0) threads = omp_get_max_threads();

  const auto n = static_cast<std::ptrdiff_t>(runs.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      results[i] = run_single(cfg, runs[i], opts);
    } catch (...) {
#pragma omp critical(lpor_run_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

std::vector<RunResult> run_experiment_serial(const ScenarioConfig& cfg, RunOptions opts) {
  validate_config(cfg);
  std::vector<RunResult> results;
  for (const RunSpec& spec : expand_runs(cfg)) results.push_back(run_single(cfg, spec, opts));
  return results;
}

std::string csv_header() { return "protocol,seed,speed,nodes,pdr,fth,ftp,path_len,delay_s"; }

std::string csv_row(const RunResult& r) {
  const MetricsAccumulator& m = r.metrics;
  std::string row;
  row += to_string(r.spec.protocol);
  row += ',' + std::to_string(r.spec.seed);
  row += ',' + fmt_shortest(r.spec.speed);
  row += ',' + std::to_string(r.nodes);
  row += ',' + fmt_metric(or_nan(m, pdr));
  row += ',' + fmt_metric(or_nan(m, fth));
  row += ',' + fmt_metric(or_nan(m, ftp));
  row += ',' + fmt_metric(or_nan(m, avg_path_length));
  row += ',' + fmt_metric(or_nan(m, avg_e2e_delay));
  return row;
}

void write_csv(std::ostream& os, const std::vector<RunResult>& results) {
  os << csv_header() << '\n';
  for (const RunResult& r : results) os << csv_row(r) << '\n';
}

}  // namespace lpor
