#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lpor/geom_radio.hpp"
#include "lpor/mobility.hpp"
#include "lpor/simulator.hpp"

namespace lpor {

struct ConfigError : std::runtime_error {
  ConfigError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line(line) {}
  int line;
};

/// One experiment: topology, radio, traffic and protocol knobs. Defaults
/// reproduce the 160-node, 800 m x 800 m, 225 m range, 200 s setup.
struct ScenarioConfig {
  std::uint32_t nodes = 160;
  Area area{800.0, 800.0};
  std::vector<double> speeds{10.0, 30.0, 50.0, 100.0};
  double pause_time = 0.0;
  double sim_time = 200.0;
  std::vector<std::uint64_t> seeds{1};
  std::vector<Protocol> protocols{Protocol::kLpor, Protocol::kPor};
  RadioParams radio;
  LinkMetric metric = LinkMetric::kFriis;

  std::uint32_t flows = 5;
  double rate = 4.0;  // packets per second per flow
  std::uint32_t packet_bytes = 512;
  double traffic_start = 1.0;
  double bandwidth_bps = 2.0e6;

  double candidate_wait = 0.010;
  double table_lifetime = 2.0;
  double beacon_interval = 1.0;
  double neighbor_timeout = 2.0;
  NeighborMode neighbor_mode = NeighborMode::kOracle;
  double drop_prob = 0.0;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Parses `key = value` lines; `#` starts a comment; lists are
/// comma-separated. Missing keys keep their defaults. Throws ConfigError
/// (with the 1-based line number) on unknown keys, malformed values or
/// values outside their domain.
ScenarioConfig parse_config(std::string_view text);

/// Emits every key, in a form parse_config reads back to an equal config.
std::string render_config(const ScenarioConfig& cfg);

/// Applies a single `key`/`value` pair; used by the parser and CLI overrides.
void set_config_value(ScenarioConfig& cfg, std::string_view key, std::string_view value,
                      int line = 0);

/// Throws ConfigError when a cross-field constraint is violated.
void validate_config(const ScenarioConfig& cfg);

std::string_view to_string(Protocol p) noexcept;
std::string_view to_string(NeighborMode m) noexcept;
std::string_view to_string(LinkMetric m) noexcept;

}  // namespace lpor
