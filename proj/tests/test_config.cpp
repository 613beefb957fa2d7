#include <doctest.h>

#include <random>

#include "lpor/config.hpp"

using namespace lpor;

TEST_CASE("empty config yields the default scenario") {
  const ScenarioConfig cfg = parse_config("");
  CHECK(cfg.nodes == 160);
  CHECK(cfg.area.width == 800.0);
  CHECK(cfg.area.height == 800.0);
  CHECK(cfg.radio.range_m == 225.0);
  CHECK(cfg.radio.tx_power_watts == 0.28);
  CHECK(cfg.radio.tx_gain == 1.0);
  CHECK(cfg.radio.rx_gain == 1.0);
  CHECK(cfg.radio.system_loss == 1.0);
  CHECK(cfg.sim_time == 200.0);
  CHECK(cfg.speeds == std::vector<double>{10, 30, 50, 100});
  CHECK(cfg == ScenarioConfig{});
}

TEST_CASE("keys, comments and lists") {
  const ScenarioConfig cfg = parse_config(
      "# sweep\n"
      "speed = 50\n"
      "seed = 1, 2,3  # trailing comment\n"
      "protocol = por\n"
      "neighbor_mode = beacon\n"
      "drop_prob = 0.1\n"
      "link_metric = two_ray\n");
  CHECK(cfg.speeds == std::vector<double>{50});
  CHECK(cfg.seeds == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(cfg.protocols == std::vector<Protocol>{Protocol::kPor});
  CHECK(cfg.neighbor_mode == NeighborMode::kBeacon);
  CHECK(cfg.drop_prob == 0.1);
  CHECK(cfg.metric == LinkMetric::kTwoRay);
}

TEST_CASE("errors carry the line number") {
  auto line_of = [](const char* text) {
    try {
      parse_config(text);
    } catch (const ConfigError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("nodes = 0") == 1);
  CHECK(line_of("\n\nbogus = 3") == 3);
  CHECK(line_of("speed = 10\nrange = -5") == 2);
  CHECK(line_of("nodes 10") == 1);
  CHECK(line_of("protocol = aodv") == 1);
  CHECK(line_of("system_loss = 0.5") == 1);
  CHECK(line_of("drop_prob = 1") == 1);
  CHECK(line_of("sim_time = abc") == 1);
  CHECK(line_of("nodes =") == 1);
  CHECK_THROWS_AS(parse_config("nodes = 1"), ConfigError);
}

TEST_CASE("render/parse round trip on random configs") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.001, 1000.0);
  for (int i = 0; i < 200; ++i) {
    ScenarioConfig c;
    c.nodes = 2 + static_cast<std::uint32_t>(rng() % 500);
    c.area = {u(rng), u(rng)};
    c.speeds = {u(rng), 0.0, u(rng)};
    c.pause_time = u(rng);
    c.sim_time = u(rng);
    c.seeds = {rng(), rng() % 10};
    c.protocols = (i % 2) ? std::vector{Protocol::kPor} : std::vector{Protocol::kLpor, Protocol::kPor};
    c.radio.tx_power_watts = u(rng);
    c.radio.tx_gain = u(rng);
    c.radio.rx_gain = u(rng);
    c.radio.wavelength_m = u(rng);
    c.radio.system_loss = 1.0 + u(rng);
    c.radio.range_m = u(rng);
    c.radio.antenna_height_m = u(rng);
    c.metric = (i % 3) ? LinkMetric::kFriis : LinkMetric::kTwoRay;
    c.flows = 1 + static_cast<std::uint32_t>(rng() % 50);
    c.rate = u(rng);
    c.packet_bytes = 1 + static_cast<std::uint32_t>(rng() % 9000);
    c.traffic_start = u(rng);
    c.bandwidth_bps = u(rng) * 1e4;
    c.candidate_wait = u(rng) / 1e4;
    c.table_lifetime = u(rng);
    c.beacon_interval = u(rng);
    c.neighbor_timeout = u(rng);
    c.neighbor_mode = (i % 2) ? NeighborMode::kBeacon : NeighborMode::kOracle;
    c.drop_prob = u(rng) / 1001.0;
    CHECK(parse_config(render_config(c)) == c);
  }
}

TEST_CASE("every default parameter has a named key") {
  const std::string text = render_config(ScenarioConfig{});
  for (const char* key : {"nodes", "width", "height", "range", "speed", "sim_time", "tx_power",
                          "tx_gain", "rx_gain", "system_loss", "wavelength", "antenna_height"}) {
    CHECK(text.find(std::string(key) + " = ") != std::string::npos);
  }
}
