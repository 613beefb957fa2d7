#include "lpor/config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

namespace lpor {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(trim(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

double parse_double(std::string_view v, std::string_view key, int line) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(out)) {
    throw ConfigError("invalid number for '" + std::string(key) + "': '" + std::string(v) + "'",
                      line);
  }
  return out;
}

std::uint64_t parse_uint(std::string_view v, std::string_view key, int line) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) {
    throw ConfigError("invalid integer for '" + std::string(key) + "': '" + std::string(v) + "'",
                      line);
  }
  return out;
}

double positive(std::string_view v, std::string_view key, int line) {
  const double d = parse_double(v, key, line);
  if (!(d > 0.0)) throw ConfigError("'" + std::string(key) + "' must be > 0", line);
  return d;
}

double non_negative(std::string_view v, std::string_view key, int line) {
  const double d = parse_double(v, key, line);
  if (d < 0.0) throw ConfigError("'" + std::string(key) + "' must be >= 0", line);
  return d;
}

std::uint32_t positive_count(std::string_view v, std::string_view key, int line) {
  const std::uint64_t n = parse_uint(v, key, line);
  if (n == 0 || n > 0xffffffffULL) {
    throw ConfigError("'" + std::string(key) + "' must be a positive count", line);
  }
  return static_cast<std::uint32_t>(n);
}

Protocol parse_protocol(std::string_view v, int line) {
  if (v == "lpor") return Protocol::kLpor;
  if (v == "por") return Protocol::kPor;
  throw ConfigError("unknown protocol '" + std::string(v) + "' (expected lpor or por)", line);
}

std::string fmt_double(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

template <typename T, typename F>
std::string join(const std::vector<T>& xs, F f) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += f(xs[i]);
  }
  return out;
}

using Setter = std::function<void(ScenarioConfig&, std::string_view, int)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"nodes", [](ScenarioConfig& c, std::string_view v, int l) { c.nodes = positive_count(v, "nodes", l); }},
      {"width", [](ScenarioConfig& c, std::string_view v, int l) { c.area.width = positive(v, "width", l); }},
      {"height", [](ScenarioConfig& c, std::string_view v, int l) { c.area.height = positive(v, "height", l); }},
      {"range", [](ScenarioConfig& c, std::string_view v, int l) { c.radio.range_m = positive(v, "range", l); }},
      {"speed",
       [](ScenarioConfig& c, std::string_view v, int l) {
         c.speeds.clear();
         for (auto item : split_list(v)) c.speeds.push_back(non_negative(item, "speed", l));
       }},
      {"pause_time", [](ScenarioConfig& c, std::string_view v, int l) { c.pause_time = non_negative(v, "pause_time", l); }},
      {"sim_time", [](ScenarioConfig& c, std::string_view v, int l) { c.sim_time = positive(v, "sim_time", l); }},
      {"seed",
       [](ScenarioConfig& c, std::string_view v, int l) {
         c.seeds.clear();
         for (auto item : split_list(v)) c.seeds.push_back(parse_uint(item, "seed", l));
       }},
      {"protocol",
       [](ScenarioConfig& c, std::string_view v, int l) {
         c.protocols.clear();
         for (auto item : split_list(v)) {
           if (item == "both") {
             c.protocols.push_back(Protocol::kLpor);
             c.protocols.push_back(Protocol::kPor);
           } else {
             c.protocols.push_back(parse_protocol(item, l));
           }
         }
       }},
      {"tx_power", [](ScenarioConfig& c, std::string_view v, int l) { c.radio.tx_power_watts = positive(v, "tx_power", l); }},
      {"tx_gain", [](ScenarioConfig& c, std::string_view v, int l) { c.radio.tx_gain = positive(v, "tx_gain", l); }},
      {"rx_gain", [](ScenarioConfig& c, std::string_view v, int l) { c.radio.rx_gain = positive(v, "rx_gain", l); }},
      {"wavelength", [](ScenarioConfig& c, std::string_view v, int l) { c.radio.wavelength_m = positive(v, "wavelength", l); }},
      {"system_loss",
       [](ScenarioConfig& c, std::string_view v, int l) {
         const double loss = parse_double(v, "system_loss", l);
         if (loss < 1.0) throw ConfigError("'system_loss' must be >= 1", l);
         c.radio.system_loss = loss;
       }},
      {"antenna_height", [](ScenarioConfig& c, std::string_view v, int l) { c.radio.antenna_height_m = positive(v, "antenna_height", l); }},
      {"link_metric",
       [](ScenarioConfig& c, std::string_view v, int l) {
         if (v == "friis") c.metric = LinkMetric::kFriis;
         else if (v == "two_ray") c.metric = LinkMetric::kTwoRay;
         else throw ConfigError("unknown link_metric '" + std::string(v) + "'", l);
       }},
      {"flows", [](ScenarioConfig& c, std::string_view v, int l) { c.flows = positive_count(v, "flows", l); }},
      {"rate", [](ScenarioConfig& c, std::string_view v, int l) { c.rate = positive(v, "rate", l); }},
      {"packet_bytes", [](ScenarioConfig& c, std::string_view v, int l) { c.packet_bytes = positive_count(v, "packet_bytes", l); }},
      {"traffic_start", [](ScenarioConfig& c, std::string_view v, int l) { c.traffic_start = non_negative(v, "traffic_start", l); }},
      {"bandwidth", [](ScenarioConfig& c, std::string_view v, int l) { c.bandwidth_bps = positive(v, "bandwidth", l); }},
      {"candidate_wait", [](ScenarioConfig& c, std::string_view v, int l) { c.candidate_wait = positive(v, "candidate_wait", l); }},
      {"table_lifetime", [](ScenarioConfig& c, std::string_view v, int l) { c.table_lifetime = positive(v, "table_lifetime", l); }},
      {"beacon_interval", [](ScenarioConfig& c, std::string_view v, int l) { c.beacon_interval = positive(v, "beacon_interval", l); }},
      {"neighbor_timeout", [](ScenarioConfig& c, std::string_view v, int l) { c.neighbor_timeout = positive(v, "neighbor_timeout", l); }},
      {"neighbor_mode",
       [](ScenarioConfig& c, std::string_view v, int l) {
         if (v == "oracle") c.neighbor_mode = NeighborMode::kOracle;
         else if (v == "beacon") c.neighbor_mode = NeighborMode::kBeacon;
         else throw ConfigError("unknown neighbor_mode '" + std::string(v) + "'", l);
       }},
      {"drop_prob",
       [](ScenarioConfig& c, std::string_view v, int l) {
         const double p = parse_double(v, "drop_prob", l);
         if (p < 0.0 || p >= 1.0) throw ConfigError("'drop_prob' must lie in [0, 1)", l);
         c.drop_prob = p;
       }},
  };
  return table;
}

}  // namespace

std::string_view to_string(Protocol p) noexcept { return p == Protocol::kLpor ? "lpor" : "por"; }
std::string_view to_string(NeighborMode m) noexcept {
  return m == NeighborMode::kOracle ? "oracle" : "beacon";
}
std::string_view to_string(LinkMetric m) noexcept {
  return m == LinkMetric::kFriis ? "friis" : "two_ray";
}

void set_config_value(ScenarioConfig& cfg, std::string_view key, std::string_view value,
                      int line) {
  const auto& table = setters();
  const auto it = table.find(key);
  if (it == table.end()) throw ConfigError("unknown key '" + std::string(key) + "'", line);
  if (value.empty()) throw ConfigError("missing value for '" + std::string(key) + "'", line);
  it->second(cfg, value, line);
}

void validate_config(const ScenarioConfig& cfg) {
  if (cfg.speeds.empty()) throw ConfigError("at least one speed is required");
  if (cfg.seeds.empty()) throw ConfigError("at least one seed is required");
  if (cfg.protocols.empty()) throw ConfigError("at least one protocol is required");
  if (cfg.nodes < 2) throw ConfigError("traffic needs at least two nodes");
  try {
    cfg.radio.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

ScenarioConfig parse_config(std::string_view text) {
  ScenarioConfig cfg;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected 'key = value'", line_no);
    const std::string_view key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError("missing key before '='", line_no);
    set_config_value(cfg, key, trim(line.substr(eq + 1)), line_no);
  }
  validate_config(cfg);
  return cfg;
}

std::string render_config(const ScenarioConfig& c) {
  std::ostringstream os;
  os << "nodes = " << c.nodes << '\n'
     << "width = " << fmt_double(c.area.width) << '\n'
     << "height = " << fmt_double(c.area.height) << '\n'
     << "range = " << fmt_double(c.radio.range_m) << '\n'
     << "speed = " << join(c.speeds, fmt_double) << '\n'
     << "pause_time = " << fmt_double(c.pause_time) << '\n'
     << "sim_time = " << fmt_double(c.sim_time) << '\n'
     << "seed = " << join(c.seeds, [](std::uint64_t s) { return std::to_string(s); }) << '\n'
     << "protocol = " << join(c.protocols, [](Protocol p) { return std::string(to_string(p)); }) << '\n'
     << "tx_power = " << fmt_double(c.radio.tx_power_watts) << '\n'
     << "tx_gain = " << fmt_double(c.radio.tx_gain) << '\n'
     << "rx_gain = " << fmt_double(c.radio.rx_gain) << '\n'
     << "wavelength = " << fmt_double(c.radio.wavelength_m) << '\n'
     << "system_loss = " << fmt_double(c.radio.system_loss) << '\n'
     << "antenna_height = " << fmt_double(c.radio.antenna_height_m) << '\n'
     << "link_metric = " << to_string(c.metric) << '\n'
     << "flows = " << c.flows << '\n'
     << "rate = " << fmt_double(c.rate) << '\n'
     << "packet_bytes = " << c.packet_bytes << '\n'
     << "traffic_start = " << fmt_double(c.traffic_start) << '\n'
     << "bandwidth = " << fmt_double(c.bandwidth_bps) << '\n'
     << "candidate_wait = " << fmt_double(c.candidate_wait) << '\n'
     << "table_lifetime = " << fmt_double(c.table_lifetime) << '\n'
     << "beacon_interval = " << fmt_double(c.beacon_interval) << '\n'
     << "neighbor_timeout = " << fmt_double(c.neighbor_timeout) << '\n'
     << "neighbor_mode = " << to_string(c.neighbor_mode) << '\n'
     << "drop_prob = " << fmt_double(c.drop_prob) << '\n';
  return os.str();
}

}  // namespace lpor
