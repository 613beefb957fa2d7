#include "lpor/geom_radio.hpp"

#include <cmath>
#include <numbers>

namespace lpor {

void RadioParams::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(tx_power_watts) || !positive(tx_gain) || !positive(rx_gain) ||
      !positive(wavelength_m) || !positive(range_m) || !positive(antenna_height_m)) {
    throw std::invalid_argument("radio parameters must be finite and strictly positive");
  }
  if (!std::isfinite(system_loss) || system_loss < 1.0) {
    throw std::invalid_argument("system loss must be >= 1");
  }
}

double euclid_distance(Point2D a, Point2D b) noexcept {
  return std::hypot(a.x - b.x, a.y - b.y);
}

double friis_power(const RadioParams& rp, double d) {
  if (!(d > 0.0)) throw std::domain_error("friis_power: distance must be > 0");
  const double four_pi_d = 4.0 * std::numbers::pi * d;
  return rp.tx_power_watts * rp.tx_gain * rp.rx_gain * rp.wavelength_m * rp.wavelength_m /
         (four_pi_d * four_pi_d * rp.system_loss);
}

double two_ray_crossover(const RadioParams& rp) noexcept {
  return 4.0 * std::numbers::pi * rp.antenna_height_m * rp.antenna_height_m / rp.wavelength_m;
}

double two_ray_power(const RadioParams& rp, double d) {
  if (!(d > 0.0)) throw std::domain_error("two_ray_power: distance must be > 0");
  if (d < two_ray_crossover(rp)) return friis_power(rp, d);
  const double h2 = rp.antenna_height_m * rp.antenna_height_m;
  const double d2 = d * d;
  return rp.tx_power_watts * rp.tx_gain * rp.rx_gain * h2 * h2 / (d2 * d2 * rp.system_loss);
}

double received_power(LinkMetric metric, const RadioParams& rp, double d) {
  return metric == LinkMetric::kFriis ? friis_power(rp, d) : two_ray_power(rp, d);
}

bool in_range(Point2D a, Point2D b, double range_m) noexcept {
  return euclid_distance(a, b) <= range_m;
}

bool positive_progress(Point2D n, Point2D cur, Point2D dest) noexcept {
  return euclid_distance(n, dest) < euclid_distance(cur, dest);
}

}  // namespace lpor
