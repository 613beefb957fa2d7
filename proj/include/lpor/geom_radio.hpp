#pragma once

#include <stdexcept>

namespace lpor {

struct Point2D {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2D&, const Point2D&) = default;
};

/// Transmitter/receiver parameters shared by every node in a run.
///
/// Gains and system loss are linear (not dB). Defaults are the simulation
/// setup used throughout: 0.28 W, unit gains, L = 1, a 914 MHz carrier
/// (lambda = 0.328 m), 1.5 m antennas and a 225 m transmission range.
struct RadioParams {
  double tx_power_watts = 0.28;
  double tx_gain = 1.0;
  double rx_gain = 1.0;
  double wavelength_m = 0.328;
  double system_loss = 1.0;
  double range_m = 225.0;
  double antenna_height_m = 1.5;

  /// Throws std::invalid_argument when any field is out of its domain.
  void validate() const;

  friend bool operator==(const RadioParams&, const RadioParams&) = default;
};

/// Which received-power model ranks neighbours.
enum class LinkMetric { kFriis, kTwoRay };

double euclid_distance(Point2D a, Point2D b) noexcept;

/// Free-space received power with system loss:
///   Pt * Gt * Gr * lambda^2 / ((4 pi d)^2 * L)
/// Throws std::domain_error for d <= 0.
double friis_power(const RadioParams& rp, double d);

/// Distance beyond which the two-ray ground model departs from free space.
double two_ray_crossover(const RadioParams& rp) noexcept;

/// Two-ray ground reflection, Pt*Gt*Gr*ht^2*hr^2 / (d^4 * L), falling back to
/// friis_power below the crossover distance. Throws std::domain_error for d <= 0.
double two_ray_power(const RadioParams& rp, double d);

double received_power(LinkMetric metric, const RadioParams& rp, double d);

/// Unit-disk reachability; the boundary d == range counts as in range.
bool in_range(Point2D a, Point2D b, double range_m) noexcept;

/// True iff n is strictly closer to dest than cur is.
bool positive_progress(Point2D n, Point2D cur, Point2D dest) noexcept;

}  // namespace lpor
