// Schwarzschild exterior geometry at theta = pi/2 and its near-horizon
// Rindler form. Only the exterior chart r > R is ever evaluated here.
#pragma once

#include "horizonlab/units.hpp"

namespace horizonlab {

/// Static or quasi-statically shrinking Schwarzschild spacetime.
struct SpacetimeParams {
  double R0 = 1.0;  // initial Schwarzschild radius, > 0
  double k = 0.0;   // evaporation constant, length^3/time; 0 means eternal

  bool eternal() const { return k == 0.0; }
  /// Mass from R = 2GM/c^2.
  double mass() const { return R0 * c_light * c_light / (2.0 * g_newton); }
};

/// Diagonal metric components along a radial line at theta = pi/2.
/// g_tt multiplies dtau^2 (and carries the factor c^2); g_tt * |g_rr| = c^2
/// identically on the exterior.
struct MetricComponents {
  double g_tt;
  double g_rr;
  double g_thth;
  double g_phph;
  double f;  // lapse factor 1 - R/r
};

/// R = 2GM/c^2. Throws std::invalid_argument for negative mass.
double schwarzschild_radius(double mass);

/// Exterior components at areal radius r. Throws CoordinateSingularity for
/// r <= R.
MetricComponents metric_components(double r, double R);

/// The same exact metric in the horizon-offset variable delta_r = r - R:
/// g_tt = c^2 delta_r/(delta_r + R), g_rr = -(delta_r + R)/delta_r. Close to
/// the horizon this form is fully precise where the r-form has already lost
/// the offset to rounding in r itself. Requires delta_r > 0.
MetricComponents metric_components_offset(double delta_r, double R);

/// Proper radial distance from the horizon for small excursions delta_r:
/// chi = 2 sqrt(R delta_r).
double near_horizon_chi(double delta_r, double R);

/// Exact proper radial distance between exterior radii, the closed-form
/// antiderivative of sqrt(r/(r-R)):
///   F(r) = sqrt(r (r-R)) + R ln(sqrt(r) + sqrt(r-R)),  d = F(r2) - F(r1).
/// Serves as the oracle against which the near-horizon chi approximation is
/// tested. Requires R < r1 <= r2.
double proper_distance_exact(double r1, double r2, double R);

/// Near-horizon metric in the proper-distance coordinate chi:
///   g_tautau = (chi c / 2R)^2, g_chichi = -1,
/// the same closed form as the accelerated-frame coefficient with
/// a = c^2/2R. Transverse coordinates are proper lengths here, so their
/// coefficients are -1. Throws DegenerateHorizon for chi <= 0.
MetricComponents near_horizon_metric(double chi, double R);

/// Acceleration of the equivalent uniformly accelerated frame: a = c^2/2R.
double effective_acceleration(double R);

}  // namespace horizonlab
