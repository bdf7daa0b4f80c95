// Radial infall onto a static or quasi-statically evaporating Schwarzschild
// exterior.
//
// Equations of motion for the metric ds^2 = f c^2 dtau^2 - dr^2/f (radial,
// f = 1 - R(tau)/r), with lambda the proper time of the falling clock,
// u0 = dtau/dlambda and ur = dr/dlambda:
//
//   du0/dlambda = -(f'/f) u0 ur
//   dur/dlambda = -(c^2 f f'/2) u0^2 + (f'/(2f)) ur^2        f' = dF/dr = R/r^2
//
// The shrinking radius enters only through the instantaneous R(tau); the
// df/dtau pieces of the connection are dropped by default and restored by
// IntegratorConfig::include_dtau_metric_terms for sensitivity studies.
//
// Eternal runs integrate in lambda. Evaporating runs integrate in tau with
// the state (lambda, r, v = dr/dtau, w = ln u0): close to the shrinking
// horizon u0 grows by dozens of e-folds, the remaining proper time contracts
// below the resolution of double lambda increments, and no lambda-stepped
// integrator can reach the evaporation time. The tau form carries the same
// curve with lambda demoted to a quadrature column; the proper-time freeze
// then shows up in the output as a stalling lambda column rather than as a
// step-size underflow.
#pragma once

#include <Eigen/Core>

#include <optional>
#include <span>
#include <vector>

#include "horizonlab/dopri5.hpp"
#include "horizonlab/evaporation.hpp"
#include "horizonlab/schwarzschild.hpp"

namespace horizonlab {

struct GeodesicState {
  double lambda = 0.0;  // proper time of the falling observer
  double tau = 0.0;     // Schwarzschild coordinate time
  double r = 0.0;       // areal radius
  double u0 = 0.0;      // dtau/dlambda
  double ur = 0.0;      // dr/dlambda
};

struct GeodesicDerivatives {
  double dtau, dr, du0, dur;  // d/dlambda
};

enum class Termination {
  HorizonTouch,
  EvaporationComplete,
  LambdaMax,
  TauMax,
  RMinCutoff,
};

const char* to_string(Termination t);

/// Independent variable of an integration run.
enum class Leg { ProperTime, CoordinateTime };

struct TrajectorySample {
  double lambda, tau, r, u0, ur;
  double horizon_radius;  // R(tau)
  double lapse;           // f = 1 - R(tau)/r
  double energy;          // f u0, conserved exactly only in the eternal case
  /// Deficit of the normalization identity f c^2 u0^2 - ur^2/f = c^2,
  /// relative to its leading term f c^2 u0^2 (the terms grow like 1/f toward
  /// the horizon, so the relative measure is the one that stays resolvable).
  /// Hard invariant for k = 0, monitored diagnostic for k > 0.
  double norm_residual;
  double flux;            // |dR/dtau|
};

struct EventRecord {
  Termination type = Termination::LambdaMax;
  double lambda = 0.0, tau = 0.0, r = 0.0;
  /// Touch located within max(event_tol, 1e-3 tau_evap) of the evaporation
  /// time: the touch and the disappearance are one event at this resolution.
  bool coincides_with_evaporation = false;
  double sign_residual = 0.0;  // |monitor| at the located event
};

struct OutputGrid {
  enum class Axis { ProperTime, CoordinateTime };
  Axis axis = Axis::ProperTime;
  std::vector<double> points;  // strictly increasing
};

struct IntegratorConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double h_init = 0.0;  // 0: automatic
  double h_min = 0.0;
  double h_max = 0.0;  // 0: unlimited
  /// Exterior cutoff as a fraction of R0; the chart degenerates at f = 0 and
  /// integration never evaluates inside r = R + epsilon_horizon * R0.
  double epsilon_horizon = 1e-6;
  double event_tol = 1e-12;  // bisection tolerance for event location
  double lambda_max = 1e7;
  double tau_max = 1e7;
  double r_min = 0.0;
  long max_steps = 4'000'000;
  bool include_dtau_metric_terms = false;
  /// An evaporation that completes while the trajectory's closest approach
  /// to the horizon was below this fraction of R0 is the touch event itself:
  /// the infaller was pinned at the gap floor when the hole vanished.
  double touch_proximity = 1e-2;
  OutputGrid grid;

  void validate() const;  // throws ConfigError naming the offending field
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  EventRecord termination;
  Leg leg = Leg::ProperTime;
  double min_gap = 0.0;  // min over samples of r - R(tau)
  long steps_accepted = 0;
  long steps_rejected = 0;
  long rhs_evals = 0;
};

/// Initial data at rest: ur = 0, u0 = 1/sqrt(f(r0)) from the 4-velocity
/// normalization. Throws CoordinateSingularity if r0 is not outside the
/// initial horizon.
GeodesicState initial_state_at_rest(double r0, const SpacetimeParams& params);

/// Initial data with a radial velocity: u0 = sqrt(f + ur0^2/c^2)/f.
GeodesicState initial_state(double r0, double ur0, const SpacetimeParams& params);

/// Right-hand side in the proper-time parametrization. Throws
/// CoordinateSingularity at or inside the horizon (f <= 0).
GeodesicDerivatives geodesic_rhs(const GeodesicState& state,
                                 const SpacetimeParams& params,
                                 bool include_dtau_metric_terms = false);

/// Decode a raw integration state into physical coordinates.
/// ProperTime leg: t = lambda, y = (tau, r, u0, ur).
/// CoordinateTime leg: t = tau, y = (lambda, r, v, w); u0 = exp(w) and
/// ur = v exp(w) may overflow to inf for extreme evaporation horizons, which
/// is reported as-is.
GeodesicState decode_state(Leg leg, double t, const Eigen::Vector4d& y);

struct LocatedEvent {
  Termination type;
  double t;  // in the leg's independent variable
  Eigen::Vector4d y;
  double sign_residual;
};

/// Scan one dense segment for the first zero of the armed sign monitors
/// (horizon proximity, exterior cutoff, radius floor, time budgets) and
/// locate it by bisection on the dense output. The located point is the last
/// bracket endpoint on the admissible side.
std::optional<LocatedEvent> detect_events(const DenseSegment<4>& seg, Leg leg,
                                          const SpacetimeParams& params,
                                          const IntegratorConfig& cfg);

/// Integrate radial infall until the first terminating event. Samples are
/// recorded at every accepted step and at the configured output grid points,
/// strictly ordered in the independent variable. Deterministic: identical
/// inputs give identical outputs. Throws StepUnderflow / MaxStepsExceeded on
/// numerical failure.
Trajectory integrate_radial(const GeodesicState& init,
                            const SpacetimeParams& params,
                            const IntegratorConfig& cfg);

// --- analytic from-rest infall for the eternal case (the oracle) ---

/// Total proper time from rest at r0 to r = 0: (pi/2) sqrt(r0^3/(R c^2)).
double cycloid_total_proper_time(double r0, double R);

/// Cycloid phase eta in [0, pi] with lambda = A (eta + sin eta),
/// A = sqrt(r0^3/(4 c^2 R)).
double cycloid_eta_at_lambda(double r0, double R, double lambda);

/// r(lambda) = (r0/2)(1 + cos eta); regular through the horizon.
double cycloid_radius_at(double r0, double R, double lambda);

/// lambda at a given radius r in (0, r0].
double cycloid_lambda_at_radius(double r0, double R, double r);

/// Exterior Schwarzschild coordinate time along the cycloid, diverging at
/// r -> R. Only defined for radii above the horizon.
double cycloid_coordinate_time(double r0, double R, double eta);

/// The analytic trajectory sampled on a proper-time grid. Coordinate time,
/// u0 and the norm residual are only defined on the exterior branch and are
/// NaN past the horizon crossing.
Trajectory analytic_cycloid(double r0, double R, std::span<const double> lambda_grid);

// --- asymptotic-approach extraction (the far observer's view) ---

struct CoordinateTimeProfile {
  std::vector<double> log_delta_r;  // ln((r - R)/R)
  std::vector<double> tau;
  double slope = 0.0;      // least-squares; tends to -R/c on the tail
  double intercept = 0.0;
};

/// Fit tau against ln(dr/R) over the near-horizon tail
/// dr/R in [tail_lo, tail_hi]. Throws std::runtime_error when the trajectory
/// does not reach the tail region.
CoordinateTimeProfile coordinate_time_profile(const Trajectory& traj,
                                              double tail_lo = 1e-5,
                                              double tail_hi = 1e-3);

}  // namespace horizonlab
