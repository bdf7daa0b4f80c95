// Closed-form from-rest radial fall in the eternal geometry: the cycloid
//   r = (r0/2)(1 + cos eta),  lambda = A (eta + sin eta),
//   A = sqrt(r0^3 / (4 c^2 R)),  eta in [0, pi],
// regular through the horizon in proper time. Serves as the independent
// oracle for the numerical integrator.

#include <cmath>
#include <limits>
#include <stdexcept>

#include "horizonlab/geodesic.hpp"
#include "horizonlab/units.hpp"

namespace horizonlab {

namespace {

void require_exterior_start(double r0, double R) {
  if (!(R > 0.0) || !(r0 > R)) {
    throw std::invalid_argument("cycloid: requires r0 > R > 0");
  }
}

double phase_scale(double r0, double R) {
  return std::sqrt(r0 * r0 * r0 / (4.0 * c_light * c_light * R));
}

}  // namespace

double cycloid_total_proper_time(double r0, double R) {
  require_exterior_start(r0, R);
  return 0.5 * M_PI * std::sqrt(r0 * r0 * r0 / (R * c_light * c_light));
}

double cycloid_eta_at_lambda(double r0, double R, double lambda) {
  require_exterior_start(r0, R);
  if (!(lambda >= 0.0)) {
    throw std::invalid_argument("cycloid_eta_at_lambda: negative lambda");
  }
  const double target = lambda / phase_scale(r0, R);
  if (target <= 0.0) return 0.0;
  if (target >= M_PI) return M_PI;
  double lo = 0.0, hi = M_PI;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (mid + std::sin(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double cycloid_radius_at(double r0, double R, double lambda) {
  const double eta = cycloid_eta_at_lambda(r0, R, lambda);
  return 0.5 * r0 * (1.0 + std::cos(eta));
}

double cycloid_lambda_at_radius(double r0, double R, double r) {
  require_exterior_start(r0, R);
  if (!(r > 0.0) || !(r <= r0)) {
    throw std::invalid_argument("cycloid_lambda_at_radius: requires 0 < r <= r0");
  }
  const double cos_eta = std::min(1.0, std::max(-1.0, 2.0 * r / r0 - 1.0));
  const double eta = std::acos(cos_eta);
  return phase_scale(r0, R) * (eta + std::sin(eta));
}

double cycloid_coordinate_time(double r0, double R, double eta) {
  require_exterior_start(r0, R);
  const double b = 2.0 * R / r0;  // in (0, 2)
  const double q = std::sqrt(R / (r0 - R));
  const double u = q * std::tan(0.5 * eta);
  if (!(u < 1.0)) {
    throw std::domain_error("cycloid_coordinate_time: at or inside the horizon");
  }
  const double E = std::sqrt(1.0 - R / r0);
  const double A = phase_scale(r0, R);
  return E * A *
         ((1.0 + b) * eta + std::sin(eta) +
          (2.0 * b * b / ((2.0 - b) * q)) * std::atanh(u));
}

Trajectory analytic_cycloid(double r0, double R, std::span<const double> lambda_grid) {
  require_exterior_start(r0, R);
  const double total = cycloid_total_proper_time(r0, R);
  const double E = std::sqrt(1.0 - R / r0);
  const double c2 = c_light * c_light;
  const double nan = std::numeric_limits<double>::quiet_NaN();

  Trajectory traj;
  traj.leg = Leg::ProperTime;
  traj.min_gap = std::numeric_limits<double>::infinity();
  double prev = -std::numeric_limits<double>::infinity();
  for (const double lambda : lambda_grid) {
    if (!(lambda >= 0.0) || !(lambda < total)) {
      throw std::invalid_argument("analytic_cycloid: grid must lie in [0, total fall time)");
    }
    if (!(lambda > prev)) {
      throw std::invalid_argument("analytic_cycloid: grid must be strictly increasing");
    }
    prev = lambda;

    const double eta = cycloid_eta_at_lambda(r0, R, lambda);
    const double r = 0.5 * r0 * (1.0 + std::cos(eta));
    TrajectorySample s;
    s.lambda = lambda;
    s.r = r;
    s.ur = eta == 0.0 ? 0.0 : -std::sqrt(c2 * R * (1.0 / r - 1.0 / r0));
    s.horizon_radius = R;
    s.lapse = (r - R) / r;
    s.flux = 0.0;
    if (r > R) {
      s.tau = cycloid_coordinate_time(r0, R, eta);
      s.u0 = E / s.lapse;
      s.energy = E;
      const double lead = s.lapse * c2 * s.u0 * s.u0;
      s.norm_residual = (lead - s.ur * s.ur / s.lapse - c2) / lead;
    } else {
      // Past the horizon the Schwarzschild time coordinate does not extend;
      // the cycloid itself stays regular.
      s.tau = nan;
      s.u0 = nan;
      s.energy = E;
      s.norm_residual = nan;
    }
    traj.samples.push_back(s);
    traj.min_gap = std::min(traj.min_gap, r - R);
  }

  traj.termination.type = Termination::RMinCutoff;
  if (!traj.samples.empty()) {
    const auto& last = traj.samples.back();
    traj.termination.lambda = last.lambda;
    traj.termination.tau = last.tau;
    traj.termination.r = last.r;
  }
  return traj;
}

}  // namespace horizonlab
