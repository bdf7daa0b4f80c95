#include "horizonlab/schwarzschild.hpp"

#include <cmath>
#include <stdexcept>

#include "horizonlab/errors.hpp"

namespace horizonlab {

double schwarzschild_radius(double mass) {
  if (!(mass >= 0.0)) {
    throw std::invalid_argument("schwarzschild_radius: negative mass");
  }
  return 2.0 * g_newton * mass / (c_light * c_light);
}

MetricComponents metric_components(double r, double R) {
  if (!(R >= 0.0) || !std::isfinite(r)) {
    throw std::invalid_argument("metric_components: bad arguments");
  }
  if (!(r > R)) {
    throw CoordinateSingularity("metric_components: r <= R, exterior chart only");
  }
  MetricComponents m;
  m.f = (r - R) / r;  // better conditioned than 1 - R/r near the horizon
  m.g_tt = m.f * c_light * c_light;
  m.g_rr = -1.0 / m.f;
  m.g_thth = -r * r;
  m.g_phph = -r * r;  // theta fixed at pi/2
  return m;
}

MetricComponents metric_components_offset(double delta_r, double R) {
  if (!(R >= 0.0) || !std::isfinite(delta_r)) {
    throw std::invalid_argument("metric_components_offset: bad arguments");
  }
  if (!(delta_r > 0.0)) {
    throw CoordinateSingularity("metric_components_offset: delta_r <= 0");
  }
  const double r = delta_r + R;
  MetricComponents m;
  m.f = delta_r / r;
  m.g_tt = m.f * c_light * c_light;
  m.g_rr = -r / delta_r;
  m.g_thth = -r * r;
  m.g_phph = -r * r;
  return m;
}

double near_horizon_chi(double delta_r, double R) {
  if (!(delta_r >= 0.0) || !(R >= 0.0)) {
    throw std::invalid_argument("near_horizon_chi: negative argument");
  }
  return 2.0 * std::sqrt(R * delta_r);
}

double proper_distance_exact(double r1, double r2, double R) {
  if (!(R >= 0.0) || !(r1 > R) || !(r2 >= r1)) {
    throw std::invalid_argument("proper_distance_exact: requires R < r1 <= r2");
  }
  const auto antiderivative = [R](double r) {
    const double s = std::sqrt(r * (r - R));
    return s + R * std::log(std::sqrt(r) + std::sqrt(r - R));
  };
  return antiderivative(r2) - antiderivative(r1);
}

MetricComponents near_horizon_metric(double chi, double R) {
  if (!(chi > 0.0)) {
    throw DegenerateHorizon("near_horizon_metric: chi <= 0");
  }
  // Written through effective_acceleration so the correspondence with the
  // accelerated-frame coefficient is bitwise, not just algebraic.
  const double tcoef = effective_acceleration(R) * chi / c_light;
  MetricComponents m;
  m.g_tt = tcoef * tcoef;
  m.g_rr = -1.0;
  m.g_thth = -1.0;
  m.g_phph = -1.0;
  m.f = m.g_tt / (c_light * c_light);
  return m;
}

double effective_acceleration(double R) {
  if (!(R > 0.0)) {
    throw std::invalid_argument("effective_acceleration: R must be positive");
  }
  return c_light * c_light / (2.0 * R);
}

}  // namespace horizonlab
