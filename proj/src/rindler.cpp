#include "horizonlab/rindler.hpp"

#include <cmath>
#include <stdexcept>

#include "horizonlab/errors.hpp"

namespace horizonlab {

namespace {

void require_valid(const RindlerFrame& f) {
  if (!(f.accel > 0.0) || !std::isfinite(f.accel)) {
    throw std::invalid_argument("RindlerFrame: acceleration must be positive and finite");
  }
}

}  // namespace

RindlerEvent minkowski_to_rindler(const MinkowskiEvent& e, const RindlerFrame& f) {
  require_valid(f);
  if (!std::isfinite(e.ct) || !std::isfinite(e.x)) {
    throw std::invalid_argument("minkowski_to_rindler: non-finite component");
  }
  const double plus = e.x + e.ct;
  const double minus = e.x - e.ct;
  if (!(plus > 0.0) || !(minus > 0.0)) {
    throw OutsideWedge("minkowski_to_rindler: event on or beyond the horizon (x <= |ct|)");
  }
  RindlerEvent out;
  out.tau = (c_light / f.accel) * 0.5 * std::log(plus / minus);
  out.chi = std::sqrt(plus * minus);
  out.y = e.y;
  out.z = e.z;
  return out;
}

MinkowskiEvent rindler_to_minkowski(const RindlerEvent& e, const RindlerFrame& f) {
  require_valid(f);
  if (!std::isfinite(e.tau) || !std::isfinite(e.chi)) {
    throw std::invalid_argument("rindler_to_minkowski: non-finite component");
  }
  if (!(e.chi > 0.0)) {
    throw DegenerateHorizon("rindler_to_minkowski: chi <= 0 maps onto the horizon rays");
  }
  const double phase = f.accel * e.tau / c_light;
  MinkowskiEvent out;
  out.ct = e.chi * std::sinh(phase);
  out.x = e.chi * std::cosh(phase);
  out.y = e.y;
  out.z = e.z;
  return out;
}

MinkowskiEvent rob_worldline(const RindlerFrame& f, double tau) {
  return rindler_to_minkowski(RindlerEvent{tau, f.fiducial_chi(), 0.0, 0.0}, f);
}

double alice_chi(const RindlerFrame& f, double tau) {
  require_valid(f);
  return f.fiducial_chi() / std::cosh(f.accel * tau / c_light);
}

double alice_crossing_proper_time(const RindlerFrame& f) {
  require_valid(f);
  return c_light / f.accel;
}

double simultaneity_slope(const RindlerFrame& f, double tau) {
  require_valid(f);
  return std::tanh(f.accel * tau / c_light);
}

double rindler_interval(const RindlerEvent& e, double dtau, double dchi,
                        double dy, double dz, const RindlerFrame& f) {
  require_valid(f);
  if (!(e.chi > 0.0)) {
    throw DegenerateHorizon("rindler_interval: chi <= 0");
  }
  const double tterm = f.accel * e.chi * dtau / c_light;
  return tterm * tterm - dchi * dchi - dy * dy - dz * dz;
}

}  // namespace horizonlab
