// Uniformly accelerated (Rindler) coordinates on the right wedge x > |ct|:
//   ct = chi sinh(a tau / c),  x = chi cosh(a tau / c),
// with line element ds^2 = (a chi / c)^2 dtau^2 - dchi^2 - dy^2 - dz^2.
// The coefficient of dtau^2 is (a chi / c)^2, which carries length^2 / time^2
// so that the tau term of ds^2 comes out in length^2 like the others.
#pragma once

#include "horizonlab/events.hpp"
#include "horizonlab/units.hpp"

namespace horizonlab {

/// Frame of a fiducial observer with constant proper acceleration a, held at
/// the fixed distance c^2/a from his event horizon.
struct RindlerFrame {
  double accel = 1.0;  // a > 0; geometric units: 1/length

  /// The fiducial observer's fixed chi, c^2/a.
  double fiducial_chi() const { return c_light * c_light / accel; }
};

/// Event in the accelerated chart. chi > 0 is the wedge interior; chi = 0 is
/// the horizon and not a chartable event.
struct RindlerEvent {
  double tau = 0.0;  // fiducial proper-time coordinate
  double chi = 0.0;  // distance from the horizon
  double y = 0.0;
  double z = 0.0;
};

/// Forward transform. Requires x > |ct| strictly; throws OutsideWedge
/// otherwise (the event is cloaked behind the horizon).
///
/// atanh(ct/x) is evaluated as 0.5 ln((x+ct)/(x-ct)). Both factors are exact
/// differences of the inputs, so the round trip stays tight even deep in the
/// wedge corner where 1 - ct/x would cancel catastrophically.
RindlerEvent minkowski_to_rindler(const MinkowskiEvent& e, const RindlerFrame& f);

/// Inverse transform; exact inverse of minkowski_to_rindler on its domain.
/// Throws DegenerateHorizon for chi <= 0.
MinkowskiEvent rindler_to_minkowski(const RindlerEvent& e, const RindlerFrame& f);

/// The fiducial worldline: the hyperbola x^2 - (ct)^2 = (c^2/a)^2,
/// parametrized by proper time.
MinkowskiEvent rob_worldline(const RindlerFrame& f, double tau);

/// Distance from the horizon of the free-falling observer who departs the
/// fiducial worldline at tau = 0 and coasts along x = c^2/a:
///   chi(tau) = (c^2/a) / cosh(a tau / c).
/// Positive for every finite tau; the horizon is approached only
/// asymptotically in the accelerated chart.
double alice_chi(const RindlerFrame& f, double tau);

/// Proper time on the free-falling clock from departure to the horizon
/// crossing: c/a.
double alice_crossing_proper_time(const RindlerFrame& f);

/// Slope dct/dx of the simultaneity plane through the origin at fiducial
/// time tau: tanh(a tau / c), in (-1, 1).
double simultaneity_slope(const RindlerFrame& f, double tau);

/// Line element for a coordinate displacement at e:
///   ds^2 = (a chi / c)^2 dtau^2 - dchi^2 - dy^2 - dz^2.
/// Null radial rays satisfy dchi = +-(a chi / c) dtau exactly.
double rindler_interval(const RindlerEvent& e, double dtau, double dchi,
                        double dy, double dz, const RindlerFrame& f);

}  // namespace horizonlab
