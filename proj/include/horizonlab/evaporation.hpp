// Quasi-static evaporation law: R^3 decays linearly in coordinate time,
//   R(tau) = (R0^3 - k tau)^(1/3), clamped to 0 at tau >= tau_evap = R0^3/k.
// The cube inside the root keeps the mass-loss law dM/dtau ~ -1/M^2 that the
// shrinking radius stands in for; R^3(tau) being exactly linear in tau is the
// defining property and is what the tests pin down. k = 0 is the eternal case.
#pragma once

namespace horizonlab {

struct EvaporationLaw {
  double R0 = 1.0;  // initial radius, >= 0
  double k = 0.0;   // decay constant, length^3/time, >= 0
};

/// R(tau). Requires tau >= 0; clamps to 0 at and past the evaporation time.
double radius_at(const EvaporationLaw& law, double tau);

/// tau_evap = R0^3/k. Throws EternalBlackHole when k = 0.
double evaporation_time(const EvaporationLaw& law);

/// k such that the law reaches zero exactly at the desired time:
/// k = R0^3 / tau_evap. Both arguments must be positive.
double calibrate_k(double R0, double desired_tau_evap);

/// |dR/dtau| = k / (3 R(tau)^2): the radiated-flux proxy. Strictly increasing
/// as the hole shrinks and divergent at the evaporation time, where it
/// throws. Zero for the eternal case.
double flux_proxy(const EvaporationLaw& law, double tau);

/// Signed dR/dtau (<= 0), defined as 0 at and past the evaporation time.
/// Used by the infall engine for the optional time-derivative metric terms.
double radius_rate(const EvaporationLaw& law, double tau);

}  // namespace horizonlab
