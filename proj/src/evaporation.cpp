#include "horizonlab/evaporation.hpp"

#include <cmath>
#include <stdexcept>

#include "horizonlab/errors.hpp"

namespace horizonlab {

namespace {

void require_valid(const EvaporationLaw& law) {
  if (!(law.R0 >= 0.0) || !(law.k >= 0.0)) {
    throw std::invalid_argument("EvaporationLaw: R0 and k must be non-negative");
  }
}

}  // namespace

double radius_at(const EvaporationLaw& law, double tau) {
  require_valid(law);
  if (!(tau >= 0.0)) {
    throw std::invalid_argument("radius_at: negative tau");
  }
  if (law.k == 0.0) return law.R0;  // exact, not cbrt(R0^3)
  const double cube = law.R0 * law.R0 * law.R0 - law.k * tau;
  return cube > 0.0 ? std::cbrt(cube) : 0.0;
}

double evaporation_time(const EvaporationLaw& law) {
  require_valid(law);
  if (law.k == 0.0) {
    throw EternalBlackHole("evaporation_time: k = 0 has no finite evaporation time");
  }
  return law.R0 * law.R0 * law.R0 / law.k;
}

double calibrate_k(double R0, double desired_tau_evap) {
  if (!(R0 > 0.0) || !(desired_tau_evap > 0.0)) {
    throw std::invalid_argument("calibrate_k: arguments must be positive");
  }
  return R0 * R0 * R0 / desired_tau_evap;
}

double flux_proxy(const EvaporationLaw& law, double tau) {
  require_valid(law);
  if (!(tau >= 0.0)) {
    throw std::invalid_argument("flux_proxy: negative tau");
  }
  if (law.k == 0.0) return 0.0;
  const double R = radius_at(law, tau);
  if (R <= 0.0) {
    throw std::domain_error("flux_proxy: at or after the evaporation time (pole)");
  }
  return law.k / (3.0 * R * R);
}

double radius_rate(const EvaporationLaw& law, double tau) {
  require_valid(law);
  if (law.k == 0.0) return 0.0;
  const double R = radius_at(law, tau);
  return R > 0.0 ? -law.k / (3.0 * R * R) : 0.0;
}

}  // namespace horizonlab
