// Unit conventions. Everything internal runs in geometric units (c = G = 1,
// all quantities expressed as lengths); SI values enter only at the I/O
// boundary through convert_units.
#pragma once

namespace horizonlab {

/// SI values of the constants that appear in the metric formulas.
struct Constants {
  double c;  // speed of light, m/s
  double G;  // gravitational constant, m^3 / (kg s^2)
};

constexpr Constants si_constants() { return Constants{299792458.0, 6.67430e-11}; }

// The geometric-unit values of the same symbols. Formulas below are written
// with the factors of c the metric carries; keeping the symbol instead of
// folding 1.0 into each expression avoids magnitude-mixing mistakes when a
// formula is compared against its printed form.
inline constexpr double c_light = 1.0;
inline constexpr double g_newton = 1.0;

enum class Dimension { Length, Time, Mass, Acceleration };
enum class UnitDirection { SiToGeometric, GeometricToSi };

/// Multiply by the exact factor built from Constants. Geometric lengths are
/// meters, so Length is the identity; Time maps seconds to meters (factor c),
/// Mass maps kilograms to meters (factor G/c^2), Acceleration maps m/s^2 to
/// 1/m (factor 1/c^2). Round trips are exact up to two rounding errors.
double convert_units(double value, Dimension dim, UnitDirection dir,
                     const Constants& si = si_constants());

}  // namespace horizonlab
