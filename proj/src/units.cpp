#include "horizonlab/units.hpp"

#include <stdexcept>

namespace horizonlab {

double convert_units(double value, Dimension dim, UnitDirection dir,
                     const Constants& si) {
  double factor;  // SI -> geometric
  switch (dim) {
    case Dimension::Length: factor = 1.0; break;
    case Dimension::Time: factor = si.c; break;
    case Dimension::Mass: factor = si.G / (si.c * si.c); break;
    case Dimension::Acceleration: factor = 1.0 / (si.c * si.c); break;
    default:
      throw std::invalid_argument("convert_units: unknown dimension tag");
  }
  return dir == UnitDirection::SiToGeometric ? value * factor : value / factor;
}

}  // namespace horizonlab
