#include "horizonlab/events.hpp"

#include <cmath>
#include <stdexcept>

namespace horizonlab {

const char* to_string(CausalClass c) {
  switch (c) {
    case CausalClass::TimelikeFuture: return "timelike-future";
    case CausalClass::TimelikePast: return "timelike-past";
    case CausalClass::Lightlike: return "lightlike";
    case CausalClass::Spacelike: return "spacelike";
    case CausalClass::Zero: return "zero";
  }
  return "unknown";
}

namespace {

bool finite(const MinkowskiEvent& e) {
  return std::isfinite(e.ct) && std::isfinite(e.x) && std::isfinite(e.y) &&
         std::isfinite(e.z);
}

}  // namespace

Interval interval_minkowski(const MinkowskiEvent& a, const MinkowskiEvent& b) {
  if (!finite(a) || !finite(b)) {
    throw std::invalid_argument("interval_minkowski: non-finite event component");
  }
  const double dct = b.ct - a.ct;
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double dz = b.z - a.z;

  Interval out;
  out.ds2 = dct * dct - dx * dx - dy * dy - dz * dz;
  const bool same = dct == 0.0 && dx == 0.0 && dy == 0.0 && dz == 0.0;
  if (same) {
    out.cls = CausalClass::Zero;
  } else if (out.ds2 == 0.0) {
    out.cls = CausalClass::Lightlike;
  } else if (out.ds2 > 0.0) {
    out.cls = dct > 0.0 ? CausalClass::TimelikeFuture : CausalClass::TimelikePast;
  } else {
    out.cls = CausalClass::Spacelike;
  }
  return out;
}

bool causal_reachable(const MinkowskiEvent& from, const MinkowskiEvent& to) {
  const Interval iv = interval_minkowski(from, to);
  if (iv.cls == CausalClass::TimelikeFuture) return true;
  return iv.cls == CausalClass::Lightlike && to.ct - from.ct > 0.0;
}

}  // namespace horizonlab
