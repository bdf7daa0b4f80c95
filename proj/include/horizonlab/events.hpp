// Flat-spacetime events, the Minkowski interval and its causal classification.
#pragma once

namespace horizonlab {

/// A point of flat spacetime in inertial coordinates. The time coordinate is
/// stored premultiplied by c, so every component is a length.
struct MinkowskiEvent {
  double ct = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

enum class CausalClass { TimelikeFuture, TimelikePast, Lightlike, Spacelike, Zero };

const char* to_string(CausalClass c);

/// Squared interval with signature (+,-,-,-):
/// ds^2 = (dct)^2 - dx^2 - dy^2 - dz^2.
struct Interval {
  double ds2 = 0.0;
  CausalClass cls = CausalClass::Zero;
};

/// Interval from a to b. Classification: Zero iff a == b componentwise,
/// Lightlike iff ds^2 == 0 and a != b, timelike split by the sign of dct.
/// Throws std::invalid_argument on non-finite components.
Interval interval_minkowski(const MinkowskiEvent& a, const MinkowskiEvent& b);

/// True iff a signal moving at <= c can go from `from` to `to`: the interval
/// is timelike-future, or lightlike with dct > 0.
bool causal_reachable(const MinkowskiEvent& from, const MinkowskiEvent& to);

}  // namespace horizonlab
