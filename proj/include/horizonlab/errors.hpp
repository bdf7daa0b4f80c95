#pragma once

#include <stdexcept>
#include <string>

namespace horizonlab {

/// Event lies on or beyond the Rindler horizon (x <= |ct|); the wedge chart
/// cannot represent it.
struct OutsideWedge : std::domain_error {
  using std::domain_error::domain_error;
};

/// chi <= 0. The horizon itself is a null surface and not a point of the
/// accelerated chart.
struct DegenerateHorizon : std::domain_error {
  using std::domain_error::domain_error;
};

/// r <= R. The exterior Schwarzschild chart breaks down at the horizon;
/// this is a chart failure, not the physical singularity at r = 0.
struct CoordinateSingularity : std::domain_error {
  using std::domain_error::domain_error;
};

/// k = 0: no finite evaporation time exists.
struct EternalBlackHole : std::domain_error {
  using std::domain_error::domain_error;
};

/// Adaptive step size fell below the representable or configured minimum,
/// typically while approaching a pole of the right-hand side.
struct StepUnderflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MaxStepsExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Scenario configuration rejected; the message names the offending field.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace horizonlab
