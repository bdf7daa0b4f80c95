// Scenario orchestration: config ingestion, the two figure-producing runs,
// and the stdin/stdout transform filter.
#pragma once

#include <iosfwd>
#include <string>

#include "horizonlab/geodesic.hpp"
#include "horizonlab/table.hpp"

namespace horizonlab {

struct ScenarioConfig {
  enum class Mode { Fig1, Infall, Transform };
  enum class SubMode { Eternal, Evaporating };
  enum class Units { Geometric, Si };

  Mode mode = Mode::Fig1;
  SubMode submode = SubMode::Eternal;

  // accelerated-frame scenarios (fig1, transform)
  double a = 1.0;
  double fig1_tau_min = -3.0;
  double fig1_tau_max = 3.0;
  double simultaneity_tau = 1.0;
  double signal_tau = 0.0;  // 0: defaults to 1/a, which lands beyond the horizon

  // infall scenario
  double R0 = 1.0;
  double k = 0.0;         // set directly, or derived from tau_evap
  double tau_evap = 0.0;  // mutually exclusive with k
  double r0 = 3.0;
  double initial_ur = 0.0;
  IntegratorConfig integrator;

  // output
  int sample_count = 601;
  TableFormat format = TableFormat::Csv;
  Units units = Units::Geometric;
  std::string output_path;         // empty: stdout
  bool inverse_transform = false;  // transform mode: read (tau, chi), write (ct, x)

  /// Check constraints, fill derived values (k from tau_evap). Throws
  /// ConfigError naming the offending field.
  void validate_and_finalize();
};

/// Parse a JSON config document. Unknown keys are rejected so that typos
/// surface as errors instead of silently applied defaults.
ScenarioConfig load_scenario(const std::string& json_text);

/// Worldline geometry of the accelerated-observer figure: the fiducial
/// hyperbola, the free-fall line x = c^2/a, the horizon ct = x, one
/// simultaneity plane, and one null signal sent from the fiducial worldline
/// to the free-faller beyond the horizon. Columns (series, ct, x); the
/// series ids are listed in the metadata.
OutputTable run_fig1(const ScenarioConfig& cfg);

/// Radial infall run; columns
/// (lambda, tau, r, R_tau, f, u0, ur, energy, norm_residual, flux_proxy),
/// termination and event location in the metadata. Both observers' views are
/// projections of this one table: (tau, r) and (lambda, r).
OutputTable run_infall(const ScenarioConfig& cfg);

/// Filter: one event per input line ("ct x", or "tau chi" with
/// inverse_transform), transformed coordinates on the output line. Events
/// outside the wedge produce "nan nan" and a note on stderr. Returns the
/// number of unmappable lines.
int run_transform(const ScenarioConfig& cfg, std::istream& in, std::ostream& out);

}  // namespace horizonlab
