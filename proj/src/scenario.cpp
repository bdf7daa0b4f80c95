#include "horizonlab/scenario.hpp"

#include <cmath>
#include <iostream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "horizonlab/errors.hpp"
#include "horizonlab/evaporation.hpp"
#include "horizonlab/rindler.hpp"
#include "horizonlab/units.hpp"

namespace horizonlab {

void ScenarioConfig::validate_and_finalize() {
  if (mode == Mode::Fig1 || mode == Mode::Transform) {
    if (!(a > 0.0) || !std::isfinite(a)) throw ConfigError("a: must be positive and finite");
    if (!(fig1_tau_max > fig1_tau_min)) {
      throw ConfigError("fig1_tau_max: must exceed fig1_tau_min");
    }
    if (signal_tau == 0.0) signal_tau = 1.0 / a;
  }
  if (mode == Mode::Infall) {
    if (!(R0 > 0.0)) throw ConfigError("R0: must be positive");
    if (k < 0.0) throw ConfigError("k: must be non-negative");
    if (tau_evap < 0.0) throw ConfigError("tau_evap: must be non-negative");
    if (submode == SubMode::Evaporating) {
      if (k > 0.0 && tau_evap > 0.0) {
        throw ConfigError("k, tau_evap: mutually exclusive, give one of them");
      }
      if (k == 0.0 && tau_evap == 0.0) {
        throw ConfigError("k: evaporating sub-mode requires k > 0 or tau_evap > 0");
      }
      if (tau_evap > 0.0) k = calibrate_k(R0, tau_evap);
    } else {
      if (k > 0.0 || tau_evap > 0.0) {
        throw ConfigError("k: eternal sub-mode requires k = 0 and tau_evap = 0");
      }
    }
    if (!(r0 > R0)) throw ConfigError("r0: must start outside the initial horizon");
    integrator.validate();
  }
  if (sample_count < 2) throw ConfigError("sample_count: must be at least 2");
}

namespace {

using nlohmann::json;

double as_number(const json& j, const char* key) {
  if (!j.is_number()) throw ConfigError(std::string(key) + ": expected a number");
  return j.get<double>();
}

}  // namespace

ScenarioConfig load_scenario(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: parse error: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");

  ScenarioConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    if (key == "mode") {
      const std::string m = value.get<std::string>();
      if (m == "fig1") cfg.mode = ScenarioConfig::Mode::Fig1;
      else if (m == "infall") cfg.mode = ScenarioConfig::Mode::Infall;
      else if (m == "transform") cfg.mode = ScenarioConfig::Mode::Transform;
      else throw ConfigError("mode: expected fig1, infall or transform");
    } else if (key == "submode") {
      const std::string s = value.get<std::string>();
      if (s == "eternal") cfg.submode = ScenarioConfig::SubMode::Eternal;
      else if (s == "evaporating") cfg.submode = ScenarioConfig::SubMode::Evaporating;
      else throw ConfigError("submode: expected eternal or evaporating");
    } else if (key == "a") cfg.a = as_number(value, "a");
    else if (key == "fig1_tau_min") cfg.fig1_tau_min = as_number(value, "fig1_tau_min");
    else if (key == "fig1_tau_max") cfg.fig1_tau_max = as_number(value, "fig1_tau_max");
    else if (key == "simultaneity_tau") cfg.simultaneity_tau = as_number(value, "simultaneity_tau");
    else if (key == "signal_tau") cfg.signal_tau = as_number(value, "signal_tau");
    else if (key == "R0") cfg.R0 = as_number(value, "R0");
    else if (key == "k") cfg.k = as_number(value, "k");
    else if (key == "tau_evap") cfg.tau_evap = as_number(value, "tau_evap");
    else if (key == "r0") cfg.r0 = as_number(value, "r0");
    else if (key == "initial_ur") cfg.initial_ur = as_number(value, "initial_ur");
    else if (key == "rel_tol") cfg.integrator.rel_tol = as_number(value, "rel_tol");
    else if (key == "abs_tol") cfg.integrator.abs_tol = as_number(value, "abs_tol");
    else if (key == "h_init") cfg.integrator.h_init = as_number(value, "h_init");
    else if (key == "h_min") cfg.integrator.h_min = as_number(value, "h_min");
    else if (key == "h_max") cfg.integrator.h_max = as_number(value, "h_max");
    else if (key == "epsilon_horizon") cfg.integrator.epsilon_horizon = as_number(value, "epsilon_horizon");
    else if (key == "event_tol") cfg.integrator.event_tol = as_number(value, "event_tol");
    else if (key == "lambda_max") cfg.integrator.lambda_max = as_number(value, "lambda_max");
    else if (key == "tau_max") cfg.integrator.tau_max = as_number(value, "tau_max");
    else if (key == "r_min") cfg.integrator.r_min = as_number(value, "r_min");
    else if (key == "max_steps") cfg.integrator.max_steps = value.get<long>();
    else if (key == "touch_proximity") cfg.integrator.touch_proximity = as_number(value, "touch_proximity");
    else if (key == "include_dtau_metric_terms") cfg.integrator.include_dtau_metric_terms = value.get<bool>();
    else if (key == "samples") cfg.sample_count = value.get<int>();
    else if (key == "format") {
      const std::string f = value.get<std::string>();
      if (f == "csv") cfg.format = TableFormat::Csv;
      else if (f == "json") cfg.format = TableFormat::Json;
      else throw ConfigError("format: expected csv or json");
    } else if (key == "units") {
      const std::string u = value.get<std::string>();
      if (u == "geometric") cfg.units = ScenarioConfig::Units::Geometric;
      else if (u == "si") cfg.units = ScenarioConfig::Units::Si;
      else throw ConfigError("units: expected geometric or si");
    } else if (key == "out") cfg.output_path = value.get<std::string>();
    else if (key == "inverse") cfg.inverse_transform = value.get<bool>();
    else throw ConfigError("config: unknown field '" + key + "'");
  }
  return cfg;
}

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    out[static_cast<size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  }
  return out;
}

}  // namespace

OutputTable run_fig1(const ScenarioConfig& cfg) {
  const RindlerFrame frame{cfg.a};
  const double xr = frame.fiducial_chi();
  const int n = cfg.sample_count;

  OutputTable t;
  t.columns = {"series", "ct", "x"};
  t.add_meta("mode", "fig1");
  t.add_meta("a", format_value(cfg.a));
  t.add_meta("series_0", "rob_worldline");
  t.add_meta("series_1", "alice_worldline");
  t.add_meta("series_2", "horizon");
  t.add_meta("series_3", "simultaneity");
  t.add_meta("series_4", "signal");
  t.add_meta("simultaneity_tau", format_value(cfg.simultaneity_tau));
  t.add_meta("signal_tau", format_value(cfg.signal_tau));

  // 0: the fiducial hyperbola x^2 - (ct)^2 = (c^2/a)^2
  for (const double tau : linspace(cfg.fig1_tau_min, cfg.fig1_tau_max, n)) {
    const MinkowskiEvent e = rob_worldline(frame, tau);
    t.rows.push_back({0.0, e.ct, e.x});
  }
  // 1: the free-faller's inertial line x = c^2/a, crossing the horizon
  const double ct_hi = xr * std::sinh(cfg.a * cfg.fig1_tau_max / c_light);
  const double ct_lo = xr * std::sinh(cfg.a * cfg.fig1_tau_min / c_light);
  for (const double ct : linspace(ct_lo, ct_hi, n)) {
    t.rows.push_back({1.0, ct, xr});
  }
  // 2: the horizon ct = x
  const double x_hi = xr * std::cosh(cfg.a * cfg.fig1_tau_max / c_light);
  for (const double x : linspace(0.0, x_hi, n)) {
    t.rows.push_back({2.0, x, x});
  }
  // 3: simultaneity plane of the fiducial observer at simultaneity_tau
  const double slope = simultaneity_slope(frame, cfg.simultaneity_tau);
  for (const double x : linspace(0.0, x_hi, n)) {
    t.rows.push_back({3.0, slope * x, x});
  }
  // 4: left-moving null signal from the fiducial worldline to the
  // free-faller; with the default signal_tau it is received beyond the
  // horizon, where no reply can ever arrive.
  const MinkowskiEvent s0 = rob_worldline(frame, cfg.signal_tau);
  for (const double x : linspace(s0.x, xr, n)) {
    t.rows.push_back({4.0, s0.ct + (s0.x - x), x});
  }
  return t;
}

OutputTable run_infall(const ScenarioConfig& cfg) {
  const SpacetimeParams params{cfg.R0, cfg.k};
  const GeodesicState init = initial_state(cfg.r0, cfg.initial_ur, params);

  IntegratorConfig integ = cfg.integrator;
  if (params.eternal()) {
    integ.grid.axis = OutputGrid::Axis::ProperTime;
    double upper = integ.lambda_max;
    if (cfg.initial_ur <= 0.0) {
      upper = std::min(upper, cycloid_total_proper_time(cfg.r0, cfg.R0));
    }
    integ.grid.points = linspace(0.0, upper, cfg.sample_count);
  } else {
    const double t_evap = evaporation_time(EvaporationLaw{cfg.R0, cfg.k});
    integ.grid.axis = OutputGrid::Axis::CoordinateTime;
    integ.grid.points = linspace(0.0, std::min(integ.tau_max, t_evap), cfg.sample_count);
  }

  const Trajectory traj = integrate_radial(init, params, integ);

  // Column scales for SI output; geometric lengths are already meters.
  const Constants si = si_constants();
  const bool to_si = cfg.units == ScenarioConfig::Units::Si;
  const double time_scale = to_si ? 1.0 / si.c : 1.0;  // meters -> seconds
  const double vel_scale = to_si ? si.c : 1.0;         // dimensionless -> m/s
  const double spec_energy_scale = to_si ? si.c * si.c : 1.0;

  OutputTable t;
  t.columns = {"lambda", "tau", "r", "R_tau", "f", "u0", "ur", "energy",
               "norm_residual", "flux_proxy"};
  for (const auto& s : traj.samples) {
    t.rows.push_back({s.lambda * time_scale, s.tau * time_scale, s.r,
                      s.horizon_radius, s.lapse, s.u0, s.ur * vel_scale,
                      s.energy * spec_energy_scale, s.norm_residual,
                      s.flux * vel_scale});
  }
  t.add_meta("mode", "infall");
  t.add_meta("submode", params.eternal() ? "eternal" : "evaporating");
  t.add_meta("termination", to_string(traj.termination.type));
  t.add_meta("event_lambda", format_value(traj.termination.lambda * time_scale));
  t.add_meta("event_tau", format_value(traj.termination.tau * time_scale));
  t.add_meta("event_r", format_value(traj.termination.r));
  t.add_meta("coincides_with_evaporation",
             traj.termination.coincides_with_evaporation ? "true" : "false");
  t.add_meta("min_gap", format_value(traj.min_gap));
  t.add_meta("parametrization",
             traj.leg == Leg::ProperTime ? "proper_time" : "coordinate_time");
  t.add_meta("R0", format_value(cfg.R0));
  t.add_meta("k", format_value(cfg.k));
  if (!params.eternal()) {
    t.add_meta("tau_evap",
               format_value(evaporation_time(EvaporationLaw{cfg.R0, cfg.k}) * time_scale));
  }
  t.add_meta("r0", format_value(cfg.r0));
  t.add_meta("initial_ur", format_value(cfg.initial_ur * vel_scale));
  t.add_meta("rel_tol", format_value(integ.rel_tol));
  t.add_meta("abs_tol", format_value(integ.abs_tol));
  t.add_meta("epsilon_horizon", format_value(integ.epsilon_horizon));
  t.add_meta("event_tol", format_value(integ.event_tol));
  t.add_meta("include_dtau_metric_terms",
             integ.include_dtau_metric_terms ? "true" : "false");
  t.add_meta("units", to_si ? "si" : "geometric");
  t.add_meta("steps_accepted", std::to_string(traj.steps_accepted));
  t.add_meta("steps_rejected", std::to_string(traj.steps_rejected));
  t.add_meta("rhs_evals", std::to_string(traj.rhs_evals));
  return t;
}

int run_transform(const ScenarioConfig& cfg, std::istream& in, std::ostream& out) {
  const RindlerFrame frame{cfg.a};
  const Constants si = si_constants();
  const bool from_si = cfg.units == ScenarioConfig::Units::Si;
  std::string line;
  int unmappable = 0;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    double u, v;
    if (!(ls >> u >> v)) {
      throw ConfigError("transform: malformed input on line " + std::to_string(line_no));
    }
    try {
      if (cfg.inverse_transform) {
        // (tau, chi) -> (ct, x)
        const double tau = from_si ? u * si.c : u;
        const MinkowskiEvent e = rindler_to_minkowski(RindlerEvent{tau, v, 0.0, 0.0}, frame);
        out << format_value(e.ct) << " " << format_value(e.x) << "\n";
      } else {
        // (ct, x) -> (tau, chi)
        const RindlerEvent e = minkowski_to_rindler(MinkowskiEvent{u, v, 0.0, 0.0}, frame);
        const double tau = from_si ? e.tau / si.c : e.tau;
        out << format_value(tau) << " " << format_value(e.chi) << "\n";
      }
    } catch (const std::domain_error& err) {
      ++unmappable;
      std::cerr << "horizonlab: line " << line_no << ": " << err.what() << "\n";
      out << "nan nan\n";
    }
  }
  return unmappable;
}

}  // namespace horizonlab
