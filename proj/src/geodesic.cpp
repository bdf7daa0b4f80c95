#include "horizonlab/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "horizonlab/errors.hpp"
#include "horizonlab/units.hpp"

namespace horizonlab {

using Vec4 = Eigen::Vector4d;

const char* to_string(Termination t) {
  switch (t) {
    case Termination::HorizonTouch: return "horizon_touch";
    case Termination::EvaporationComplete: return "evaporation_complete";
    case Termination::LambdaMax: return "lambda_max";
    case Termination::TauMax: return "tau_max";
    case Termination::RMinCutoff: return "r_min_cutoff";
  }
  return "unknown";
}

void IntegratorConfig::validate() const {
  if (!(rel_tol > 0.0)) throw ConfigError("rel_tol: must be positive");
  if (!(abs_tol > 0.0)) throw ConfigError("abs_tol: must be positive");
  if (!(epsilon_horizon > 0.0 && epsilon_horizon < 1e-2)) {
    throw ConfigError("epsilon_horizon: must lie in (0, 1e-2)");
  }
  if (!(event_tol > 0.0 && event_tol < rel_tol)) {
    throw ConfigError("event_tol: must lie in (0, rel_tol)");
  }
  if (!(lambda_max > 0.0)) throw ConfigError("lambda_max: must be positive");
  if (!(tau_max > 0.0)) throw ConfigError("tau_max: must be positive");
  if (!(r_min >= 0.0)) throw ConfigError("r_min: must be non-negative");
  if (max_steps <= 0) throw ConfigError("max_steps: must be positive");
  if (!(touch_proximity >= 0.0)) throw ConfigError("touch_proximity: must be non-negative");
  for (size_t i = 1; i < grid.points.size(); ++i) {
    if (!(grid.points[i] > grid.points[i - 1])) {
      throw ConfigError("grid.points: must be strictly increasing");
    }
  }
}

GeodesicState initial_state(double r0, double ur0, const SpacetimeParams& params) {
  const EvaporationLaw law{params.R0, params.k};
  const double R = radius_at(law, 0.0);
  if (!(r0 > R)) {
    throw CoordinateSingularity("initial_state: r0 must exceed the initial horizon radius");
  }
  const double f = (r0 - R) / r0;
  const double c2 = c_light * c_light;
  GeodesicState s;
  s.lambda = 0.0;
  s.tau = 0.0;
  s.r = r0;
  s.ur = ur0;
  s.u0 = std::sqrt(f + ur0 * ur0 / c2) / f;
  return s;
}

GeodesicState initial_state_at_rest(double r0, const SpacetimeParams& params) {
  return initial_state(r0, 0.0, params);
}

GeodesicDerivatives geodesic_rhs(const GeodesicState& state,
                                 const SpacetimeParams& params,
                                 bool include_dtau_metric_terms) {
  const EvaporationLaw law{params.R0, params.k};
  const double R = radius_at(law, std::max(state.tau, 0.0));
  if (!(state.r > 0.0)) {
    throw std::invalid_argument("geodesic_rhs: r must be positive");
  }
  const double f = (state.r - R) / state.r;
  if (!(f > 0.0)) {
    throw CoordinateSingularity("geodesic_rhs: f <= 0, at or inside the horizon");
  }
  const double fp = R / (state.r * state.r);
  const double c2 = c_light * c_light;
  const double u0 = state.u0, ur = state.ur;

  GeodesicDerivatives d;
  d.dtau = u0;
  d.dr = ur;
  d.du0 = -(fp / f) * u0 * ur;
  d.dur = -0.5 * c2 * f * fp * u0 * u0 + 0.5 * (fp / f) * ur * ur;
  if (include_dtau_metric_terms) {
    const double fdot = -radius_rate(law, std::max(state.tau, 0.0)) / state.r;
    d.du0 += -0.5 * (fdot / f) * u0 * u0 + 0.5 * fdot / (c2 * f * f * f) * ur * ur;
    d.dur += (fdot / f) * u0 * ur;
  }
  return d;
}

GeodesicState decode_state(Leg leg, double t, const Vec4& y) {
  if (leg == Leg::ProperTime) {
    return GeodesicState{t, y[0], y[1], y[2], y[3]};
  }
  const double u0 = std::exp(y[3]);
  return GeodesicState{y[0], t, y[1], u0, y[2] * u0};
}

namespace {

// Proper-time leg: t = lambda, y = (tau, r, u0, ur).
struct ProperTimeRhs {
  EvaporationLaw law;
  bool dtau_terms;

  bool operator()(double, const Vec4& y, Vec4& dydt) const {
    const double tau = std::max(y[0], 0.0);
    const double r = y[1], u0 = y[2], ur = y[3];
    if (!(r > 0.0)) return false;
    const double R = radius_at(law, tau);
    const double f = (r - R) / r;
    if (!(f > 0.0)) return false;
    const double fp = R / (r * r);
    const double c2 = c_light * c_light;
    double du0 = -(fp / f) * u0 * ur;
    double dur = -0.5 * c2 * f * fp * u0 * u0 + 0.5 * (fp / f) * ur * ur;
    if (dtau_terms) {
      const double fdot = -radius_rate(law, tau) / r;
      du0 += -0.5 * (fdot / f) * u0 * u0 + 0.5 * fdot / (c2 * f * f * f) * ur * ur;
      dur += (fdot / f) * u0 * ur;
    }
    dydt << u0, ur, du0, dur;
    return true;
  }
};

// Coordinate-time leg: t = tau, y = (lambda, r, v, w) with v = dr/dtau and
// w = ln u0. Obtained from the lambda form by dividing through by u0; the
// state stays O(1) even where u0 runs through dozens of e-folds.
struct CoordinateTimeRhs {
  EvaporationLaw law;
  bool dtau_terms;

  bool operator()(double t, const Vec4& y, Vec4& dydt) const {
    const double tau = std::max(t, 0.0);
    const double r = y[1], v = y[2], w = y[3];
    if (!(r > 0.0)) return false;
    const double R = radius_at(law, tau);
    const double f = (r - R) / r;
    if (!(f > 0.0)) return false;
    const double fp = R / (r * r);
    const double c2 = c_light * c_light;
    double dv = -0.5 * c2 * f * fp + 1.5 * (fp / f) * v * v;
    double dw = -(fp / f) * v;
    if (dtau_terms) {
      const double fdot = -radius_rate(law, tau) / r;
      dv += 1.5 * (fdot / f) * v - 0.5 * fdot / (c2 * f * f * f) * v * v * v;
      dw += -0.5 * (fdot / f) + 0.5 * fdot / (c2 * f * f * f) * v * v;
    }
    dydt << std::exp(-w), v, dv, dw;
    return true;
  }
};

struct Monitor {
  Termination type;
  std::function<double(double, const Vec4&)> sign;
};

std::vector<Monitor> build_monitors(Leg leg, const SpacetimeParams& params,
                                    const IntegratorConfig& cfg) {
  std::vector<Monitor> ms;
  const EvaporationLaw law{params.R0, params.k};
  if (params.eternal()) {
    const double r_stop = std::max(cfg.r_min, params.R0 * (1.0 + cfg.epsilon_horizon));
    ms.push_back({Termination::RMinCutoff,
                  [r_stop](double, const Vec4& y) { return y[1] - r_stop; }});
  } else {
    const double band = cfg.epsilon_horizon * params.R0;
    ms.push_back({Termination::HorizonTouch,
                  [law, band, leg](double t, const Vec4& y) {
                    const double tau = leg == Leg::ProperTime ? y[0] : t;
                    return y[1] - radius_at(law, std::max(tau, 0.0)) - band;
                  }});
    if (cfg.r_min > 0.0) {
      ms.push_back({Termination::RMinCutoff,
                    [rm = cfg.r_min](double, const Vec4& y) { return y[1] - rm; }});
    }
  }
  // Budget on whichever time column is not the independent variable; the
  // independent one is enforced by the stepper's limit clamp.
  if (leg == Leg::ProperTime) {
    ms.push_back({Termination::TauMax,
                  [tm = cfg.tau_max](double, const Vec4& y) { return tm - y[0]; }});
  } else {
    ms.push_back({Termination::LambdaMax,
                  [lm = cfg.lambda_max](double, const Vec4& y) { return lm - y[0]; }});
  }
  return ms;
}

// First zero of s over [t0, t1] given s(t0) > 0 >= s(t1), bisected on the
// dense output down to the last representable bracket; returns the endpoint
// on the admissible (s >= 0) side.
template <class S>
double bisect_zero(const DenseSegment<4>& seg, const S& s, double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (s(mid, seg.eval(mid)) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

std::optional<LocatedEvent> detect_events(const DenseSegment<4>& seg, Leg leg,
                                          const SpacetimeParams& params,
                                          const IntegratorConfig& cfg) {
  const auto monitors = build_monitors(leg, params, cfg);
  std::optional<LocatedEvent> first;
  for (const auto& m : monitors) {
    const double s0 = m.sign(seg.t0, seg.eval(seg.t0));
    const double s1 = m.sign(seg.t1, seg.eval(seg.t1));
    if (!(s0 > 0.0)) {
      // Already at or past the event when the segment started.
      if (!first || seg.t0 < first->t) {
        first = LocatedEvent{m.type, seg.t0, seg.eval(seg.t0), std::abs(s0)};
      }
      continue;
    }
    if (s1 > 0.0) continue;
    const double t_ev = bisect_zero(seg, m.sign, seg.t0, seg.t1);
    if (!first || t_ev < first->t) {
      const Vec4 y_ev = seg.eval(t_ev);
      first = LocatedEvent{m.type, t_ev, y_ev, std::abs(m.sign(t_ev, y_ev))};
    }
  }
  return first;
}

namespace {

TrajectorySample make_sample(Leg leg, double t, const Vec4& y,
                             const EvaporationLaw& law) {
  const GeodesicState s = decode_state(leg, t, y);
  const double c2 = c_light * c_light;
  TrajectorySample out;
  out.lambda = s.lambda;
  out.tau = s.tau;
  out.r = s.r;
  out.u0 = s.u0;
  out.ur = s.ur;
  out.horizon_radius = radius_at(law, std::max(s.tau, 0.0));
  out.lapse = (s.r - out.horizon_radius) / s.r;
  out.energy = out.lapse * s.u0;
  // Normalization residual relative to the leading term f c^2 u0^2. The raw
  // residual is the identity deficit divided by f, which blows up by 1/f near
  // the cutoff no matter how well the integration holds the identity; scaling
  // by the leading term keeps the column a meaningful relative measure.
  if (leg == Leg::ProperTime) {
    const double lead = out.lapse * c2 * s.u0 * s.u0;
    out.norm_residual = (lead - s.ur * s.ur / out.lapse - c2) / lead;
  } else {
    // (q - exp(-2w)) / f with q = (f c - v)(f c + v)/(f c^2); this form keeps
    // the small null margin f c - |v| out of the huge exp(2w) factor and
    // stays finite even when u0 itself overflows.
    const double v = y[2], w = y[3];
    const double q = (out.lapse * c_light - v) * (out.lapse * c_light + v) / (out.lapse * c2);
    out.norm_residual = (q - std::exp(-2.0 * w)) / out.lapse;
  }
  if (law.k == 0.0) {
    out.flux = 0.0;
  } else if (out.horizon_radius > 0.0) {
    out.flux = law.k / (3.0 * out.horizon_radius * out.horizon_radius);
  } else {
    out.flux = std::numeric_limits<double>::infinity();  // the pole itself
  }
  return out;
}

double grid_column(Leg leg, OutputGrid::Axis axis, double t, const Vec4& y) {
  const bool independent =
      (leg == Leg::ProperTime && axis == OutputGrid::Axis::ProperTime) ||
      (leg == Leg::CoordinateTime && axis == OutputGrid::Axis::CoordinateTime);
  return independent ? t : y[0];  // the other time coordinate sits in y[0]
}

// t at which the grid column reaches `target` inside the segment. The column
// is a time coordinate, monotone increasing along the flow.
double locate_column(const DenseSegment<4>& seg, Leg leg, OutputGrid::Axis axis,
                     double target) {
  const bool independent =
      (leg == Leg::ProperTime && axis == OutputGrid::Axis::ProperTime) ||
      (leg == Leg::CoordinateTime && axis == OutputGrid::Axis::CoordinateTime);
  if (independent) return target;
  double lo = seg.t0, hi = seg.t1;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (grid_column(leg, axis, mid, seg.eval(mid)) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

}  // namespace

Trajectory integrate_radial(const GeodesicState& init,
                            const SpacetimeParams& params,
                            const IntegratorConfig& cfg) {
  cfg.validate();
  if (!(params.R0 > 0.0) || !(params.k >= 0.0)) {
    throw std::invalid_argument("integrate_radial: R0 > 0 and k >= 0 required");
  }
  const EvaporationLaw law{params.R0, params.k};
  const double R_init = radius_at(law, std::max(init.tau, 0.0));
  if (!(init.r > R_init + cfg.epsilon_horizon * params.R0) || !(init.r > cfg.r_min)) {
    throw std::invalid_argument("integrate_radial: initial radius already inside the cutoff");
  }
  if (!(init.u0 > 0.0)) {
    throw std::invalid_argument("integrate_radial: u0 must be positive");
  }

  const Leg leg = params.eternal() ? Leg::ProperTime : Leg::CoordinateTime;

  double t0;
  Vec4 y0;
  double t_limit;
  Termination limit_type;
  if (leg == Leg::ProperTime) {
    t0 = init.lambda;
    y0 << init.tau, init.r, init.u0, init.ur;
    t_limit = cfg.lambda_max;
    limit_type = Termination::LambdaMax;
  } else {
    t0 = init.tau;
    y0 << init.lambda, init.r, init.ur / init.u0, std::log(init.u0);
    const double t_evap = evaporation_time(law);
    if (cfg.tau_max < t_evap) {
      t_limit = cfg.tau_max;
      limit_type = Termination::TauMax;
    } else {
      t_limit = t_evap;
      limit_type = Termination::EvaporationComplete;
    }
  }

  StepControl sc;
  sc.rel_tol = cfg.rel_tol;
  sc.abs_tol = cfg.abs_tol;
  sc.h_init = cfg.h_init;
  sc.h_min = cfg.h_min;
  sc.h_max = cfg.h_max;
  sc.max_steps = cfg.max_steps;

  Trajectory traj;
  traj.leg = leg;
  traj.min_gap = std::numeric_limits<double>::infinity();

  double last_t = -std::numeric_limits<double>::infinity();
  const auto emit = [&](double t, const Vec4& y) {
    if (!(t > last_t)) return;
    traj.samples.push_back(make_sample(leg, t, y, law));
    const auto& s = traj.samples.back();
    traj.min_gap = std::min(traj.min_gap, s.r - s.horizon_radius);
    last_t = t;
  };

  size_t grid_idx = 0;
  const auto emit_grid_through = [&](const DenseSegment<4>& seg, double t_end) {
    const auto axis = cfg.grid.axis;
    const double col_end = grid_column(leg, axis, t_end, seg.eval(t_end));
    while (grid_idx < cfg.grid.points.size() && cfg.grid.points[grid_idx] <= col_end) {
      const double target = cfg.grid.points[grid_idx];
      const double col_start = grid_column(leg, axis, seg.t0, seg.eval(seg.t0));
      if (target > col_start) {
        const double t_g = locate_column(seg, leg, axis, target);
        if (t_g <= t_end) emit(t_g, seg.eval(t_g));
      }
      ++grid_idx;
    }
  };

  Dopri5<4> stepper;
  std::optional<LocatedEvent> ev;

  const auto drive = [&](auto rhs) {
    stepper.init(t0, y0, rhs, sc);
    // skip grid points at or before the start
    {
      const double col0 = grid_column(leg, cfg.grid.axis, t0, y0);
      while (grid_idx < cfg.grid.points.size() && cfg.grid.points[grid_idx] <= col0) {
        ++grid_idx;
      }
    }
    emit(t0, y0);
    for (;;) {
      const DenseSegment<4> seg = stepper.step(rhs, t_limit);
      ev = detect_events(seg, leg, params, cfg);
      const double t_end = ev ? ev->t : seg.t1;
      emit_grid_through(seg, t_end);
      if (ev) {
        emit(ev->t, ev->y);
        return;
      }
      emit(seg.t1, stepper.y());
      if (stepper.at_limit()) return;
    }
  };

  if (leg == Leg::ProperTime) {
    drive(ProperTimeRhs{law, cfg.include_dtau_metric_terms});
  } else {
    drive(CoordinateTimeRhs{law, cfg.include_dtau_metric_terms});
  }

  EventRecord term;
  if (ev) {
    const GeodesicState s = decode_state(leg, ev->t, ev->y);
    term.type = ev->type;
    term.lambda = s.lambda;
    term.tau = s.tau;
    term.r = s.r;
    term.sign_residual = ev->sign_residual;
  } else {
    const GeodesicState s = decode_state(leg, stepper.t(), stepper.y());
    term.type = limit_type;
    term.lambda = s.lambda;
    term.tau = s.tau;
    term.r = s.r;
    term.sign_residual = 0.0;
  }

  if (!params.eternal()) {
    const double t_evap = evaporation_time(law);
    term.coincides_with_evaporation =
        std::abs(term.tau - t_evap) <= std::max(cfg.event_tol, 1e-3 * t_evap);
    // An evaporation that completes while the infaller sits at the gap floor
    // is the touch: the horizon shrank to meet her exactly as it vanished.
    if (term.type == Termination::EvaporationComplete &&
        traj.min_gap <= cfg.touch_proximity * params.R0) {
      term.type = Termination::HorizonTouch;
    }
  }

  traj.termination = term;
  traj.steps_accepted = stepper.steps_accepted();
  traj.steps_rejected = stepper.steps_rejected();
  traj.rhs_evals = stepper.rhs_evals();
  return traj;
}

CoordinateTimeProfile coordinate_time_profile(const Trajectory& traj,
                                              double tail_lo, double tail_hi) {
  CoordinateTimeProfile prof;
  for (const auto& s : traj.samples) {
    const double ratio = (s.r - s.horizon_radius) / s.horizon_radius;
    if (ratio >= tail_lo && ratio <= tail_hi) {
      prof.log_delta_r.push_back(std::log(ratio));
      prof.tau.push_back(s.tau);
    }
  }
  const size_t n = prof.log_delta_r.size();
  if (n < 8) {
    throw std::runtime_error(
        "coordinate_time_profile: trajectory does not reach the tail region");
  }
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < n; ++i) {
    mx += prof.log_delta_r[i];
    my += prof.tau[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double dx = prof.log_delta_r[i] - mx;
    sxy += dx * (prof.tau[i] - my);
    sxx += dx * dx;
  }
  prof.slope = sxy / sxx;
  prof.intercept = my - prof.slope * mx;
  return prof;
}

}  // namespace horizonlab
