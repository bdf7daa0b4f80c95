// Embedded Dormand-Prince 5(4) pair (RK5(4)7M, 1980 JCoAM 6 19) with the
// standard quartic dense-output interpolant and PI (Lund) step-size control,
// following Hairer-Norsett-Wanner's DOPRI5.
//
// The right-hand side is any callable
//   bool rhs(double t, const Vec& y, Vec& dydt)
// returning false when (t, y) left the admissible domain; the step is then
// retried with half the size. State vectors are fixed-size Eigen columns.
#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <limits>

#include "horizonlab/errors.hpp"

namespace horizonlab {

struct StepControl {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double h_init = 0.0;  // 0: choose automatically from the first derivative
  double h_min = 0.0;   // 0: machine-resolution guard only
  double h_max = 0.0;   // 0: unlimited
  long max_steps = 4'000'000;
};

/// One accepted step's quartic interpolant, valid on [t0, t1].
template <int N>
struct DenseSegment {
  using Vec = Eigen::Matrix<double, N, 1>;

  double t0 = 0.0;
  double t1 = 0.0;
  Vec c1, c2, c3, c4, c5;

  double h() const { return t1 - t0; }

  Vec eval(double t) const {
    const double th = (t - t0) / (t1 - t0);
    const double th1 = 1.0 - th;
    return c1 + th * (c2 + th1 * (c3 + th * (c4 + th1 * c5)));
  }
};

namespace dopri5_detail {

// Butcher tableau of the 5(4) pair.
inline constexpr double a21 = 1.0 / 5.0;
inline constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
inline constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
inline constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                        a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
inline constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0,
                        a63 = 46732.0 / 5247.0, a64 = 49.0 / 176.0,
                        a65 = -5103.0 / 18656.0;
inline constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0,
                        a74 = 125.0 / 192.0, a75 = -2187.0 / 6784.0,
                        a76 = 11.0 / 84.0;
inline constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 4.0 / 5.0,
                        c5 = 8.0 / 9.0;
// Difference of the 5th- and 4th-order weights.
inline constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0,
                        e4 = 71.0 / 1920.0, e5 = -17253.0 / 339200.0,
                        e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
// Dense-output weights.
inline constexpr double d1 = -12715105075.0 / 11282082432.0,
                        d3 = 87487479700.0 / 32700410799.0,
                        d4 = -10690763975.0 / 1880347072.0,
                        d5 = 701980252875.0 / 199316789632.0,
                        d6 = -1453857185.0 / 822651844.0,
                        d7 = 69997945.0 / 29380423.0;

// Step-size controller constants.
inline constexpr double safety = 0.8;
inline constexpr double fac_min = 0.2;   // max shrink per step
inline constexpr double fac_max = 6.0;   // max growth per step
inline constexpr double beta = 0.04;     // PI stabilization exponent

}  // namespace dopri5_detail

/// Forward-marching adaptive integrator. One instance carries (t, y) and the
/// FSAL derivative; step() advances by one accepted step and returns the
/// dense segment covering it.
template <int N>
class Dopri5 {
 public:
  using Vec = Eigen::Matrix<double, N, 1>;

  template <class Rhs>
  void init(double t0, const Vec& y0, const Rhs& rhs, const StepControl& ctrl) {
    t_ = t0;
    y_ = y0;
    ctrl_ = ctrl;
    facold_ = 1e-4;
    steps_accepted_ = steps_rejected_ = 0;
    rhs_evals_ = 1;
    if (!rhs(t_, y_, k1_)) {
      throw std::invalid_argument("dopri5: initial state outside the admissible domain");
    }
    h_ = ctrl.h_init > 0.0 ? ctrl.h_init : initial_step(rhs);
    if (ctrl.h_max > 0.0) h_ = std::min(h_, ctrl.h_max);
  }

  double t() const { return t_; }
  const Vec& y() const { return y_; }
  const Vec& derivative() const { return k1_; }
  long steps_accepted() const { return steps_accepted_; }
  long steps_rejected() const { return steps_rejected_; }
  long rhs_evals() const { return rhs_evals_; }

  /// True when the last step landed exactly on the limit passed to step().
  bool at_limit() const { return at_limit_; }

  /// Take one accepted step, not stepping past t_limit. Throws StepUnderflow
  /// and MaxStepsExceeded.
  template <class Rhs>
  DenseSegment<N> step(const Rhs& rhs, double t_limit) {
    using namespace dopri5_detail;
    const double eps = std::numeric_limits<double>::epsilon();
    bool rejected = false;

    for (;;) {
      if (steps_accepted_ + steps_rejected_ >= ctrl_.max_steps) {
        throw MaxStepsExceeded("dopri5: step budget exhausted");
      }
      if (0.1 * h_ <= std::abs(t_) * eps || (ctrl_.h_min > 0.0 && h_ < ctrl_.h_min)) {
        throw StepUnderflow("dopri5: step size underflow at t = " + std::to_string(t_));
      }

      at_limit_ = false;
      double h = h_;
      if (t_ + 1.01 * h >= t_limit) {
        h = t_limit - t_;
        at_limit_ = true;
        if (!(h > 0.0)) {
          throw StepUnderflow("dopri5: no room left below the integration limit");
        }
      }

      Vec k2, k3, k4, k5, k6, k7, ytmp, ynew;
      bool ok = true;
      ytmp = y_ + h * (a21 * k1_);
      ok = ok && rhs(t_ + c2 * h, ytmp, k2);
      if (ok) {
        ytmp = y_ + h * (a31 * k1_ + a32 * k2);
        ok = rhs(t_ + c3 * h, ytmp, k3);
      }
      if (ok) {
        ytmp = y_ + h * (a41 * k1_ + a42 * k2 + a43 * k3);
        ok = rhs(t_ + c4 * h, ytmp, k4);
      }
      if (ok) {
        ytmp = y_ + h * (a51 * k1_ + a52 * k2 + a53 * k3 + a54 * k4);
        ok = rhs(t_ + c5 * h, ytmp, k5);
      }
      if (ok) {
        ytmp = y_ + h * (a61 * k1_ + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
        ok = rhs(t_ + h, ytmp, k6);
      }
      if (ok) {
        ynew = y_ + h * (a71 * k1_ + a73 * k3 + a74 * k4 + a75 * k5 + a76 * k6);
        ok = rhs(t_ + h, ynew, k7);
      }
      rhs_evals_ += 6;
      if (!ok) {
        // A stage left the domain; treat like a rejection with a hard halving.
        h_ = 0.5 * h;
        ++steps_rejected_;
        rejected = true;
        continue;
      }

      // Scaled RMS error estimate over the embedded difference.
      const Vec ee = h * (e1 * k1_ + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
      double err = 0.0;
      for (int i = 0; i < N; ++i) {
        const double scale =
            ctrl_.abs_tol + ctrl_.rel_tol * std::max(std::abs(y_[i]), std::abs(ynew[i]));
        const double q = ee[i] / scale;
        err += q * q;
      }
      err = std::sqrt(err / N);

      const double fac11 = std::pow(err, 0.2 - beta * 0.75);
      if (err > 1.0) {
        h_ = h / std::min(1.0 / fac_min, fac11 / safety);
        ++steps_rejected_;
        rejected = true;
        continue;
      }

      // Accepted: build the dense segment, advance, and pick the next h.
      DenseSegment<N> seg;
      seg.t0 = t_;
      seg.t1 = t_ + h;
      const Vec ydiff = ynew - y_;
      const Vec bspl = h * k1_ - ydiff;
      seg.c1 = y_;
      seg.c2 = ydiff;
      seg.c3 = bspl;
      seg.c4 = ydiff - h * k7 - bspl;
      seg.c5 = h * (d1 * k1_ + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);

      double fac = fac11 / std::pow(facold_, beta);
      fac = std::max(1.0 / fac_max, std::min(1.0 / fac_min, fac / safety));
      double hnew = h / fac;
      if (rejected) hnew = std::min(hnew, h);  // no growth right after a rejection
      if (ctrl_.h_max > 0.0) hnew = std::min(hnew, ctrl_.h_max);

      facold_ = std::max(err, 1e-4);
      t_ = seg.t1;
      y_ = ynew;
      k1_ = k7;  // first-same-as-last
      h_ = hnew;
      ++steps_accepted_;
      return seg;
    }
  }

 private:
  // Hairer's automatic initial step: match the scale of y and y' and refine
  // with one explicit Euler probe of the second derivative.
  template <class Rhs>
  double initial_step(const Rhs& rhs) {
    double dnf = 0.0, dny = 0.0;
    for (int i = 0; i < N; ++i) {
      const double scale = ctrl_.abs_tol + ctrl_.rel_tol * std::abs(y_[i]);
      double q = k1_[i] / scale;
      dnf += q * q;
      q = y_[i] / scale;
      dny += q * q;
    }
    double h = (dnf <= 1e-10 || dny <= 1e-10) ? 1e-6 : 0.01 * std::sqrt(dny / dnf);

    Vec y1 = y_ + h * k1_;
    Vec k2;
    ++rhs_evals_;
    if (!rhs(t_ + h, y1, k2)) return h * 1e-3;

    double der2 = 0.0;
    for (int i = 0; i < N; ++i) {
      const double scale = ctrl_.abs_tol + ctrl_.rel_tol * std::abs(y_[i]);
      const double q = (k2[i] - k1_[i]) / scale;
      der2 += q * q;
    }
    der2 = std::sqrt(der2) / h;

    const double der12 = std::max(der2, std::sqrt(dnf));
    const double h1 = der12 <= 1e-15 ? std::max(1e-6, h * 1e-3)
                                     : std::pow(0.01 / der12, 0.2);
    return std::min(100.0 * h, h1);
  }

  double t_ = 0.0;
  Vec y_ = Vec::Zero();
  Vec k1_ = Vec::Zero();
  double h_ = 0.0;
  double facold_ = 1e-4;
  bool at_limit_ = false;
  StepControl ctrl_;
  long steps_accepted_ = 0;
  long steps_rejected_ = 0;
  long rhs_evals_ = 0;
};

}  // namespace horizonlab
