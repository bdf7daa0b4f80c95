#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "horizonlab/errors.hpp"
#include "horizonlab/rindler.hpp"
#include "horizonlab/schwarzschild.hpp"
#include "horizonlab/units.hpp"

using namespace horizonlab;

TEST_CASE("schwarzschild radius") {
  CHECK(schwarzschild_radius(0.0) == 0.0);
  CHECK(schwarzschild_radius(0.5) == 1.0);  // geometric units
  CHECK_THROWS_AS(schwarzschild_radius(-1.0), std::invalid_argument);

  // SI route through unit conversion: the sun
  const double m_geo = convert_units(1.989e30, Dimension::Mass, UnitDirection::SiToGeometric);
  CHECK(schwarzschild_radius(m_geo) == doctest::Approx(2953.9).epsilon(1e-3));
}

TEST_CASE("metric components on the exterior") {
  const auto m = metric_components(2.0, 1.0);
  CHECK(m.f == doctest::Approx(0.5));
  CHECK(m.g_tt == doctest::Approx(0.5));
  CHECK(m.g_rr == doctest::Approx(-2.0));
  CHECK(m.g_thth == doctest::Approx(-4.0));

  CHECK(metric_components(1e6, 1.0).f == doctest::Approx(1.0).epsilon(1e-6));

  CHECK_THROWS_AS(metric_components(1.0, 1.0), CoordinateSingularity);
  CHECK_THROWS_AS(metric_components(0.5, 1.0), CoordinateSingularity);

  SUBCASE("g_tt |g_rr| = c^2 identically") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
      const double R = 0.1 + 10.0 * u(rng);
      const double r = R * (1.0 + 1e-9 + 100.0 * u(rng));
      const auto mm = metric_components(r, R);
      CHECK(std::abs(mm.g_tt * std::abs(mm.g_rr) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("near-horizon proper distance coordinate") {
  CHECK(near_horizon_chi(0.0, 1.0) == 0.0);
  CHECK(near_horizon_chi(0.25, 1.0) == doctest::Approx(1.0));
  CHECK(near_horizon_chi(1.0, 4.0) == doctest::Approx(4.0));
  CHECK_THROWS_AS(near_horizon_chi(-0.1, 1.0), std::invalid_argument);
}

TEST_CASE("exact proper distance") {
  CHECK(proper_distance_exact(2.0, 2.0, 1.0) == 0.0);

  SUBCASE("additive over subintervals") {
    const double d12 = proper_distance_exact(1.5, 2.5, 1.0);
    const double d23 = proper_distance_exact(2.5, 7.0, 1.0);
    const double d13 = proper_distance_exact(1.5, 7.0, 1.0);
    CHECK(std::abs(d12 + d23 - d13) < 1e-12 * d13);
  }

  SUBCASE("flat limit R = 0 is the coordinate distance") {
    CHECK(proper_distance_exact(1.0, 5.0, 0.0) == doctest::Approx(4.0).epsilon(1e-15));
  }

  SUBCASE("near the horizon the 2 sqrt(R dr) chart matches to O(dr/R)") {
    const double R = 1.0;
    const double d_exact = proper_distance_exact(R + 1e-8, R + 1e-4, R);
    const double d_chi = near_horizon_chi(1e-4, R) - near_horizon_chi(1e-8, R);
    CHECK(std::abs(d_exact - d_chi) / d_exact < 1e-4);
  }

  SUBCASE("derivative recovers sqrt(-g_rr)") {
    const double R = 1.0, r = 1.5;
    double prev_err = 0.0;
    for (int i = 0; i < 4; ++i) {
      const double delta = std::pow(10.0, -3 - i);
      const double quotient = proper_distance_exact(r, r + delta, R) / delta;
      const double target = std::sqrt(-metric_components(r, R).g_rr);
      const double err = std::abs(quotient - target);
      if (i > 0) CHECK(err < 0.2 * prev_err);  // first order in delta
      prev_err = err;
    }
  }

  CHECK_THROWS_AS(proper_distance_exact(0.9, 2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(proper_distance_exact(2.0, 1.5, 1.0), std::invalid_argument);
}

TEST_CASE("near-horizon metric and the equivalent acceleration") {
  CHECK(effective_acceleration(1.0) == 0.5);
  CHECK(effective_acceleration(2.0) == 0.25);
  CHECK(effective_acceleration(1e6) == doctest::Approx(5e-7));
  CHECK_THROWS_AS(effective_acceleration(0.0), std::invalid_argument);

  const double R = 1.0;
  CHECK(near_horizon_metric(2.0 * R, R).g_tt == doctest::Approx(1.0));  // c^2
  CHECK(near_horizon_metric(1e-9, R).g_tt < 1e-17);
  CHECK_THROWS_AS(near_horizon_metric(0.0, R), DegenerateHorizon);

  SUBCASE("bitwise match with the accelerated-frame time coefficient") {
    const RindlerFrame f{effective_acceleration(R)};
    for (const double chi : {1e-6, 0.01, 0.5, 1.0, 2.0, 7.3}) {
      const double from_rindler = rindler_interval({0.0, chi, 0, 0}, 1.0, 0, 0, 0, f);
      CHECK(near_horizon_metric(chi, R).g_tt == from_rindler);
    }
  }

  SUBCASE("relative error against the exact lapse is dr/R") {
    // The exact reference is the offset form of the metric: constructing
    // r = R + dr first would round away the digits under comparison, and the
    // ratio-minus-one form keeps the subtraction exact.
    for (const double R2 : {1.0, 3.7}) {
      for (const double ratio : {1e-2, 1e-4, 1e-6}) {
        const double dr = ratio * R2;
        const double g_exact = metric_components_offset(dr, R2).g_tt;
        const double g_near = near_horizon_metric(near_horizon_chi(dr, R2), R2).g_tt;
        const double rel = g_near / g_exact - 1.0;
        CHECK(std::abs(rel - ratio) < 1e-12);
      }
    }
  }

  SUBCASE("offset form is consistent with the r form at storable offsets") {
    for (const double dr : {1e-6, 1e-3, 0.5, 20.0}) {
      const auto a = metric_components_offset(dr, 1.0);
      const auto b = metric_components(1.0 + dr, 1.0);
      CHECK(std::abs(a.g_tt / b.g_tt - 1.0) < 1e-9);
      CHECK(std::abs(a.g_rr / b.g_rr - 1.0) < 1e-9);
    }
    CHECK_THROWS_AS(metric_components_offset(0.0, 1.0), CoordinateSingularity);
  }
}
