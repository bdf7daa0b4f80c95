#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "horizonlab/errors.hpp"
#include "horizonlab/events.hpp"
#include "horizonlab/rindler.hpp"
#include "horizonlab/units.hpp"

using namespace horizonlab;

TEST_CASE("interval classification on canonical displacements") {
  const MinkowskiEvent o{0, 0, 0, 0};
  auto iv = interval_minkowski(o, {1, 0, 0, 0});
  CHECK(iv.ds2 == doctest::Approx(1.0));
  CHECK(iv.cls == CausalClass::TimelikeFuture);

  iv = interval_minkowski(o, {0, 1, 0, 0});
  CHECK(iv.ds2 == doctest::Approx(-1.0));
  CHECK(iv.cls == CausalClass::Spacelike);

  iv = interval_minkowski(o, {1, 1, 0, 0});
  CHECK(iv.ds2 == 0.0);
  CHECK(iv.cls == CausalClass::Lightlike);

  iv = interval_minkowski(o, o);
  CHECK(iv.cls == CausalClass::Zero);

  iv = interval_minkowski(o, {-2, 0.5, 0, 0});
  CHECK(iv.cls == CausalClass::TimelikePast);
}

TEST_CASE("interval rejects non-finite components") {
  const MinkowskiEvent o{0, 0, 0, 0};
  CHECK_THROWS_AS(interval_minkowski(o, {std::nan(""), 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(interval_minkowski({0, INFINITY, 0, 0}, o), std::invalid_argument);
}

TEST_CASE("causal_reachable basics") {
  CHECK(causal_reachable({0, 1, 0, 0}, {2, 1, 0, 0}));
  CHECK_FALSE(causal_reachable({0, 1, 0, 0}, {1, 3, 0, 0}));  // spacelike
  // lightlike forward reachable, backward not
  CHECK(causal_reachable({0, 0, 0, 0}, {1, 1, 0, 0}));
  CHECK_FALSE(causal_reachable({1, 1, 0, 0}, {0, 0, 0, 0}));
}

TEST_CASE("reachability is antisymmetric for causal pairs") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int i = 0; i < 2000; ++i) {
    const MinkowskiEvent a{u(rng), u(rng), u(rng), u(rng)};
    const MinkowskiEvent b{u(rng), u(rng), u(rng), u(rng)};
    if (causal_reachable(a, b)) CHECK_FALSE(causal_reachable(b, a));
  }
}

TEST_CASE("one-way channel across the horizon") {
  // The fiducial observer's tau = 0 event can signal an event on the
  // free-fall line that lies beyond the horizon; nothing comes back from it
  // to any point of the hyperbola.
  const RindlerFrame f{1.0};
  const MinkowskiEvent beyond{1.2, 1.0, 0, 0};  // ct > x
  CHECK(causal_reachable(rob_worldline(f, 0.0), beyond));
  for (double tau = 0.0; tau <= 10.0; tau += 0.01) {
    CHECK_FALSE(causal_reachable(beyond, rob_worldline(f, tau)));
  }
}

TEST_CASE("interval is translation invariant") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  for (int i = 0; i < 2000; ++i) {
    const MinkowskiEvent a{u(rng), u(rng), u(rng), u(rng)};
    const MinkowskiEvent b{u(rng), u(rng), u(rng), u(rng)};
    const MinkowskiEvent d{u(rng), u(rng), u(rng), u(rng)};
    const MinkowskiEvent as{a.ct + d.ct, a.x + d.x, a.y + d.y, a.z + d.z};
    const MinkowskiEvent bs{b.ct + d.ct, b.x + d.x, b.y + d.y, b.z + d.z};
    const double ds2 = interval_minkowski(a, b).ds2;
    const double ds2s = interval_minkowski(as, bs).ds2;
    const double scale = std::max({1.0, std::abs(ds2), std::abs(ds2s)});
    CHECK(std::abs(ds2 - ds2s) / scale < 1e-12);
  }
}

TEST_CASE("unit conversions") {
  // one second of light travel
  CHECK(convert_units(1.0, Dimension::Time, UnitDirection::SiToGeometric) ==
        doctest::Approx(2.99792458e8).epsilon(1e-15));
  CHECK(convert_units(0.0, Dimension::Mass, UnitDirection::SiToGeometric) == 0.0);
  CHECK(convert_units(5.0, Dimension::Length, UnitDirection::GeometricToSi) == 5.0);

  // solar mass to Schwarzschild radius, R = 2 G M / c^2
  const double m_geo = convert_units(1.989e30, Dimension::Mass, UnitDirection::SiToGeometric);
  CHECK(2.0 * m_geo == doctest::Approx(2.95e3).epsilon(2e-3));

  SUBCASE("round trips are identities") {
    for (const auto dim : {Dimension::Length, Dimension::Time, Dimension::Mass,
                           Dimension::Acceleration}) {
      const double v = 123.456;
      const double g = convert_units(v, dim, UnitDirection::SiToGeometric);
      const double back = convert_units(g, dim, UnitDirection::GeometricToSi);
      CHECK(std::abs(back - v) / v < 1e-14);
    }
  }
}
