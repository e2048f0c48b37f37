#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hlab/potentials.hpp"

using namespace hlab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("constructors validate their arguments") {
  CHECK_THROWS_AS(RadialPotential::hard_core(0.0), std::invalid_argument);
  CHECK_THROWS_AS(RadialPotential::hard_core(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(RadialPotential::soft_disc(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(RadialPotential::soft_disc(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(RadialPotential::gaussian(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(RadialPotential::gaussian(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(RadialPotential::tabulated({0.0, 1.0}, {1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(RadialPotential::tabulated({0.5, 1.0}, {1.0, 0.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(RadialPotential::tabulated({0.0, 1.0, 1.0}, {1.0, 0.5, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("pointwise values match the declared shapes") {
  auto wall = RadialPotential::hard_core(0.75);
  CHECK(wall(0.0) == std::numeric_limits<double>::infinity());
  CHECK(wall(0.74) == std::numeric_limits<double>::infinity());
  CHECK(wall(0.76) == 0.0);
  CHECK(wall.has_hard_core());
  CHECK(wall.core_radius() == 0.75);
  CHECK(wall.support_radius() == 0.75);

  auto disc = RadialPotential::soft_disc(3.5, 1.25);
  CHECK(disc(0.0) == 3.5);
  CHECK(disc(1.2499) == 3.5);
  CHECK(disc(1.25) == 0.0);
  CHECK(!disc.has_hard_core());

  auto g = RadialPotential::gaussian(2.0, 0.5, 4.0);
  CHECK(g(0.0) == 2.0);
  CHECK(g(0.5) == doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-14));
  CHECK(g.support_radius() == 2.0);
  CHECK(g(2.0) == 0.0);

  CHECK_THROWS_AS(g(-0.1), std::domain_error);
}

TEST_CASE("coupling rescales the finite part and rejects walls") {
  auto g = RadialPotential::gaussian(2.0, 0.5);
  auto g3 = g.with_coupling(3.0);
  CHECK(g3(0.3) == doctest::Approx(3.0 * g(0.3)).epsilon(1e-15));
  CHECK(g3.support_radius() == g.support_radius());
  CHECK(g.with_coupling(0.0).is_zero());
  CHECK(!g3.is_zero());
  CHECK_THROWS_AS(RadialPotential::hard_core(1.0).with_coupling(2.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(g.with_coupling(-1.0), std::invalid_argument);
}

TEST_CASE("tabulated interpolation reproduces samples and stays bounded") {
  std::vector<double> r = {0.0, 0.2, 0.5, 0.9, 1.4};
  std::vector<double> v = {2.0, 1.5, 0.9, 0.2, 0.0};
  auto p = RadialPotential::tabulated(r, v);
  for (std::size_t i = 0; i < r.size(); ++i)
    CHECK(p(r[i]) == doctest::Approx(v[i]).epsilon(1e-14));

  // monotone data: the interpolant may not overshoot the bracketing samples
  for (std::size_t i = 0; i + 1 < r.size(); ++i)
    for (int j = 1; j < 40; ++j) {
      double x = r[i] + (r[i + 1] - r[i]) * j / 40.0;
      CHECK(p(x) <= v[i] + 1e-12);
      CHECK(p(x) >= v[i + 1] - 1e-12);
    }

  CHECK(p(1.4) == 0.0);
  CHECK(p(5.0) == 0.0);
  CHECK(p.support_radius() == 1.4);
}

TEST_CASE("tabulated values are clamped to be repulsive") {
  auto p = RadialPotential::tabulated({0.0, 1.0, 2.0}, {1.0, -3.0, 0.0});
  for (double x : {0.3, 0.9, 1.0, 1.5, 1.9}) CHECK(p(x) >= 0.0);
  auto z = RadialPotential::tabulated({0.0, 1.0}, {-2.0, -1.0});
  CHECK(z.is_zero());
}

TEST_CASE("scaled potential shrinks the support and strengthens the value") {
  auto g = RadialPotential::gaussian(1.7, 0.4);
  double a = 0.2;
  auto pa = scaled(g, a);
  for (double x : {0.01, 0.05, 0.1, 0.2}) {
    CHECK(pa(x) == doctest::Approx(g(x / a) / (a * a)).epsilon(1e-15));
  }
  CHECK(pa.support_radius() == doctest::Approx(a * g.support_radius()));
  CHECK(!pa.has_hard_core());
  CHECK(scaled(RadialPotential::hard_core(0.7), 0.5).core_radius() ==
        doctest::Approx(0.35));

  CHECK_THROWS_AS(scaled(g, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(scaled(g, -0.3), std::invalid_argument);
  CHECK_THROWS_AS(scaled(g, 1.5), std::invalid_argument);

  // implicit embedding at a = 1
  ScaledPotential p1 = g;
  CHECK(p1.a == 1.0);
  CHECK(p1(0.3) == g(0.3));
}

TEST_CASE("moment integrals match closed forms and the scaling law") {
  // soft disc: integral of |x|^k h over the ball of radius R
  double h = 2.25, R = 1.3;
  auto disc = RadialPotential::soft_disc(h, R);
  for (int dim : {2, 3}) {
    double angular = dim == 2 ? 2.0 * kPi : 4.0 * kPi;
    for (int k : {0, 1, 2, 4}) {
      double exact = angular * h * std::pow(R, k + dim) / (k + dim);
      CHECK(radial_moment(disc, k, dim) ==
            doctest::Approx(exact).epsilon(1e-12));
    }
  }

  // moment of the scaled profile picks up a^{k+dim-2}
  auto g = RadialPotential::gaussian(1.0, 0.5);
  for (int dim : {2, 3})
    for (int k : {0, 2}) {
      double base = radial_moment(g, k, dim);
      for (double a : {0.5, 0.1}) {
        double expect = std::pow(a, k + dim - 2) * base;
        CHECK(radial_moment(scaled(g, a), k, dim) ==
              doctest::Approx(expect).epsilon(1e-12));
      }
    }

  CHECK(radial_moment(RadialPotential::hard_core(1.0), 0, 2) ==
        std::numeric_limits<double>::infinity());
  CHECK(radial_moment(RadialPotential::soft_disc(0.0, 1.0), 2, 3) == 0.0);
  CHECK_THROWS_AS(radial_moment(g, -1, 2), std::invalid_argument);
  CHECK_THROWS_AS(radial_moment(g, 0, 4), std::invalid_argument);
}
