#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hlab/eigensolve.hpp"
#include "hlab/operators.hpp"
#include "hlab/yrast.hpp"

using namespace hlab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("two-boson yrast curve in closed form") {
  // lowest channel: the relative momentum p is even, so L = 0 and L = 1
  // force p = 0 and pay the full contact energy gamma/pi, while every
  // L >= 2 reaches an interaction-free state via p = 2.  The ground
  // momentum drops from 2 to 0 once lambda exceeds gamma / (2 pi).
  double gamma = 1.0;

  for (double lambda : {0.05, 0.1}) {
    auto curve = yrast_scan(2, 0, Statistics::Bose, 0, 8, lambda, gamma);
    REQUIRE(!curve.points.empty());
    for (const auto& pt : curve.points) {
      double expect = pt.L <= 1 ? gamma / kPi + (2.0 + pt.L) * lambda
                                : lambda * (2.0 + pt.L);
      CHECK(pt.energy == doctest::Approx(expect).epsilon(1e-12));
    }
    CHECK(curve.ground_L == 2);
    // the L = 2 ground state is exactly the pair-product state of degree 2
    CHECK(curve.laughlin_m == 2);
    CHECK(curve.overlap_with_laughlin == doctest::Approx(1.0).epsilon(1e-12));
  }

  for (double lambda : {0.2, 0.3}) {
    auto curve = yrast_scan(2, 0, Statistics::Bose, 0, 8, lambda, gamma);
    CHECK(curve.ground_L == 0);
    // comparison state lives at L = 2, so the overlap vanishes
    CHECK(curve.overlap_with_laughlin == 0.0);
  }

  // threshold scales with gamma
  CHECK(yrast_scan(2, 0, Statistics::Bose, 0, 8, 0.25, 2.0).ground_L == 2);
  CHECK(yrast_scan(2, 0, Statistics::Bose, 0, 8, 0.35, 2.0).ground_L == 0);
}

TEST_CASE("yrast points agree with direct sector minimisation") {
  int N = 3, ell = 0;
  double lambda = 0.05, gamma = 1.0;
  auto curve = yrast_scan(N, ell, Statistics::Bose, 0, 9, lambda, gamma);
  for (const auto& pt : curve.points) {
    auto basis = build_basis(N, pt.L, Statistics::Bose);
    REQUIRE(basis.size() == static_cast<std::size_t>(pt.sector_dim));
    auto h = pseudo_hamiltonian(basis, ell);
    auto spec = spectrum(h, 1);
    double expect = gamma * spec.values[0] + lambda * (N + pt.L);
    CHECK(pt.energy == doctest::Approx(expect).epsilon(1e-12));
  }
  // the reported ground momentum attains the minimum over the scan
  double best = 1e300, at_ground = 1e300;
  for (const auto& pt : curve.points) {
    best = std::min(best, pt.energy);
    if (pt.L == curve.ground_L) at_ground = pt.energy;
  }
  CHECK(at_ground == doctest::Approx(best).epsilon(1e-14));
}

TEST_CASE("gamma rescales only the interaction part") {
  auto c1 = yrast_scan(2, 0, Statistics::Bose, 0, 6, 0.1, 1.0);
  auto c2 = yrast_scan(2, 0, Statistics::Bose, 0, 6, 0.1, 2.0);
  REQUIRE(c1.points.size() == c2.points.size());
  for (std::size_t i = 0; i < c1.points.size(); ++i) {
    double trap = 0.1 * (2.0 + c1.points[i].L);
    CHECK(c2.points[i].energy - trap ==
          doctest::Approx(2.0 * (c1.points[i].energy - trap))
              .epsilon(1e-10));
  }
}

TEST_CASE("yrast input validation") {
  CHECK_THROWS_AS(yrast_scan(2, 0, Statistics::Bose, 5, 3, 0.1, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(yrast_scan(2, 0, Statistics::Bose, 0, 8, -0.1, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(yrast_scan(2, 0, Statistics::Bose, 0, 8, 0.1, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(yrast_scan(2, 0, Statistics::None, 0, 8, 0.1, 1.0),
                  std::invalid_argument);
}
