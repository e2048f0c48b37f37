#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hlab/potentials.hpp"
#include "hlab/scattering.hpp"

using namespace hlab;

namespace {

constexpr double kPi = std::numbers::pi;

// Closed forms for a constant barrier of height lam inside radius R, matched
// through modified Bessel functions.  These never touch the production
// integrator and serve as its oracle.

double bessel_gamma_2d(double z, int ell) {
  double num = 0.5 * (std::cyl_bessel_i(ell - 1, z) +
                      std::cyl_bessel_i(ell + 1, z));
  return z * num / std::cyl_bessel_i(ell, z);
}

double disc_b_2d(double lam, double R, int ell) {
  double z = std::sqrt(lam / 2.0) * R;
  double g = bessel_gamma_2d(z, ell);
  return std::pow(R, 2 * ell) * (g - ell) / (g + ell);
}

double disc_b0_2d(double lam, double R) {
  double z = std::sqrt(lam / 2.0) * R;
  double g = z * std::cyl_bessel_i(1.0, z) / std::cyl_bessel_i(0.0, z);
  return R * std::exp(-1.0 / g);
}

double sphere_b_3d(double lam, double R, int ell) {
  double z = std::sqrt(lam / 2.0) * R;
  double i0 = std::sinh(z) / z;
  double i1 = (z * std::cosh(z) - std::sinh(z)) / (z * z);
  double ratio = ell == 0 ? z * i1 / i0                    // z i0'/i0
                          : z * (i0 - 2.0 * i1 / z) / i1;  // i1' = i0 - 2 i1/z
  double gt = 1.0 + ratio;  // log-derivative of r^{1/2} I_{l+1/2}
  return std::pow(R, 2 * ell + 1) * (gt - (ell + 1)) / (gt + ell);
}

// Second oracle route for smooth potentials: classic RK4 in the radius on
// f'' = -(c/r) f' + v f / 2, with the channel parameter read off by solving
// f = A + B r^{-q} exactly through two force-free radii.
double rk4_channel_b(const ScaledPotential& p, int ell, int dim) {
  const int c = dim == 2 ? 2 * ell + 1 : 2 * ell + 2;
  const int q = dim == 2 ? 2 * ell : 2 * ell + 1;
  const double S = p.support_radius();
  auto rhs = [&](double r, double f, double fp) {
    return -c / r * fp + 0.5 * p(r) * f;
  };
  double r = 1e-6 * S;
  double alpha = p(0.0) / (4.0 * (1.0 + c));
  double f = 1.0 + alpha * r * r;
  double fp = 2.0 * alpha * r;
  double rA = 4.0 * S, fA = 0.0;
  for (int leg = 0; leg < 2; ++leg) {
    double stop = leg == 0 ? rA : 8.0 * S;
    int n = 200000;
    double h = (stop - r) / n;
    for (int i = 0; i < n; ++i) {
      double k1f = fp, k1p = rhs(r, f, fp);
      double k2f = fp + 0.5 * h * k1p,
             k2p = rhs(r + 0.5 * h, f + 0.5 * h * k1f, fp + 0.5 * h * k1p);
      double k3f = fp + 0.5 * h * k2p,
             k3p = rhs(r + 0.5 * h, f + 0.5 * h * k2f, fp + 0.5 * h * k2p);
      double k4f = fp + h * k3p, k4p = rhs(r + h, f + h * k3f, fp + h * k3p);
      f += h / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
      fp += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
      r += h;
    }
    if (leg == 0) fA = f;
  }
  double wA = std::pow(rA, -q), wB = std::pow(r, -q);
  double B = (fA - f) / (wA - wB);
  double A = fA - B * wA;
  return -B / A;
}

GridSpec fine_grid() {
  GridSpec g;
  g.points = 65536;
  return g;
}

}  // namespace

TEST_CASE("hard disc and hard sphere channel parameters are exact powers") {
  for (double R0 : {0.5, 1.0, 2.0}) {
    auto wall = RadialPotential::hard_core(R0);
    for (int ell = 1; ell <= 4; ++ell) {
      auto res = scattering_length(wall, ell, 2);
      CHECK(res.b == doctest::Approx(std::pow(R0, 2 * ell)).epsilon(1e-9));
      CHECK(res.fit_residual <= 1e-9);
    }
    for (int ell = 0; ell <= 3; ++ell) {
      auto res = scattering_length(wall, ell, 3);
      CHECK(res.b == doctest::Approx(std::pow(R0, 2 * ell + 1)).epsilon(1e-9));
    }
  }
}

TEST_CASE("logarithmic channel of a hard disc returns the core radius") {
  auto wall = RadialPotential::hard_core(0.7);
  GridSpec near;
  near.log_radius_factor = 5.0;
  GridSpec far;
  far.log_radius_factor = 50.0;
  auto res_near = scattering_length(wall, 0, 2, near);
  auto res_far = scattering_length(wall, 0, 2, far);
  CHECK(res_near.b == doctest::Approx(0.7).epsilon(1e-7));
  CHECK(res_far.b == doctest::Approx(0.7).epsilon(1e-7));
  CHECK(std::abs(res_near.b - res_far.b) <= 1e-6 * 0.7);
}

TEST_CASE("constant barrier matches the closed Bessel forms") {
  auto grid = fine_grid();
  for (double lam : {1.0, 4.0})
    for (int ell : {1, 2}) {
      auto disc = RadialPotential::soft_disc(lam, 1.0);
      auto res = scattering_length(disc, ell, 2, grid);
      CHECK(res.b ==
            doctest::Approx(disc_b_2d(lam, 1.0, ell)).epsilon(2e-6));
    }
  for (double lam : {1.0, 4.0})
    for (int ell : {0, 1}) {
      auto disc = RadialPotential::soft_disc(lam, 1.0);
      auto res = scattering_length(disc, ell, 3, grid);
      CHECK(res.b ==
            doctest::Approx(sphere_b_3d(lam, 1.0, ell)).epsilon(2e-6));
    }
  {
    auto disc = RadialPotential::soft_disc(2.0, 1.0);
    auto res = scattering_length(disc, 0, 2, grid);
    CHECK(res.b == doctest::Approx(disc_b0_2d(2.0, 1.0)).epsilon(2e-6));
    CHECK(!res.degenerate);
  }
}

TEST_CASE("gaussian channel parameters agree with an independent integrator") {
  auto g = RadialPotential::gaussian(1.5, 0.5);
  for (int dim : {2, 3})
    for (int ell : {1, 2}) {
      auto res = scattering_length(g, ell, dim, fine_grid());
      CHECK(res.b == doctest::Approx(rk4_channel_b(g, ell, dim)).epsilon(1e-6));
    }
  {
    auto res = scattering_length(g, 0, 3, fine_grid());
    CHECK(res.b == doctest::Approx(rk4_channel_b(g, 0, 3)).epsilon(1e-6));
  }
}

TEST_CASE("channel parameter scales as the matching power of a") {
  auto g = RadialPotential::gaussian(2.0, 0.5);
  double base2 = scattering_length(g, 1, 2).b;
  double base3 = scattering_length(g, 1, 3).b;
  for (double a : {0.5, 0.1}) {
    CHECK(scattering_length(scaled(g, a), 1, 2).b ==
          doctest::Approx(std::pow(a, 2) * base2).epsilon(1e-8));
    CHECK(scattering_length(scaled(g, a), 1, 3).b ==
          doctest::Approx(std::pow(a, 3) * base3).epsilon(1e-8));
  }
}

TEST_CASE("weak coupling approaches the Born moment from below") {
  auto shape = RadialPotential::gaussian(1.0, 0.6);
  for (int ell : {1, 2}) {
    for (double lam : {2.0, 0.5}) {
      auto p = ScaledPotential(shape.with_coupling(lam));
      double b = scattering_length(p, ell, 2, fine_grid()).b;
      double born = born_scattering_length(p, ell, 2);
      CHECK(b < born);
      CHECK(b > 0.0);
    }
    // at lam = 1e-4 the second-order deficit sinks below the grid error,
    // so only the Born value itself is resolvable
    auto p = ScaledPotential(shape.with_coupling(1e-4));
    double b = scattering_length(p, ell, 2, fine_grid()).b;
    CHECK(b == doctest::Approx(born_scattering_length(p, ell, 2))
                   .epsilon(1e-3));
  }

  // soft disc Born moment in closed form: lam R^{2l+2} / (8 l (l + 1))
  auto disc = RadialPotential::soft_disc(1.0, 1.0);
  CHECK(born_scattering_length(disc, 1, 2) ==
        doctest::Approx(1.0 / 16.0).epsilon(1e-12));

  CHECK(born_scattering_length(RadialPotential::hard_core(1.0), 1, 2) ==
        std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(born_scattering_length(disc, 0, 2), std::invalid_argument);
}

TEST_CASE("zero potentials flag the degenerate logarithmic channel") {
  auto z = RadialPotential::soft_disc(0.0, 1.0);
  auto res1 = scattering_length(z, 1, 2);
  CHECK(res1.b == 0.0);
  CHECK(!res1.degenerate);
  auto res0 = scattering_length(z, 0, 2);
  CHECK(res0.degenerate);
}

TEST_CASE("zero-energy profiles rise monotonically to one") {
  for (auto p : {RadialPotential::gaussian(2.0, 0.5),
                 RadialPotential::soft_disc(3.0, 1.0)}) {
    auto prof = zero_energy_profile(p, 1, 2);
    REQUIRE(prof.r.size() == prof.f.size());
    double prev = -1.0;
    for (double v : prof.f) {
      CHECK(v >= prev - 1e-12);
      prev = v;
    }
    // the normalised tail sits on the asymptote 1 - b r^{-2}, so the last
    // node falls short of one by exactly the channel parameter term
    double b = scattering_length(p, 1, 2).b;
    double rb = prof.r.back();
    CHECK(prof.f.back() ==
          doctest::Approx(1.0 - b / (rb * rb)).epsilon(1e-6));
    CHECK(prof.f.front() > 0.0);
  }

  auto wall_prof = zero_energy_profile(RadialPotential::hard_core(1.0), 1, 2);
  CHECK(wall_prof.inner_radius == doctest::Approx(1.0));
  CHECK(wall_prof.f.front() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(wall_prof.value_at(0.5) == 0.0);
  CHECK(wall_prof.value_at(1e9) == doctest::Approx(wall_prof.f.back()));
}

TEST_CASE("variational quadrature reproduces the channel energy") {
  // minimiser of the hard disc: f = 1 - r^-2, energy 4 pi b with b = 1
  auto wall = RadialPotential::hard_core(1.0);
  auto res = scattering_length(wall, 1, 2);
  CHECK(res.variational_energy == doctest::Approx(4.0 * kPi).epsilon(1e-6));

  auto sph = scattering_length(wall, 0, 3);
  CHECK(sph.variational_energy == doctest::Approx(4.0 * kPi).epsilon(1e-6));

  // constant trial profile: energy is half the bare moment.  For the
  // truncated gaussian the moment has the closed form
  // 2 pi h (w^4/2) (1 - e^-t (1 + t)), t = (support/width)^2.
  RadialProfile flat;
  flat.ell = 1;
  flat.dim = 2;
  flat.r.resize(4097);
  flat.f.assign(4097, 1.0);
  for (int i = 0; i <= 4096; ++i) flat.r[i] = 4.0 * i / 4096.0;
  auto gpot = RadialPotential::gaussian(1.0, 0.5, 3.0);
  double t = 9.0, w = 0.5;
  double moment = 2.0 * kPi * 0.5 * std::pow(w, 4) *
                  (1.0 - std::exp(-t) * (1.0 + t));
  CHECK(variational_energy(flat, gpot, 1, 2) ==
        doctest::Approx(0.5 * moment).epsilon(1e-5));

  // on a soft disc the true profile beats f = 1 and matches 4 pi ell b
  auto disc = RadialPotential::soft_disc(1.0, 1.0);
  double flat_energy = variational_energy(flat, disc, 1, 2);
  CHECK(flat_energy == doctest::Approx(kPi / 4.0).epsilon(1e-2));
  auto opt = scattering_length(disc, 1, 2, fine_grid());
  CHECK(opt.variational_energy < flat_energy);
  CHECK(opt.variational_energy ==
        doctest::Approx(4.0 * kPi * disc_b_2d(1.0, 1.0, 1)).epsilon(1e-4));
}

TEST_CASE("exact channel weights for the spherical average") {
  // products of 2j/(2j+1): 1, 2/3, 8/15, 16/35
  CHECK(c_factor_exact(0).num == 1);
  CHECK(c_factor_exact(0).den == 1);
  CHECK(c_factor_exact(1).num == 2);
  CHECK(c_factor_exact(1).den == 3);
  CHECK(c_factor_exact(2).num == 8);
  CHECK(c_factor_exact(2).den == 15);
  CHECK(c_factor_exact(3).num == 16);
  CHECK(c_factor_exact(3).den == 35);
  CHECK(c_factor(2) == doctest::Approx(8.0 / 15.0).epsilon(1e-15));
}

TEST_CASE("effective coupling branches by dimension and channel") {
  ScatteringResult res;
  res.dim = 2;
  res.ell = 2;
  res.b = 0.3;
  auto ec = effective_coupling(res, 0.1);
  CHECK(ec.coupling == doctest::Approx(8.0 * kPi * 2 * 0.3).epsilon(1e-15));
  CHECK(ec.scale_factor == doctest::Approx(1e-4).epsilon(1e-12));

  res.ell = 0;
  auto log_ec = effective_coupling(res, 0.1);
  CHECK(log_ec.coupling == doctest::Approx(8.0 * kPi).epsilon(1e-15));
  CHECK(log_ec.scale_factor ==
        doctest::Approx(1.0 / std::log(100.0)).epsilon(1e-12));
  CHECK_THROWS_AS(effective_coupling(res, 1.0), std::invalid_argument);

  res.dim = 3;
  res.ell = 1;
  auto ec3 = effective_coupling(res, 0.2, 0.7);
  // reduced parameter: (2/3) b enters through the exact channel weight
  CHECK(ec3.coupling ==
        doctest::Approx(8.0 * kPi * 3.0 * (2.0 / 3.0) * 0.3 * 0.7)
            .epsilon(1e-14));
  CHECK(ec3.scale_factor == doctest::Approx(0.008).epsilon(1e-12));
  CHECK_THROWS_AS(effective_coupling(res, 0.2), std::invalid_argument);

  CHECK_THROWS_AS(effective_coupling(res, 0.0, 0.7), std::invalid_argument);
  CHECK_THROWS_AS(effective_coupling(res, 1.2, 0.7), std::invalid_argument);
}

TEST_CASE("channel validation rejects unsupported sectors") {
  auto g = RadialPotential::gaussian(1.0, 0.5);
  CHECK_THROWS_AS(scattering_length(g, -1, 2), std::invalid_argument);
  CHECK_THROWS_AS(scattering_length(g, 1, 4), std::invalid_argument);
}
