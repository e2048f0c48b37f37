#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hlab/potentials.hpp"

namespace hlab {

struct GridSpec {
  int points = 4096;          // radial nodes of the integration grid
  double match_factor = 4.0;  // matching radius R_match = factor * support
  double inner_cut = 1e-4;    // first node at inner_cut * support (no core)
  double log_radius_factor = 10.0;  // outer radius R = factor * support for
                                    // the logarithmic 2D s-wave channel
};

// Zero-energy channel profile f(r): f -> 1 far out (or f(R) = 1 for the
// logarithmic channel), f = 0 inside a hard core.
struct RadialProfile {
  std::vector<double> r;
  std::vector<double> f;
  int ell = 0;
  int dim = 2;
  double inner_radius = 0.0;  // hard-core wall, 0 otherwise

  // Linear interpolation; constant beyond the last node, 0 below a wall.
  double value_at(double radius) const;
};

struct ScatteringResult {
  int ell = 0;
  int dim = 2;
  double b = 0.0;                  // channel scattering parameter
  double variational_energy = 0.0; // quadrature of the defining functional
  double matching_radius = 0.0;
  double fit_residual = 0.0;       // rms misfit of the analytic tail form
  bool degenerate = false;         // v == 0 in the logarithmic channel
  RadialProfile profile;
};

// Radial zero-energy equation -f'' - (c/r) f' + v f / 2 = 0 integrated
// outward on a logarithmic grid, c = 2*ell+1 in 2D (ell >= 1) and 2*ell+2
// in 3D (ell >= 0).  The returned profile is normalised to f -> 1.
RadialProfile zero_energy_profile(const ScaledPotential& p, int ell, int dim,
                                  const GridSpec& grid = {});

// 2D ell = 0 variant: solved on [0, R] with the outer constraint f(R) = 1;
// outside the support f follows log(r / b0) up to normalisation.
RadialProfile swave_log_profile(const ScaledPotential& p, double R,
                                const GridSpec& grid = {});

// Channel scattering parameter b from the tail of the zero-energy profile:
// f = 1 - b r^{-2 ell} (2D, ell >= 1), f = 1 - b r^{-(2 ell + 1)} (3D), or
// f ~ log(r / b) in the logarithmic 2D channel.  The tail is fitted by least
// squares over the force-free nodes beyond 1.25x the support; results whose
// fit residual stays above 1e-9 after grid refinement are refused.
ScatteringResult scattering_length(const ScaledPotential& p, int ell, int dim,
                                   const GridSpec& grid = {});

// Weak-coupling approximation: moment integral of |x|^{2 ell} v divided by
// 8 pi ell (2D) or 8 pi (2 ell + 1) (3D).  Always an upper bound for b.
// +infinity for hard cores; undefined (throws) for the logarithmic channel.
double born_scattering_length(const ScaledPotential& p, int ell, int dim);

// Quadrature of the channel energy functional for an arbitrary profile:
// integral of |x|^{2 ell} (f'^2 + v f^2 / 2) over the plane or space, with
// the analytic tail contribution beyond the last grid node.  Equals
// 4 pi ell b (2D) or 4 pi (2 ell + 1) b (3D) on the minimiser.
double variational_energy(const RadialProfile& profile,
                          const ScaledPotential& p, int ell, int dim);

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / den; }
};

// Spherical average of the 3D channel weight: the exact rational product of
// 2j / (2j + 1) for j = 1..ell.  Enters the 3D coupling multiplicatively.
Rational c_factor_exact(int ell);

inline double c_factor(int ell) { return c_factor_exact(ell).value(); }

struct EffectiveCoupling {
  double coupling = 0.0;     // prefactor of the projected pair operator
  double scale_factor = 0.0; // power of a (or 1/log(1/a^2)) scaled out
};

// Coupling constant of the projected limit operator for interaction range a:
// 2D ell >= 1: 8 pi ell b with scale a^{2 ell};
// 2D ell  = 0: 8 pi with scale 1/log(1/a^2)  (requires a < 1);
// 3D: 8 pi (2 ell + 1) c_ell b chi4 with scale a^{2 ell + 1}, where chi4 is
// the quartic integral of the transverse confinement ground state.
EffectiveCoupling effective_coupling(const ScatteringResult& res, double a,
                                     std::optional<double> chi4 = {});

struct ConfinementProfile {
  std::vector<double> u;
  std::vector<double> chi;      // normalised ground state
  double energy = 0.0;          // Richardson-refined lowest eigenvalue
  double quartic_integral = 0.0;  // integral of chi^4
};

// Ground state of -d^2/du^2 + V(u) with Dirichlet walls at the domain ends,
// second-order finite differences refined over two resolutions.  Throws when
// the ground state piles up at the artificial boundary instead of the well.
ConfinementProfile confinement_ground_state(
    const std::function<double(double)>& V, double u_min, double u_max,
    int points = 2000);

}
