#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "hlab/potentials.hpp"

namespace hlab {

// Radial grid for the relative-coordinate solve.  The grid is generated by
// a fixed grading map (uniform across the interaction region, geometric out
// to the knee, uniform across the magnetic well; for a hard wall, geometric
// from the wall), so doubling `points` halves every step and Richardson
// extrapolation over (n, 2n) is valid.  Node counts are rounded to
// multiples of 8.
struct TwoBodyGrid {
  int points = 1024;  // intervals of the base grid
  double r_max = 5.65685424949238;  // eight magnetic lengths
  double knee = 1.0;  // geometric-to-uniform handover radius
};

// Relative two-particle magnetic Hamiltonian restricted to relative angular
// momentum ell, discretised on [wall or 0, r_max].  After the separation of
// the centre of mass with the symmetric root-two map, the radial operator
// on u(r) is -u'' - u'/r + (ell^2/r^2 + r^2 - 2 ell - 2 + v_a(sqrt(2) r)) u
// with measure r dr; the lowest free eigenvalues are 0, 4, 8.  Internally
// the substitution u = r^ell w removes the centrifugal term and the form is
// discretised by linear finite elements with a lumped weight, giving a
// symmetric tridiagonal matrix.
struct RelativeSectorOperator {
  int ell = 0;
  double a = 1.0;
  int n_levels = 3;
  bool has_wall = false;
  double wall_radius = 0.0;
  std::vector<double> r;   // interior nodes (unknowns)
  Eigen::VectorXd diag;    // symmetric tridiagonal after weight scaling
  Eigen::VectorXd sub;
};

RelativeSectorOperator relative_sector_operator(const RadialPotential& p,
                                                double a, int ell,
                                                const TwoBodyGrid& grid = {},
                                                int n_levels = 3);

// Lowest op.n_levels eigenvalues of the discretised sector, ascending.
std::vector<double> sector_spectrum(const RelativeSectorOperator& op);

// Ground eigenvalue Richardson-extrapolated over the base and doubled grid.
double sector_ground_energy(const RadialPotential& p, double a, int ell,
                            const TwoBodyGrid& grid = {});

// Expectation of the channel-ell contact pair operator in the normalised
// two-particle state with relative momentum ell and centre of mass in its
// ground orbital: 1 / (2^{ell+1} pi ell!).  Fixed by the Gaussian integral
// of the relative density against the channel weight.
double pair_contact_expectation(int ell);

// Limit of the scaled ground energy: a^{-2 ell} E_ell(a) -> 8 pi ell b_ell
// times pair_contact_expectation(ell) for ell >= 1; for ell = 0 the scale
// is ln(1/a^2) and the limit 8 pi times pair_contact_expectation(0) = 4,
// independent of the potential.  Zero potentials give 0.
double limit_prediction(const RadialPotential& p, int ell);

struct ConvergenceRow {
  double a = 0.0;
  double energy = 0.0;
  double scaled = 0.0;  // a^{-2 ell} E or ln(1/a^2) E
};

struct ConvergenceStudy {
  int ell = 0;
  std::vector<ConvergenceRow> rows;  // ordered by decreasing a
  double predicted_limit = 0.0;
  double extrapolated = 0.0;  // geometric-sequence extrapolation of scaled
  std::string abort_reason;   // nonempty: a solve failed, rows hold the
                              // completed prefix
};

// Runs sector_ground_energy over a decreasing list of scales and reports
// scaled energies, the predicted limit, and a geometric extrapolation from
// the last three rows.
ConvergenceStudy convergence_study(const RadialPotential& p, int ell,
                                   const std::vector<double>& a_list,
                                   const TwoBodyGrid& grid = {});

}  // namespace hlab
