#pragma once

#include <Eigen/Dense>
#include <vector>

#include "hlab/basis.hpp"

namespace hlab {

struct YrastPoint {
  long L = 0;
  double energy = 0.0;  // lowest eigenvalue of gamma*h_ell + lambda*(N+L)
  long sector_dim = 0;
};

struct YrastCurve {
  int N = 0;
  int ell = 0;
  Statistics stats = Statistics::Bose;
  double lambda = 0.0;
  double gamma = 1.0;
  std::vector<YrastPoint> points;  // nonempty sectors only, ascending L
  long ground_L = 0;
  Eigen::VectorXd ground_vector;   // within the ground_L basis
  int laughlin_m = 0;              // parity-matched comparison exponent
  double overlap_with_laughlin = 0.0;
};

// Scans total angular momentum over [L_min, L_max], taking at each L the
// lowest eigenvalue of gamma * (contact pair Hamiltonian in channel ell)
// plus the trap term lambda * (N + L).  The global ground state is compared
// with the pairwise-product state of exponent ell + 1 (raised to ell + 2
// when that parity conflicts with the statistics); if the ground momentum
// differs from that state's momentum the overlap is 0.  Degenerate ground
// levels are handled by projecting onto the whole lowest eigenspace.
YrastCurve yrast_scan(int N, int ell, Statistics stats, long L_min,
                      long L_max, double lambda, double gamma);

}  // namespace hlab
