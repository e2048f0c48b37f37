#pragma once

#include <Eigen/Dense>

#include "hlab/operators.hpp"

namespace hlab {

struct SolveOptions {
  int dense_threshold = 2000;  // below: direct dense symmetric solve
  unsigned long seed = 20240817ul;  // iterative start vector
  double tol = 1e-11;          // relative residual for iterative Ritz pairs
};

struct Spectrum {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // columns, sign-fixed: first nonzero entry > 0
};

// Lowest `count` eigenpairs of a symmetric operator block (count clamps to
// the dimension).  Dense below the threshold; above it a Lanczos iteration
// with full reorthogonalisation and a seeded deterministic start, falling
// back to dense if the subspace saturates without converging.
Spectrum spectrum(const OperatorMatrix& op, int count,
                  const SolveOptions& opts = {});

// Number of eigenvalues below tol; tol < 0 selects the default threshold
// 1e-10 times the largest eigenvalue magnitude, or 1 when the matrix is
// zero (so a zero block reports full kernel).  Always a dense solve: kernel
// counting is used on desk-scale blocks where exactness beats speed.
long kernel_dimension(const OperatorMatrix& op, double tol = -1.0);

}  // namespace hlab
