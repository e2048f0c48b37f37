#pragma once

#include <Eigen/Dense>

#include "hlab/basis.hpp"

namespace hlab {

// Unit-norm coefficient vector of the degree-m pairwise-difference product
// state (times the Gaussian) in the given basis: exact integer expansion of
// the polynomial, then per-element weighting by the (anti)symmetrised
// monomial norms.  Requires basis.L = m N(N-1)/2 and statistics matching the
// parity of m (even: Bose, odd: Fermi).
Eigen::VectorXd laughlin_vector(int N, int m, const LLLBasis& basis);

}  // namespace hlab
