#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "hlab/basis.hpp"
#include "hlab/potentials.hpp"

namespace hlab {

// Symmetric operator on a fixed-momentum block.  The basis outlives the
// matrix (non-owning pointer); all assembly routines below guarantee exact
// symmetry of the stored sparse matrix.
struct OperatorMatrix {
  const LLLBasis* basis = nullptr;
  Eigen::SparseMatrix<double> mat;

  std::size_t dimension() const { return mat.rows(); }
};

// Amplitudes of the normalised two-orbital product |m1, m2> on the
// centre-of-mass/relative orbitals |M - p>|p>, M = m1 + m2, under the
// symmetric root-two rotation z_c = (z1 + z2)/sqrt(2), z_r = (z1 - z2)/
// sqrt(2).  Row index p runs 0..M.  The rotation is unitary: rows of the
// (m1, m2) table are orthonormal.  Integer binomial sums are carried exactly
// and scaled by factorial square roots in extended precision.
Eigen::VectorXd pair_rotation_amplitudes(int m1, int m2);

// Sum over particle pairs of the projector onto relative angular momentum
// ell inside each pair.  Eigenvalues lie in [0, N(N-1)/2]; a true projector
// only at N = 2.
OperatorMatrix pair_projector_matrix(const LLLBasis& basis, int ell);

// (pi * ell!)^{-1} times pair_projector_matrix: the contact pair operator
// summed over pairs, restricted to the block.
OperatorMatrix pseudo_hamiltonian(const LLLBasis& basis, int ell);

// Sum of pseudo_hamiltonian over all channels up to and including ell.  Its
// kernel is exactly the subspace counted by dim_b_ell(N, L, ell + 1, stats):
// killing every channel ell' <= ell forces each pair's relative wavefunction
// to vanish to order ell + 1, hence divisibility by the full pairwise
// product to that power.  A single channel's kernel is larger whenever
// smaller admissible relative momenta exist.
OperatorMatrix cascade_hamiltonian(const LLLBasis& basis, int ell);

// Diagonal total angular momentum: L times the identity on the block.  The
// trap term of yrast scans is lambda * (N + L) times the identity.
OperatorMatrix angular_momentum_matrix(const LLLBasis& basis);

// Channel weight of the interaction in the lowest-level expansion:
// (pi ell!)^{-1} * integral over the plane of |w|^{2 ell} e^{-|w|^2}
// v(sqrt(2) |w|).  The sqrt(2) carries the inter-particle distance into the
// relative coordinate.  Hard cores have no finite channel weights.
double haldane_coefficient(const ScaledPotential& p, int ell);

// Interaction summed over pairs and compressed to the lowest level: equals
// the finite sum over channels of haldane_coefficient(p, ell') times
// pair_projector_matrix(basis, ell').
OperatorMatrix lll_interaction_matrix(const LLLBasis& basis,
                                      const ScaledPotential& p);

}  // namespace hlab
