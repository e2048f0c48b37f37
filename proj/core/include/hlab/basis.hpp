#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace hlab {

enum class Statistics { Bose, Fermi, None };

// N-body lowest-level basis at fixed total angular momentum L.  Elements are
// exponent multi-indices mu with sum L: weakly decreasing for Bose, strictly
// decreasing for Fermi, arbitrary ordered tuples for None (N = 2 only).  The
// underlying orbitals are z^m Gaussians with squared norm pi * m!, so
// distinct multi-indices are orthogonal and each listed element stands for
// the corresponding normalised (anti)symmetrised vector.
class LLLBasis {
 public:
  LLLBasis(int N, long L, Statistics stats,
           std::vector<std::vector<int>> elements);

  int particles() const { return N_; }
  long total_momentum() const { return L_; }
  Statistics statistics() const { return stats_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<int>& element(std::size_t i) const { return elements_[i]; }
  const std::vector<std::vector<int>>& elements() const { return elements_; }

  // Position of a multi-index already in canonical order; npos if absent.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t index_of(const std::vector<int>& mu) const;

 private:
  int N_;
  long L_;
  Statistics stats_;
  std::vector<std::vector<int>> elements_;
  struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const;
  };
  std::unordered_map<std::vector<int>, std::size_t, VecHash> index_;
};

// Enumerates the basis in reverse-lexicographic order (largest leading
// exponent first).  Bose: partitions of L into at most N parts; Fermi:
// strict partitions into N distinct parts; None: ordered pairs, N = 2 only.
LLLBasis build_basis(int N, long L, Statistics stats);

// Dimension of the subspace of states divisible by the ell-th power of the
// pairwise-difference product, within the given statistics sector, at fixed
// total momentum L.  Statistics forces the parity of the power: an odd power
// for Bose (or even for Fermi) is promoted to ell + 1 because the cofactor
// must itself change sign under transpositions.
long dim_b_ell(int N, long L, int ell, Statistics stats);

// Partitions of d into at most k parts (helper exposed for oracle tests).
long partition_count(long d, int k);

// Binomial coefficient as a long; throws on overflow at desk scale.
long binomial(int n, int k);

}  // namespace hlab
