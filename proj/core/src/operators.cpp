#include "hlab/operators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "hlab/quadrature.hpp"

namespace hlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxMomentum = 62;  // binomial table stays within int64

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

const std::vector<std::vector<long long>>& binomial_table() {
  static const std::vector<std::vector<long long>> table = [] {
    std::vector<std::vector<long long>> t(kMaxMomentum + 1);
    for (int n = 0; n <= kMaxMomentum; ++n) {
      t[n].assign(n + 1, 1);
      for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
  }();
  return table;
}

const std::vector<long double>& factorial_table() {
  static const std::vector<long double> table = [] {
    std::vector<long double> t(kMaxMomentum + 2, 1.0L);
    for (std::size_t n = 1; n < t.size(); ++n) t[n] = t[n - 1] * n;
    return t;
  }();
  return table;
}

// Kernel of a pair operator at fixed pair momentum M, between ordered
// two-orbital products: entry (a, c) is <a, M-a| O |c, M-c>.  An empty
// matrix stands for the zero kernel.
using PairKernel = std::function<Eigen::MatrixXd(int)>;

// Amplitude vectors for all first exponents at fixed M: row c holds
// pair_rotation_amplitudes(c, M - c).
Eigen::MatrixXd rotation_rows(int M) {
  Eigen::MatrixXd rows(M + 1, M + 1);
  for (int c = 0; c <= M; ++c)
    rows.row(c) = pair_rotation_amplitudes(c, M - c).transpose();
  return rows;
}

// Second-quantised assembly of sum_{i<j} O_ij from the distinguishable pair
// kernel: 1/2 sum <ab|O|cd> adag_a adag_b a_d a_c with bosonic or fermionic
// algebra, or the direct two-particle action for distinguishable pairs.
Eigen::SparseMatrix<double> assemble_pair_operator(const LLLBasis& basis,
                                                   const PairKernel& kernel) {
  const std::size_t dim = basis.size();
  const int n = basis.particles();
  const long L = basis.total_momentum();
  Eigen::SparseMatrix<double> mat(dim, dim);
  if (dim == 0) return mat;

  std::vector<Eigen::MatrixXd> kernels(L + 1);
  for (long M = 0; M <= L; ++M) kernels[M] = kernel(static_cast<int>(M));

  std::vector<Eigen::Triplet<double>> trips;
  std::vector<int> scratch;

  auto canonical_index = [&](std::vector<int>& mu) {
    std::sort(mu.begin(), mu.end(), std::greater<int>());
    return basis.index_of(mu);
  };

  if (basis.statistics() == Statistics::None) {
    for (std::size_t J = 0; J < dim; ++J) {
      const auto& el = basis.element(J);
      int c = el[0], d = el[1];
      int M = c + d;
      const Eigen::MatrixXd& K = kernels[M];
      if (K.size() == 0) continue;
      for (int a = 0; a <= M; ++a) {
        double val = K(a, c);
        if (val == 0.0) continue;
        std::size_t I = basis.index_of({a, M - a});
        trips.emplace_back(static_cast<int>(I), static_cast<int>(J), val);
      }
    }
  } else if (basis.statistics() == Statistics::Bose) {
    std::vector<int> occ(L + 1, 0);
    for (std::size_t J = 0; J < dim; ++J) {
      std::fill(occ.begin(), occ.end(), 0);
      for (int m : basis.element(J)) ++occ[m];
      std::vector<int> occupied;
      for (long m = 0; m <= L; ++m)
        if (occ[m] > 0) occupied.push_back(static_cast<int>(m));

      for (int c : occupied) {
        for (int d : occupied) {
          if (c == d && occ[c] < 2) continue;
          int M = c + d;
          const Eigen::MatrixXd& K = kernels[M];
          if (K.size() == 0) continue;
          // a_d a_c with root-occupation amplitudes
          double amp_ann = std::sqrt(static_cast<double>(occ[c])) *
                           std::sqrt(static_cast<double>(occ[d] - (c == d)));
          occ[c] -= 1;
          occ[d] -= 1;
          for (int a = 0; a <= M; ++a) {
            double val = K(a, c);
            if (val == 0.0) continue;
            int b = M - a;
            double amp = amp_ann * std::sqrt(occ[b] + 1.0);
            occ[b] += 1;
            amp *= std::sqrt(occ[a] + 1.0);
            occ[a] += 1;
            scratch.clear();
            for (long m = 0; m <= L; ++m)
              scratch.insert(scratch.end(), occ[m], static_cast<int>(m));
            std::sort(scratch.begin(), scratch.end(), std::greater<int>());
            std::size_t I = basis.index_of(scratch);
            occ[a] -= 1;
            occ[b] -= 1;
            trips.emplace_back(static_cast<int>(I), static_cast<int>(J),
                               0.5 * val * amp);
          }
          occ[c] += 1;
          occ[d] += 1;
        }
      }
    }
  } else {  // Fermi
    std::vector<char> occ(L + 1, 0);
    auto jordan_wigner_sign = [&](int m) {
      int count = 0;
      for (long k = m + 1; k <= L; ++k) count += occ[k];
      return count % 2 == 0 ? 1.0 : -1.0;
    };
    for (std::size_t J = 0; J < dim; ++J) {
      std::fill(occ.begin(), occ.end(), 0);
      for (int m : basis.element(J)) occ[m] = 1;

      for (int ci = 0; ci < n; ++ci) {
        for (int di = 0; di < n; ++di) {
          if (ci == di) continue;
          int c = basis.element(J)[ci], d = basis.element(J)[di];
          int M = c + d;
          const Eigen::MatrixXd& K = kernels[M];
          if (K.size() == 0) continue;
          double sign = jordan_wigner_sign(c);
          occ[c] = 0;
          sign *= jordan_wigner_sign(d);
          occ[d] = 0;
          for (int a = 0; a <= M; ++a) {
            int b = M - a;
            if (a == b) continue;  // double creation vanishes
            double val = K(a, c);
            if (val == 0.0 || occ[a] || occ[b]) continue;
            double s2 = sign * jordan_wigner_sign(b);
            occ[b] = 1;
            s2 *= jordan_wigner_sign(a);
            occ[a] = 1;
            scratch.clear();
            for (long m = L; m >= 0; --m)
              if (occ[m]) scratch.push_back(static_cast<int>(m));
            std::size_t I = basis.index_of(scratch);
            occ[a] = 0;
            occ[b] = 0;
            trips.emplace_back(static_cast<int>(I), static_cast<int>(J),
                               0.5 * val * s2);
          }
          occ[d] = 1;
          occ[c] = 1;
        }
      }
    }
  }

  mat.setFromTriplets(trips.begin(), trips.end());
  Eigen::SparseMatrix<double> t = mat.transpose();
  mat = 0.5 * (mat + t);
  mat.prune([](int, int, double v) { return std::abs(v) > 1e-300; });
  return mat;
}

PairKernel projector_family_kernel(std::vector<std::pair<int, double>> terms) {
  return [terms = std::move(terms)](int M) -> Eigen::MatrixXd {
    Eigen::MatrixXd K;
    Eigen::MatrixXd rows;
    for (const auto& [ell, weight] : terms) {
      if (ell > M || weight == 0.0) continue;
      if (rows.size() == 0) rows = rotation_rows(M);
      if (K.size() == 0) K = Eigen::MatrixXd::Zero(M + 1, M + 1);
      K.noalias() += weight * rows.col(ell) * rows.col(ell).transpose();
    }
    return K;
  };
}

}  // namespace

Eigen::VectorXd pair_rotation_amplitudes(int m1, int m2) {
  require(m1 >= 0 && m2 >= 0, "orbital exponents must be nonnegative");
  int M = m1 + m2;
  require(M <= kMaxMomentum, "pair momentum beyond exact-integer range");
  const auto& binom = binomial_table();
  const auto& fact = factorial_table();

  Eigen::VectorXd amps(M + 1);
  const long double scale =
      std::pow(2.0L, -0.5L * M) / std::sqrt(fact[m1] * fact[m2]);
  for (int p = 0; p <= M; ++p) {
    long long c = 0;
    int j_lo = std::max(0, p - m2), j_hi = std::min(p, m1);
    for (int j = j_lo; j <= j_hi; ++j) {
      long long term = binom[m1][j] * binom[m2][p - j];
      c += ((p - j) % 2 == 0) ? term : -term;
    }
    amps[p] = static_cast<double>(
        scale * c * std::sqrt(fact[M - p] * fact[p]));
  }
  return amps;
}

OperatorMatrix pair_projector_matrix(const LLLBasis& basis, int ell) {
  require(ell >= 0, "relative momentum must be nonnegative");
  OperatorMatrix op;
  op.basis = &basis;
  op.mat = assemble_pair_operator(basis,
                                  projector_family_kernel({{ell, 1.0}}));
  return op;
}

OperatorMatrix pseudo_hamiltonian(const LLLBasis& basis, int ell) {
  require(ell >= 0, "relative momentum must be nonnegative");
  double w = 1.0 / (kPi * static_cast<double>(factorial_table()[ell]));
  OperatorMatrix op;
  op.basis = &basis;
  op.mat = assemble_pair_operator(basis, projector_family_kernel({{ell, w}}));
  return op;
}

OperatorMatrix cascade_hamiltonian(const LLLBasis& basis, int ell) {
  require(ell >= 0, "relative momentum must be nonnegative");
  std::vector<std::pair<int, double>> terms;
  for (int l = 0; l <= ell; ++l)
    terms.emplace_back(l, 1.0 / (kPi * static_cast<double>(
                                           factorial_table()[l])));
  OperatorMatrix op;
  op.basis = &basis;
  op.mat = assemble_pair_operator(basis,
                                  projector_family_kernel(std::move(terms)));
  return op;
}

OperatorMatrix angular_momentum_matrix(const LLLBasis& basis) {
  OperatorMatrix op;
  op.basis = &basis;
  std::size_t dim = basis.size();
  op.mat.resize(dim, dim);
  op.mat.setIdentity();
  op.mat *= static_cast<double>(basis.total_momentum());
  return op;
}

double haldane_coefficient(const ScaledPotential& p, int ell) {
  require(ell >= 0, "channel must be nonnegative");
  if (p.has_hard_core()) return std::numeric_limits<double>::infinity();
  if (p.is_zero()) return 0.0;
  // (pi ell!)^{-1} integral of |w|^{2 ell} e^{-|w|^2} v(sqrt(2)|w|) over the
  // plane; radially: (2 / ell!) integral of r^{2 ell + 1} e^{-r^2} v(r
  // sqrt(2)).
  const double upper = p.support_radius() / std::numbers::sqrt2;
  const double lfact = static_cast<double>(factorial_table()[ell]);
  auto integrand = [&](double r) {
    return std::pow(r, 2 * ell + 1) * std::exp(-r * r) *
           p(r * std::numbers::sqrt2);
  };
  return 2.0 / lfact * integrate(integrand, 0.0, upper, 1e-13);
}

OperatorMatrix lll_interaction_matrix(const LLLBasis& basis,
                                      const ScaledPotential& p) {
  require(!p.has_hard_core(),
          "hard cores have no finite lowest-level expansion");
  std::vector<std::pair<int, double>> terms;
  for (int ell = 0; ell <= basis.total_momentum(); ++ell)
    terms.emplace_back(ell, haldane_coefficient(p, ell));
  OperatorMatrix op;
  op.basis = &basis;
  op.mat = assemble_pair_operator(basis,
                                  projector_family_kernel(std::move(terms)));
  return op;
}

}
