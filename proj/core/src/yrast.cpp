#include "hlab/yrast.hpp"

#include <cmath>
#include <stdexcept>

#include "hlab/eigensolve.hpp"
#include "hlab/laughlin.hpp"
#include "hlab/operators.hpp"

namespace hlab {

YrastCurve yrast_scan(int N, int ell, Statistics stats, long L_min,
                      long L_max, double lambda, double gamma) {
  if (lambda <= 0.0 || gamma <= 0.0)
    throw std::invalid_argument("trap and interaction weights must be > 0");
  if (L_max < L_min) throw std::invalid_argument("empty momentum range");
  if (stats == Statistics::None)
    throw std::invalid_argument("yrast scans need identical particles");

  YrastCurve curve;
  curve.N = N;
  curve.ell = ell;
  curve.stats = stats;
  curve.lambda = lambda;
  curve.gamma = gamma;

  int m = ell + 1;
  bool m_even_ok = (stats == Statistics::Bose);
  if ((m % 2 == 0) != m_even_ok) ++m;  // parity must match the statistics
  curve.laughlin_m = m;
  const long L_target = static_cast<long>(m) * N * (N - 1) / 2;

  double best = 0.0;
  bool have_best = false;
  Eigen::VectorXd best_vec;
  Eigen::MatrixXd target_ground_space;  // degenerate lowest eigenspace

  for (long L = L_min; L <= L_max; ++L) {
    LLLBasis basis = build_basis(N, L, stats);
    if (basis.size() == 0) continue;
    OperatorMatrix h = pseudo_hamiltonian(basis, ell);
    Spectrum sp = spectrum(h, static_cast<int>(basis.size()));
    double e0 = gamma * sp.values[0] + lambda * (N + L);
    curve.points.push_back({L, e0, static_cast<long>(basis.size())});

    if (!have_best || e0 < best) {
      have_best = true;
      best = e0;
      curve.ground_L = L;
      best_vec = sp.vectors.col(0);
      if (L == L_target) {
        // Keep the full degenerate lowest eigenspace for the overlap.
        double cut = sp.values[0] + 1e-10 * (1.0 + std::abs(sp.values[0]));
        int deg = 0;
        while (deg < sp.values.size() && sp.values[deg] <= cut) ++deg;
        target_ground_space = sp.vectors.leftCols(deg);
      } else {
        target_ground_space.resize(0, 0);
      }
    }
  }
  if (!have_best)
    throw std::invalid_argument("no nonempty sector in the momentum range");

  curve.ground_vector = best_vec;
  curve.overlap_with_laughlin = 0.0;
  if (curve.ground_L == L_target) {
    LLLBasis basis = build_basis(N, L_target, stats);
    Eigen::VectorXd psi = laughlin_vector(N, m, basis);
    curve.overlap_with_laughlin =
        (target_ground_space.transpose() * psi).norm();
  }
  return curve;
}

}
