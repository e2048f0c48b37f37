#include "hlab/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace hlab {

namespace {

void fix_signs(Eigen::MatrixXd& vectors) {
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    double scale = vectors.col(c).cwiseAbs().maxCoeff();
    if (scale == 0.0) continue;
    for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
      double v = vectors(r, c);
      if (std::abs(v) > 1e-12 * scale) {
        if (v < 0.0) vectors.col(c) = -vectors.col(c);
        break;
      }
    }
  }
}

Spectrum dense_spectrum(const Eigen::MatrixXd& dense, int count) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense);
  Spectrum out;
  out.values = es.eigenvalues().head(count);
  out.vectors = es.eigenvectors().leftCols(count);
  fix_signs(out.vectors);
  return out;
}

// Lanczos with full reorthogonalisation.  Grows the Krylov space until the
// requested Ritz pairs have small residuals; deterministic for a fixed seed.
bool lanczos_spectrum(const Eigen::SparseMatrix<double>& A, int count,
                      const SolveOptions& opts, Spectrum& out) {
  const Eigen::Index n = A.rows();
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  int m = std::min<Eigen::Index>(n, std::max(4 * count + 40, 100));
  Eigen::MatrixXd V(n, m);
  Eigen::VectorXd alpha(m), beta(m);

  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v[i] = gauss(rng);
  v.normalize();
  V.col(0) = v;

  Eigen::VectorXd w(n);
  int built = 0;
  for (int k = 0; k < m; ++k) {
    w.noalias() = A * V.col(k);
    alpha[k] = V.col(k).dot(w);
    w.noalias() -= alpha[k] * V.col(k);
    if (k > 0) w.noalias() -= beta[k - 1] * V.col(k - 1);
    // Two rounds of reorthogonalisation against the whole block.
    for (int round = 0; round < 2; ++round)
      w.noalias() -= V.leftCols(k + 1) * (V.leftCols(k + 1).transpose() * w);
    built = k + 1;
    double nrm = w.norm();
    if (k + 1 < m) {
      if (nrm < 1e-13) {
        // Invariant subspace found; pad with a fresh random direction.
        for (Eigen::Index i = 0; i < n; ++i) w[i] = gauss(rng);
        for (int round = 0; round < 2; ++round)
          w.noalias() -=
              V.leftCols(k + 1) * (V.leftCols(k + 1).transpose() * w);
        nrm = w.norm();
        if (nrm < 1e-13) {  // space exhausted
          m = k + 1;
          break;
        }
        beta[k] = 0.0;
        V.col(k + 1) = w / nrm;
      } else {
        beta[k] = nrm;
        V.col(k + 1) = w / nrm;
      }
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(alpha.head(built), beta.head(built - 1));
  int take = std::min(count, built);
  Eigen::MatrixXd ritz = V.leftCols(built) * es.eigenvectors().leftCols(take);
  Eigen::VectorXd vals = es.eigenvalues().head(take);

  double scale = std::max(std::abs(es.eigenvalues()[0]),
                          std::abs(es.eigenvalues()[built - 1]));
  if (scale == 0.0) scale = 1.0;
  for (int c = 0; c < take; ++c) {
    double resid = (A * ritz.col(c) - vals[c] * ritz.col(c)).norm();
    if (resid > opts.tol * scale * 100.0) return false;
  }
  out.values = vals;
  out.vectors = ritz;
  fix_signs(out.vectors);
  return true;
}

}  // namespace

Spectrum spectrum(const OperatorMatrix& op, int count,
                  const SolveOptions& opts) {
  const Eigen::Index n = op.mat.rows();
  Spectrum out;
  if (n == 0 || count <= 0) {
    out.values.resize(0);
    out.vectors.resize(n, 0);
    return out;
  }
  count = std::min<Eigen::Index>(count, n);
  if (n <= opts.dense_threshold) return dense_spectrum(op.mat, count);
  if (lanczos_spectrum(op.mat, count, opts, out)) return out;
  return dense_spectrum(op.mat, count);  // saturated subspace fallback
}

long kernel_dimension(const OperatorMatrix& op, double tol) {
  const Eigen::Index n = op.mat.rows();
  if (n == 0) return 0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Eigen::MatrixXd(op.mat),
                                                    Eigen::EigenvaluesOnly);
  double lambda_max = es.eigenvalues().cwiseAbs().maxCoeff();
  if (tol < 0.0) tol = lambda_max == 0.0 ? 1.0 : 1e-10 * lambda_max;
  long k = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    if (es.eigenvalues()[i] < tol) ++k;
  return k;
}

}
