#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hlab/scattering.hpp"

namespace hlab {

namespace {

// Composite Simpson; a 3/8 closing rule absorbs an odd interval count.
double simpson(const std::vector<double>& y, double h) {
  std::size_t n = y.size() - 1;  // intervals
  double s = 0.0;
  std::size_t even_part = (n % 2 == 0) ? n : n - 3;
  for (std::size_t i = 0; i + 2 <= even_part; i += 2)
    s += h / 3.0 * (y[i] + 4.0 * y[i + 1] + y[i + 2]);
  if (n % 2 != 0) {
    std::size_t i = even_part;
    s += 3.0 * h / 8.0 * (y[i] + 3.0 * y[i + 1] + 3.0 * y[i + 2] + y[i + 3]);
  }
  return s;
}

struct GridSolve {
  double energy = 0.0;
  double quartic = 0.0;
  std::vector<double> u;    // all nodes including Dirichlet ends
  std::vector<double> chi;  // normalised, zero at the ends
};

// Second-order finite differences for -chi'' + V chi = E chi with Dirichlet
// walls; m interior nodes.  The ground vector comes from inverse iteration
// with a shift just below the computed eigenvalue, which keeps the shifted
// matrix positive definite so the unpivoted tridiagonal solve is stable.
GridSolve solve_on_grid(const std::function<double(double)>& V, double u_min,
                        double u_max, int m) {
  const double h = (u_max - u_min) / (m + 1);
  Eigen::VectorXd diag(m), sub(m - 1);
  std::vector<double> u(m + 2);
  for (int i = 0; i < m + 2; ++i) u[i] = u_min + h * i;
  for (int i = 0; i < m; ++i) diag[i] = 2.0 / (h * h) + V(u[i + 1]);
  sub.setConstant(-1.0 / (h * h));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  const double lambda = es.eigenvalues()[0];
  const double gap = es.eigenvalues()[1] - lambda;
  const double shift = lambda - std::max(1e-9, 1e-12 * std::abs(lambda));

  // Thomas solves of (T - shift) x = chi, repeated twice.
  std::vector<double> chi(m, 1.0);
  for (int pass = 0; pass < (gap > 0 ? 2 : 4); ++pass) {
    std::vector<double> c(m), d(m);
    double off = -1.0 / (h * h);
    c[0] = off / (diag[0] - shift);
    d[0] = chi[0] / (diag[0] - shift);
    for (int i = 1; i < m; ++i) {
      double denom = (diag[i] - shift) - off * c[i - 1];
      c[i] = off / denom;
      d[i] = (chi[i] - off * d[i - 1]) / denom;
    }
    chi[m - 1] = d[m - 1];
    for (int i = m - 2; i >= 0; --i) chi[i] = d[i] - c[i] * chi[i + 1];
    double nrm = 0.0;
    for (double x : chi) nrm += x * x;
    nrm = std::sqrt(nrm);
    for (double& x : chi) x /= nrm;
  }
  double sum = 0.0;
  for (double x : chi) sum += x;
  if (sum < 0.0)
    for (double& x : chi) x = -x;

  GridSolve out;
  out.u = std::move(u);
  out.chi.assign(m + 2, 0.0);
  std::copy(chi.begin(), chi.end(), out.chi.begin() + 1);

  std::vector<double> sq(m + 2);
  for (int i = 0; i < m + 2; ++i) sq[i] = out.chi[i] * out.chi[i];
  const double norm2 = simpson(sq, h);
  const double scale = 1.0 / std::sqrt(norm2);
  for (double& x : out.chi) x *= scale;

  // Mass share of the outer 5% of the domain on either side; a bound state
  // of the well decays there, a wall-hugging artefact does not.
  double edge = 0.0, tot = 0.0;
  for (int i = 0; i < m + 2; ++i) {
    double w = out.chi[i] * out.chi[i];
    tot += w;
    double s = (out.u[i] - u_min) / (u_max - u_min);
    if (s < 0.05 || s > 0.95) edge += w;
  }
  if (edge > 0.25 * tot)
    throw std::runtime_error(
        "confinement ground state concentrates at the artificial walls; no "
        "bound state in the given window");

  std::vector<double> q4(m + 2);
  for (int i = 0; i < m + 2; ++i)
    q4[i] = out.chi[i] * out.chi[i] * out.chi[i] * out.chi[i];
  out.energy = lambda;
  out.quartic = simpson(q4, h);
  return out;
}

}  // namespace

ConfinementProfile confinement_ground_state(
    const std::function<double(double)>& V, double u_min, double u_max,
    int points) {
  if (!(u_max > u_min))
    throw std::invalid_argument("confinement window must have u_max > u_min");
  if (points < 32) throw std::invalid_argument("confinement grid too coarse");

  // Doubling the node count halves h when the interior counts are m, 2m+1.
  GridSolve coarse = solve_on_grid(V, u_min, u_max, points);
  GridSolve fine = solve_on_grid(V, u_min, u_max, 2 * points + 1);

  ConfinementProfile prof;
  prof.u = std::move(fine.u);
  prof.chi = std::move(fine.chi);
  // Both eigenvalue and quartic integral carry O(h^2) discretisation error;
  // one Richardson step lifts them to O(h^4).
  prof.energy = (4.0 * fine.energy - coarse.energy) / 3.0;
  prof.quartic_integral = (4.0 * fine.quartic - coarse.quartic) / 3.0;
  return prof;
}

}
