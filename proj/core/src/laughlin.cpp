#include "hlab/laughlin.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace hlab {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v)
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) +
           (h >> 2);
    return h;
  }
};

using Poly = std::unordered_map<std::vector<int>, long long, VecHash>;

}  // namespace

Eigen::VectorXd laughlin_vector(int N, int m, const LLLBasis& basis) {
  require(N >= 2, "need at least two particles");
  require(m >= 1, "exponent must be positive");
  require(basis.particles() == N, "basis particle count mismatch");
  long pairs = static_cast<long>(N) * (N - 1) / 2;
  require(basis.total_momentum() == m * pairs,
          "basis momentum must equal m N(N-1)/2");
  Statistics want = (m % 2 == 0) ? Statistics::Bose : Statistics::Fermi;
  require(basis.statistics() == want,
          "statistics must match the parity of m");
  require(m * pairs <= 56, "expansion coefficients beyond int64 at this size");

  // Exact integer expansion of the product of pairwise differences.
  Poly poly;
  poly[std::vector<int>(N, 0)] = 1;
  for (int i = 0; i < N; ++i) {
    for (int j = i + 1; j < N; ++j) {
      for (int power = 0; power < m; ++power) {
        Poly next;
        next.reserve(poly.size() * 2);
        for (const auto& [e, c] : poly) {
          std::vector<int> e1 = e;
          ++e1[i];
          next[std::move(e1)] += c;
          std::vector<int> e2 = e;
          ++e2[j];
          next[std::move(e2)] -= c;
        }
        poly = std::move(next);
      }
    }
  }

  // Collect onto canonical multi-indices: the coefficient of the descending
  // monomial, weighted by the norm of the (anti)symmetrised basis vector.
  Eigen::VectorXd out = Eigen::VectorXd::Zero(basis.size());
  for (std::size_t idx = 0; idx < basis.size(); ++idx) {
    const std::vector<int>& mu = basis.element(idx);
    auto it = poly.find(mu);
    if (it == poly.end()) continue;
    long double weight = 1.0L;  // S_mu * prod mu_i!
    for (int x : mu)
      for (int k = 2; k <= x; ++k) weight *= k;
    long double s_mu = 1.0L;
    for (int k = 2; k <= N; ++k) s_mu *= k;
    if (want == Statistics::Bose) {
      int run = 1;
      for (std::size_t i = 1; i <= mu.size(); ++i) {
        if (i < mu.size() && mu[i] == mu[i - 1]) {
          ++run;
        } else {
          for (int k = 2; k <= run; ++k) s_mu /= k;
          run = 1;
        }
      }
    }
    out[idx] = static_cast<double>(it->second *
                                   std::sqrt(weight * s_mu));
  }
  double nrm = out.norm();
  require(nrm > 0.0, "expansion produced the zero vector");
  return out / nrm;
}

}
