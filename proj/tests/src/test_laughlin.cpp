#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "hlab/basis.hpp"
#include "hlab/laughlin.hpp"
#include "hlab/operators.hpp"

using namespace hlab;

namespace {

// N = 2 oracle: expand (z1 - z2)^m by binomials, weight monomials by their
// norms, project onto the (anti)symmetrised elements, normalise.
Eigen::VectorXd oracle_pair_state(int m, const LLLBasis& basis) {
  std::vector<long double> fact(m + 1, 1.0L);
  for (int i = 1; i <= m; ++i) fact[i] = fact[i - 1] * i;
  auto binom = [&](int n, int k) { return fact[n] / (fact[k] * fact[n - k]); };
  Eigen::VectorXd out = Eigen::VectorXd::Zero(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    int a = basis.element(i)[0], b = basis.element(i)[1];
    auto monomial = [&](int k) -> long double {  // amplitude on z1^k z2^{m-k}
      long double c = binom(m, k) * std::sqrt(fact[k] * fact[m - k]);
      return (m - k) % 2 == 0 ? c : -c;
    };
    if (a == b) {
      out[i] = static_cast<double>(monomial(a));
    } else {
      long double plus = monomial(a), minus = monomial(b);
      long double s = basis.statistics() == Statistics::Fermi ? -1.0L : 1.0L;
      out[i] = static_cast<double>((plus + s * minus) / std::sqrt(2.0L));
    }
  }
  out.normalize();
  return out;
}

}  // namespace

TEST_CASE("pair product states match the binomial oracle") {
  for (int m : {1, 2, 3, 4}) {
    auto stats = m % 2 == 0 ? Statistics::Bose : Statistics::Fermi;
    auto basis = build_basis(2, m, stats);
    auto got = laughlin_vector(2, m, basis);
    CHECK(got.norm() == doctest::Approx(1.0).epsilon(1e-14));
    auto want = oracle_pair_state(m, basis);
    CHECK(std::abs(got.dot(want)) == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("product states are annihilated below their exponent") {
  // bose m = 2: the lowest channel kills the state
  {
    auto basis = build_basis(3, 6, Statistics::Bose);
    auto psi = laughlin_vector(3, 2, basis);
    CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-13));
    auto h0 = pseudo_hamiltonian(basis, 0);
    CHECK((h0.mat * psi).norm() <= 1e-13);
    auto h2 = pseudo_hamiltonian(basis, 2);
    CHECK((h2.mat * psi).norm() > 1e-3);  // survives at ell = m
  }
  // fermi m = 3: channel one kills the state
  {
    auto basis = build_basis(3, 9, Statistics::Fermi);
    auto psi = laughlin_vector(3, 3, basis);
    auto h1 = pseudo_hamiltonian(basis, 1);
    CHECK((h1.mat * psi).norm() <= 1e-13);
    auto h3 = pseudo_hamiltonian(basis, 3);
    CHECK((h3.mat * psi).norm() > 1e-3);
  }
  // larger block: bose m = 2 with four particles
  {
    auto basis = build_basis(4, 12, Statistics::Bose);
    auto psi = laughlin_vector(4, 2, basis);
    CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-13));
    auto h0 = pseudo_hamiltonian(basis, 0);
    CHECK((h0.mat * psi).norm() <= 1e-12);
  }
}

TEST_CASE("product state construction validates its block") {
  auto wrong_L = build_basis(3, 5, Statistics::Bose);
  CHECK_THROWS_AS(laughlin_vector(3, 2, wrong_L), std::invalid_argument);
  auto wrong_stats = build_basis(3, 9, Statistics::Bose);
  CHECK_THROWS_AS(laughlin_vector(3, 3, wrong_stats), std::invalid_argument);
}
