#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "hlab/basis.hpp"

using namespace hlab;

namespace {

// Brute-force enumeration oracle: all exponent tuples with the demanded
// ordering, found by plain recursion over the leading exponent.
void collect(int slots, long rest, int cap, bool strict,
             std::vector<int>& cur, std::set<std::vector<int>>& out) {
  if (slots == 0) {
    if (rest == 0) out.insert(cur);
    return;
  }
  for (int m = 0; m <= std::min<long>(cap, rest); ++m) {
    cur.push_back(m);
    collect(slots - 1, rest - m, strict ? m - 1 : m, strict, cur, out);
    cur.pop_back();
  }
}

std::set<std::vector<int>> oracle_elements(int N, long L, Statistics stats) {
  std::set<std::vector<int>> out;
  if (stats == Statistics::None) {
    for (int m = 0; m <= L; ++m)
      out.insert({m, static_cast<int>(L) - m});
    return out;
  }
  std::vector<int> cur;
  collect(N, L, static_cast<int>(L), stats == Statistics::Fermi, cur, out);
  return out;
}

// Independent partition counter by direct recursion with memo-free descent.
long oracle_partitions(long d, int k) {
  if (d < 0) return 0;
  if (d == 0) return 1;
  if (k == 0) return 0;
  return oracle_partitions(d - k, k) + oracle_partitions(d, k - 1);
}

}  // namespace

TEST_CASE("basis enumeration agrees with brute force") {
  for (int N : {2, 3, 4})
    for (long L = 0; L <= 10; ++L)
      for (auto stats : {Statistics::Bose, Statistics::Fermi}) {
        auto basis = build_basis(N, L, stats);
        auto expect = oracle_elements(N, L, stats);
        REQUIRE(basis.size() == expect.size());
        std::set<std::vector<int>> got(basis.elements().begin(),
                                       basis.elements().end());
        CHECK(got == expect);
      }

  auto pairs = build_basis(2, 7, Statistics::None);
  CHECK(pairs.size() == 8);
  CHECK(oracle_elements(2, 7, Statistics::None).size() == 8);
}

TEST_CASE("basis ordering and lookup") {
  auto basis = build_basis(3, 6, Statistics::Bose);
  // reverse-lexicographic: every element strictly precedes the next
  for (std::size_t i = 0; i + 1 < basis.size(); ++i)
    CHECK(std::lexicographical_compare(basis.element(i + 1).begin(),
                                       basis.element(i + 1).end(),
                                       basis.element(i).begin(),
                                       basis.element(i).end()));
  CHECK(basis.element(0) == std::vector<int>{6, 0, 0});
  for (std::size_t i = 0; i < basis.size(); ++i)
    CHECK(basis.index_of(basis.element(i)) == i);
  CHECK(basis.index_of({4, 1, 1}) != LLLBasis::npos);
  CHECK(basis.index_of({7, 0, 0}) == LLLBasis::npos);
  CHECK(basis.particles() == 3);
  CHECK(basis.total_momentum() == 6);
}

TEST_CASE("basis constructor rejections") {
  CHECK_THROWS_AS(build_basis(1, 3, Statistics::Bose), std::invalid_argument);
  CHECK_THROWS_AS(build_basis(2, -1, Statistics::Bose), std::invalid_argument);
  CHECK_THROWS_AS(build_basis(3, 4, Statistics::None), std::invalid_argument);
}

TEST_CASE("partition counts match the recursive oracle") {
  for (long d = 0; d <= 30; ++d)
    for (int k = 1; k <= 6; ++k)
      CHECK(partition_count(d, k) == oracle_partitions(d, k));
  CHECK(partition_count(0, 3) == 1);
  CHECK(partition_count(-2, 3) == 0);
}

TEST_CASE("binomials are exact and guarded") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(10, 10) == 1);
  for (int n = 1; n <= 30; ++n)
    for (int k = 1; k < n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
}

TEST_CASE("divisible-subspace dimensions count cofactor partitions") {
  // factoring the full pairwise product of power t leaves a symmetric
  // cofactor of momentum L - t N(N-1)/2; odd powers need Fermi symmetry,
  // even powers Bose, mismatches promote t by one
  for (int N : {2, 3, 4, 5})
    for (long L = 0; L <= 16; ++L) {
      long pairs = static_cast<long>(N) * (N - 1) / 2;
      for (int ell = 0; ell <= 3; ++ell) {
        int t_bose = ell % 2 == 1 ? ell + 1 : ell;
        int t_fermi = ell % 2 == 0 ? ell + 1 : ell;
        CHECK(dim_b_ell(N, L, ell, Statistics::Bose) ==
              oracle_partitions(L - t_bose * pairs, N));
        CHECK(dim_b_ell(N, L, ell, Statistics::Fermi) ==
              oracle_partitions(L - t_fermi * pairs, N));
      }
    }

  // spot values: only the pairwise-product state itself survives at the
  // Laughlin momentum, nothing below it
  CHECK(dim_b_ell(3, 6, 2, Statistics::Bose) == 1);
  CHECK(dim_b_ell(3, 5, 2, Statistics::Bose) == 0);
  CHECK(dim_b_ell(4, 6, 1, Statistics::Fermi) == 1);
  CHECK(dim_b_ell(2, 4, 0, Statistics::Bose) == 3);

  // distinguishable pairs count compositions instead of partitions
  CHECK(dim_b_ell(2, 5, 1, Statistics::None) == 5);
  CHECK_THROWS_AS(dim_b_ell(3, 5, 1, Statistics::None), std::invalid_argument);
}
