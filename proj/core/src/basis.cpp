#include "hlab/basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace hlab {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Weakly decreasing tuples summing to rest, first part at most cap, appended
// to prefix; recursion emits reverse-lexicographic order.
void emit_partitions(int slots, long rest, long cap, std::vector<int>& prefix,
                     std::vector<std::vector<int>>& out) {
  if (slots == 0) {
    if (rest == 0) out.push_back(prefix);
    return;
  }
  if (rest > cap * slots) return;  // cannot fit even with all parts at cap
  long hi = std::min<long>(cap, rest);
  for (long p = hi; p >= 0; --p) {
    prefix.push_back(static_cast<int>(p));
    emit_partitions(slots - 1, rest - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::size_t LLLBasis::VecHash::operator()(const std::vector<int>& v) const {
  std::size_t h = 1469598103934665603ull;
  for (int x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) +
         (h >> 2);
  }
  return h;
}

LLLBasis::LLLBasis(int N, long L, Statistics stats,
                   std::vector<std::vector<int>> elements)
    : N_(N), L_(L), stats_(stats), elements_(std::move(elements)) {
  index_.reserve(elements_.size() * 2);
  for (std::size_t i = 0; i < elements_.size(); ++i) index_[elements_[i]] = i;
}

std::size_t LLLBasis::index_of(const std::vector<int>& mu) const {
  auto it = index_.find(mu);
  return it == index_.end() ? npos : it->second;
}

LLLBasis build_basis(int N, long L, Statistics stats) {
  require(N >= 2, "basis needs at least two particles");
  require(L >= 0, "total angular momentum must be nonnegative");
  require(stats != Statistics::None || N == 2,
          "distinguishable bases are supported for N = 2 only");

  std::vector<std::vector<int>> elems;
  std::vector<int> prefix;
  switch (stats) {
    case Statistics::Bose:
      emit_partitions(N, L, L, prefix, elems);
      break;
    case Statistics::Fermi: {
      // Strict partitions = weak partitions of L - staircase + staircase.
      long staircase = static_cast<long>(N) * (N - 1) / 2;
      long d = L - staircase;
      if (d >= 0) {
        emit_partitions(N, d, d, prefix, elems);
        for (auto& mu : elems)
          for (int i = 0; i < N; ++i) mu[i] += N - 1 - i;
      }
      break;
    }
    case Statistics::None:
      for (long m = L; m >= 0; --m)
        elems.push_back({static_cast<int>(m), static_cast<int>(L - m)});
      break;
  }
  return LLLBasis(N, L, stats, std::move(elems));
}

long partition_count(long d, int k) {
  if (d < 0) return 0;
  if (d == 0) return 1;
  if (k <= 0) return 0;
  // p(d, k) = partitions of d into parts of size <= k (equivalently into at
  // most k parts, by conjugation).
  std::vector<long> table(d + 1, 0);
  table[0] = 1;
  for (int part = 1; part <= k; ++part)
    for (long s = part; s <= d; ++s) table[s] += table[s - part];
  return table[d];
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long acc = 1;
  for (int j = 1; j <= k; ++j) {
    // Guard before multiplying: the intermediate product must stay exact.
    if (acc > (1ll << 61) / (n - k + j))
      throw std::overflow_error("binomial beyond desk scale");
    acc = acc * (n - k + j) / j;  // exact: running product of binomials
  }
  return static_cast<long>(acc);
}

long dim_b_ell(int N, long L, int ell, Statistics stats) {
  require(N >= 2, "dim_b_ell needs at least two particles");
  require(ell >= 0, "power must be nonnegative");
  int lt = ell;
  if (stats == Statistics::Bose && ell % 2 == 1) lt = ell + 1;
  if (stats == Statistics::Fermi && ell % 2 == 0) lt = ell + 1;
  long pairs = static_cast<long>(N) * (N - 1) / 2;
  long d = L - static_cast<long>(lt) * pairs;
  if (d < 0) return 0;
  if (stats == Statistics::None) {
    require(N == 2, "distinguishable counting is N = 2 only");
    return binomial(static_cast<int>(d) + N - 1, N - 1);
  }
  return partition_count(d, N);
}

}
