#include "oraclid/generators.hpp"

#include <stdexcept>
#include <unordered_set>

#include "oraclid/rng.hpp"

namespace oraclid {

namespace {

void check_n(size_t n) {
  if (n < 1 || n > OracleMatrix::kMaxQubits)
    throw std::invalid_argument("generator: n must be in [1, 20]");
}

int parity(size_t x) { return __builtin_parityll((unsigned long long)x); }

}  // namespace

OracleMatrix make_grover(size_t n) {
  check_n(n);
  size_t N = size_t(1) << n;
  std::vector<BitVec> rows;
  rows.reserve(N);
  for (size_t i = 0; i < N; ++i) {
    BitVec r(N);
    r.set(i, true);
    rows.push_back(std::move(r));
  }
  return OracleMatrix::from_rows(n, std::move(rows));
}

OracleMatrix make_bv(size_t n) {
  check_n(n);
  size_t N = size_t(1) << n;
  std::vector<BitVec> rows;
  rows.reserve(N);
  for (size_t i = 0; i < N; ++i) {
    BitVec r(N);
    for (size_t j = 0; j < N; ++j)
      if (parity(i & j)) r.set(j, true);
    rows.push_back(std::move(r));
  }
  return OracleMatrix::from_rows(n, std::move(rows));
}

OracleMatrix make_hybrid(size_t n, size_t k) {
  check_n(n);
  if (k > n) throw std::invalid_argument("make_hybrid: k must not exceed n");
  size_t N = size_t(1) << n;
  size_t kmask = (k == 0) ? 0 : ((size_t(1) << k) - 1);
  std::vector<BitVec> rows;
  rows.reserve(N);
  for (size_t a = 0; a < N; ++a) {
    BitVec r(N);
    for (size_t x = 0; x < N; ++x) {
      if ((a >> k) != (x >> k)) continue;
      if (parity(a & x & kmask) == 0) r.set(x, true);
    }
    rows.push_back(std::move(r));
  }
  return OracleMatrix::from_rows(n, std::move(rows));
}

OracleMatrix sample_av(size_t n, size_t K, uint64_t seed) {
  check_n(n);
  size_t N = size_t(1) << n;
  if (K < 1 || K > N) throw std::invalid_argument("sample_av: K must be in [1, N]");
  double p = double(K) / double(N);
  Rng rng(seed);
  std::unordered_set<BitVec, BitVecHash> seen;
  std::vector<BitVec> rows;
  rows.reserve(N);
  for (size_t i = 0; i < N; ++i) {
    bool placed = false;
    for (int attempt = 0; attempt < 100; ++attempt) {
      BitVec r(N);
      for (size_t j = 0; j < N; ++j)
        if (rng.bernoulli(p)) r.set(j, true);
      if (seen.insert(r).second) {
        rows.push_back(std::move(r));
        placed = true;
        break;
      }
    }
    if (!placed) throw std::runtime_error("sample_av: row resampling budget exhausted");
  }
  return OracleMatrix::from_rows(n, std::move(rows));
}

OracleMatrix sample_balanced(size_t n, size_t K, uint64_t seed) {
  check_n(n);
  size_t N = size_t(1) << n;
  if (K < 1 || K > N) throw std::invalid_argument("sample_balanced: K must be in [1, N]");
  Rng rng(seed);

  constexpr int kMatchingRetries = 1000;
  constexpr int kBuildRetries = 20;
  std::vector<size_t> perm(N);
  for (int build = 0; build < kBuildRetries; ++build) {
    // used[i] = columns already taken in row i
    std::vector<BitVec> used(N, BitVec(N));
    for (size_t t = 0; t < K; ++t) {
      bool matched = false;
      for (int attempt = 0; attempt < kMatchingRetries; ++attempt) {
        for (size_t i = 0; i < N; ++i) perm[i] = i;
        for (size_t i = N; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
        bool disjoint = true;
        for (size_t i = 0; i < N; ++i)
          if (used[i].get(perm[i])) {
            disjoint = false;
            break;
          }
        if (disjoint) {
          for (size_t i = 0; i < N; ++i) used[i].set(perm[i], true);
          matched = true;
          break;
        }
      }
      if (!matched) throw std::runtime_error("sample_balanced: matching retry budget exhausted");
    }
    // rows must still be pairwise distinct
    std::unordered_set<BitVec, BitVecHash> seen;
    bool distinct = true;
    for (const auto& r : used)
      if (!seen.insert(r).second) {
        distinct = false;
        break;
      }
    if (distinct) return OracleMatrix::from_rows(n, std::move(used));
  }
  throw std::runtime_error("sample_balanced: could not sample distinct rows");
}

}  // namespace oraclid
