#include "oraclid/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace oraclid {

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json j{{"kind", r.kind}, {"value", r.value}};
  if (r.kind == "simple") {
    j["M"] = r.matrix_rows;
    j["K"] = r.sensitivity_k;
  } else {
    j["m"] = r.m;
    j["m_prime"] = r.m_prime;
    j["l_max"] = r.l_max;
    if (r.witness)
      j["witness"] = {{"a", r.witness->a}, {"b", r.witness->b}, {"column", r.witness->column}};
  }
  return j;
}

BoundReport simple_adversary_bound(const OracleMatrix& S) {
  if (S.num_rows() < 2) throw std::invalid_argument("simple_adversary_bound: needs M >= 2");
  FlipResult flip = column_flip(S);
  ColumnStats stats = sensitivity(flip.matrix);
  BoundReport r;
  r.kind = "simple";
  r.matrix_rows = S.num_rows();
  r.sensitivity_k = stats.max_ones;
  r.value = std::sqrt(double(S.num_rows()) / double(stats.max_ones));
  return r;
}

BoundReport adversary_bound(const OracleMatrix& S, const AdversaryRelation& rel) {
  if (rel.pairs.empty()) throw std::invalid_argument("adversary_bound: empty relation");
  size_t N = S.num_columns();
  size_t M = S.num_rows();

  std::unordered_map<size_t, size_t> x_degree, y_degree;
  for (size_t a : rel.x_rows) x_degree[a] = 0;
  for (size_t b : rel.y_rows) y_degree[b] = 0;
  for (const auto& [a, b] : rel.pairs) {
    if (a >= M || b >= M) throw std::invalid_argument("adversary_bound: pair index out of range");
    if (!x_degree.count(a) || !y_degree.count(b))
      throw std::invalid_argument("adversary_bound: pair outside X x Y");
    ++x_degree[a];
    ++y_degree[b];
  }
  size_t m = SIZE_MAX, m_prime = SIZE_MAX;
  for (const auto& [a, d] : x_degree) {
    if (d == 0) throw std::invalid_argument("adversary_bound: row in X with no pair");
    m = std::min(m, d);
  }
  for (const auto& [b, d] : y_degree) {
    if (d == 0) throw std::invalid_argument("adversary_bound: row in Y with no pair");
    m_prime = std::min(m_prime, d);
  }

  // l_a[a][j] = number of partners of a differing from it at column j;
  // same for l_b on the other side. O(|R| * N) total.
  std::unordered_map<size_t, std::vector<uint32_t>> l_a, l_b;
  for (size_t a : rel.x_rows) l_a.emplace(a, std::vector<uint32_t>(N, 0));
  for (size_t b : rel.y_rows) l_b.emplace(b, std::vector<uint32_t>(N, 0));
  for (const auto& [a, b] : rel.pairs) {
    auto& la = l_a[a];
    auto& lb = l_b[b];
    for (size_t j = 0; j < N; ++j) {
      if (S.value(a, j) != S.value(b, j)) {
        ++la[j];
        ++lb[j];
      }
    }
  }

  uint64_t l_max = 0;
  BoundWitness witness;
  for (const auto& [a, b] : rel.pairs) {
    const auto& la = l_a[a];
    const auto& lb = l_b[b];
    for (size_t j = 0; j < N; ++j) {
      if (S.value(a, j) == S.value(b, j)) continue;
      uint64_t prod = uint64_t(la[j]) * uint64_t(lb[j]);
      if (prod > l_max) {
        l_max = prod;
        witness = {a, b, j};
      }
    }
  }
  if (l_max == 0) throw std::logic_error("adversary_bound: related rows never differ");

  BoundReport r;
  r.kind = "relation";
  r.m = m;
  r.m_prime = m_prime;
  r.l_max = l_max;
  r.witness = witness;
  r.value = std::sqrt(double(m) * double(m_prime) / double(l_max));
  return r;
}

AdversaryRelation make_halves_relation(const OracleMatrix& S) {
  if (S.num_rows() < 2) throw std::invalid_argument("make_halves_relation: needs M >= 2");
  AdversaryRelation rel;
  size_t half = S.num_rows() / 2;
  for (size_t i = 0; i < half; ++i) rel.x_rows.push_back(i);
  for (size_t i = half; i < S.num_rows(); ++i) rel.y_rows.push_back(i);
  for (size_t a : rel.x_rows)
    for (size_t b : rel.y_rows) rel.pairs.emplace_back(a, b);
  return rel;
}

ThresholdInstance threshold_instance_bound(size_t N, size_t K) {
  if (N > 16 || (N & (N - 1)) != 0 || N < 2)
    throw std::invalid_argument("threshold_instance_bound: N must be a power of two <= 16");
  if (K < 1 || K > 3 || K + 1 > N)
    throw std::invalid_argument("threshold_instance_bound: K must be in [1, 3] with K+1 <= N");

  size_t n = 0;
  while ((size_t(1) << n) < N) ++n;

  std::vector<BitVec> rows;
  AdversaryRelation rel;
  std::vector<size_t> x_masks, y_masks;
  for (size_t v = 0; v < (size_t(1) << N); ++v) {
    if (size_t(__builtin_popcountll(v)) == K) x_masks.push_back(v);
  }
  for (size_t v = 0; v < (size_t(1) << N); ++v) {
    if (size_t(__builtin_popcountll(v)) == K + 1) y_masks.push_back(v);
  }
  auto bits_of = [N](size_t mask) {
    BitVec r(N);
    for (size_t j = 0; j < N; ++j)
      if ((mask >> j) & 1) r.set(j, true);
    return r;
  };
  for (size_t v : x_masks) {
    rel.x_rows.push_back(rows.size());
    rows.push_back(bits_of(v));
  }
  for (size_t v : y_masks) {
    rel.y_rows.push_back(rows.size());
    rows.push_back(bits_of(v));
  }
  for (size_t i = 0; i < x_masks.size(); ++i) {
    for (size_t j = 0; j < y_masks.size(); ++j) {
      size_t diff = x_masks[i] ^ y_masks[j];
      if (__builtin_popcountll(diff) == 1) rel.pairs.emplace_back(rel.x_rows[i], rel.y_rows[j]);
    }
  }

  ThresholdInstance instance{OracleMatrix::from_rows(n, std::move(rows)), std::move(rel), {}};
  instance.report = adversary_bound(instance.matrix, instance.relation);
  if (instance.report.m != N - K || instance.report.m_prime != K + 1 || instance.report.l_max != 1)
    throw std::logic_error("threshold_instance_bound: ingredients differ from (N-K, K+1, 1)");
  double closed = std::sqrt(double(N - K) * double(K + 1));
  if (std::abs(instance.report.value - closed) > 1e-12)
    throw std::logic_error("threshold_instance_bound: value differs from the closed form");
  return instance;
}

}  // namespace oraclid
