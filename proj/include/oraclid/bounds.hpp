#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "oraclid/oracle_matrix.hpp"

namespace oraclid {

// Relation over row indices of a matrix: pairs drawn from X x Y.
struct AdversaryRelation {
  std::vector<size_t> x_rows;
  std::vector<size_t> y_rows;
  std::vector<std::pair<size_t, size_t>> pairs;
};

struct BoundWitness {
  size_t a = 0;
  size_t b = 0;
  size_t column = 0;
};

struct BoundReport {
  std::string kind;  // "simple" or "relation"
  double value = 0.0;
  // simple ingredients
  size_t matrix_rows = 0;
  size_t sensitivity_k = 0;
  // relation ingredients
  size_t m = 0;
  size_t m_prime = 0;
  uint64_t l_max = 0;
  std::optional<BoundWitness> witness;  // attains l_max
};

nlohmann::json to_json(const BoundReport& r);

// sqrt(M / #(S')) where S' is the column-flipped (1-sensitive) matrix.
BoundReport simple_adversary_bound(const OracleMatrix& S);

// sqrt(m * m' / l_max) by exhaustive counting over the relation, O(|R| * N).
BoundReport adversary_bound(const OracleMatrix& S, const AdversaryRelation& rel);

// Every pair from the first half of the rows against the second half.
AdversaryRelation make_halves_relation(const OracleMatrix& S);

// Weight-K rows against weight-(K+1) rows differing in exactly one position.
// Checks that (m, m', l_max) comes out as (N-K, K+1, 1) and that the value
// matches sqrt((N-K)(K+1)). N must be a power of two, N <= 16, K <= 3.
struct ThresholdInstance {
  OracleMatrix matrix;
  AdversaryRelation relation;
  BoundReport report;
};
ThresholdInstance threshold_instance_bound(size_t N, size_t K);

}  // namespace oraclid
