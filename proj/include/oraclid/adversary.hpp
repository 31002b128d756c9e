#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "oraclid/oracle_matrix.hpp"

namespace oraclid {

// Answers queries so as to keep the surviving candidate set as large as
// possible: each query gets the majority answer over the candidates, and the
// minority side is discarded. Repeating a query returns the same answer and
// removes nothing. |L| never drops below half, nor by more than #(S).
class AdversaryResponder {
 public:
  explicit AdversaryResponder(const OracleMatrix& S);

  bool respond(size_t column);

  size_t candidates() const { return live_.size(); }
  const std::vector<size_t>& surviving_rows() const { return live_; }  // row indices into S
  const std::vector<std::pair<size_t, bool>>& history() const { return history_; }

 private:
  const OracleMatrix& S_;
  std::vector<size_t> live_;
  std::vector<std::pair<size_t, bool>> history_;
};

// Query count floor(N/K) + floor(log2 K) - 3 below which the responder is
// guaranteed to keep at least two candidates alive (K = #(S)).
size_t adversary_query_floor(size_t N, size_t K);

}  // namespace oraclid
