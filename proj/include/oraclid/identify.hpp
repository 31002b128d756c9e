#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oraclid/oracle_matrix.hpp"
#include "oraclid/quantum.hpp"
#include "oraclid/rng.hpp"
#include "oraclid/transcript.hpp"

namespace oraclid {

// Tunable constants. Budgets are ceil(c * sqrt(N/K)) with the c named here;
// everything is overridable from the command line via --const name=value.
struct AlgorithmConstants {
  double general_budget_c = 4.5;
  double square_budget_c = 4.5;
  double av_budget_c = 4.5;
  double balanced_budget_c = 4.5;
  double hybrid_budget_c = 4.5;
  int square_retries = 1;       // extra search passes in the square-size step 2
  int av_classical_slack = 4;   // classical cap is 2*ceil(log2 N) + slack
  int rep_floor = 1;            // minimum search repetitions per round
  int round_ceiling_factor = 2; // abort after factor * ceil(log2 M) rounds

  void set(const std::string& name, double value);
  static std::vector<std::string> names();
};

// General identification: rounds of column flip, half-weight threshold K,
// ceil(log2 log2 M) unknown-target searches with budget ceil(c*sqrt(N/K)),
// then elimination by the verified column (hit) or by heavy rows (miss).
// Candidates at least halve every round.
Transcript identify_general(const OracleMatrix& S, HiddenOracle& oracle, Rng& rng,
                            const AlgorithmConstants& constants = {});

// Three-step identification sized for M comparable to N: classical queries on
// columns with at least ceil(sqrt N) of both values, one flip + search with
// budget ceil(c*sqrt N) (retried once), then classical distinguishing queries.
Transcript identify_square(const OracleMatrix& S, HiddenOracle& oracle, Rng& rng,
                           const AlgorithmConstants& constants = {});

// Sparse-row identification: d independent searches with budget
// ceil(c*sqrt(N/K)), eliminating on each verified column, then classical
// distinguishing queries capped at 2*ceil(log2 N) + slack.
Transcript identify_av(const OracleMatrix& S, size_t K, int d, HiddenOracle& oracle, Rng& rng,
                       const AlgorithmConstants& constants = {});

// Balanced-column identification: one search, then at most K classical
// distinguishing queries among the rows sharing the verified column.
Transcript identify_balanced(const OracleMatrix& S, size_t K, HiddenOracle& oracle, Rng& rng,
                             const AlgorithmConstants& constants = {});

// Prefix/suffix identification over the implied hybrid family: fixed-
// iteration search on the 2^(n-k) prefixes with the suffix pinned to zero,
// then one phase query recovering the k suffix bits.
Transcript identify_hybrid(size_t n, size_t k, HiddenOracle& oracle, Rng& rng,
                           const AlgorithmConstants& constants = {});

// Deterministic classical counterpart: scan prefixes with zero suffix until
// the answer is 1, then probe each suffix unit vector. Worst case exactly
// 2^(n-k) + k queries.
Transcript classical_identify_hybrid(size_t n, size_t k, HiddenOracle& oracle);

}  // namespace oraclid
