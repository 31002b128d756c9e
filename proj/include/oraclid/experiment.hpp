#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "oraclid/identify.hpp"
#include "oraclid/oracle_matrix.hpp"
#include "oraclid/transcript.hpp"

namespace oraclid {

// Bad request (unknown algorithm, incompatible matrix, missing parameter).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::string algorithm;       // identify_general, identify_square, identify_av,
                               // identify_balanced, identify_hybrid,
                               // classical_identify_hybrid
  uint64_t master_seed = 0;
  size_t trials = 1;           // per hidden oracle
  bool sample_oracles = false; // false: run every row as the hidden oracle
  size_t sample_count = 0;
  std::optional<size_t> hybrid_k;
  std::optional<size_t> weight;  // K for the sparse and balanced algorithms
  int av_runs = 3;               // d
  AlgorithmConstants constants;
  size_t max_threads = 0;  // 0: decide from hardware and ORACLID_THREADS
};

struct QueryStats {
  double mean = 0.0;
  uint64_t max = 0;
  double p95 = 0.0;  // sorted value at index ceil(0.95 * count) - 1
};

struct OracleAggregate {
  size_t oracle_id = 0;
  size_t trials = 0;
  size_t successes = 0;
  double mean_queries = 0.0;
  uint64_t max_queries = 0;
};

struct ExperimentSummary {
  std::string algorithm;
  size_t n = 0;
  size_t M = 0;
  uint64_t master_seed = 0;
  size_t trials_per_oracle = 0;
  size_t runs = 0;
  size_t successes = 0;  // identified and equal to the hidden row
  double success_rate = 0.0;
  QueryStats queries_all;
  QueryStats queries_success;
  double lower_bound = 0.0;  // simple adversary bound of the matrix
  bool bound_violation = false;
  std::map<std::string, size_t> outcome_counts;
  std::vector<OracleAggregate> per_oracle;
};

// Resolve a user-facing algorithm name (long or short form) to the canonical
// key; throws ConfigError for unknown names.
std::string canonical_algorithm(const std::string& name);

// Validate the config against the matrix; throws ConfigError before any
// trial runs. Exposed separately so the CLI can fail fast.
void validate_config(const OracleMatrix& S, const ExperimentConfig& config);

// Run trials for every selected hidden oracle. Child seed for (oracle, trial)
// is split from the master seed by (row id, trial index), so adding trials or
// changing the selection never perturbs existing runs. Transcripts are
// appended in (oracle, trial) order whatever the worker count.
ExperimentSummary run_experiment(const OracleMatrix& S, const ExperimentConfig& config,
                                 std::vector<Transcript>* transcripts = nullptr);

nlohmann::json to_json(const ExperimentSummary& s);
std::string per_oracle_csv(const ExperimentSummary& s);

// Extra per-run fields (oracle id, trial, correctness) stitched onto a
// transcript for the JSON-lines file.
nlohmann::json transcript_record(const Transcript& t, size_t oracle_id, size_t trial,
                                 bool correct);

}  // namespace oraclid
