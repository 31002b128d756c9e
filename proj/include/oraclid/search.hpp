#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oraclid/quantum.hpp"
#include "oraclid/rng.hpp"

namespace oraclid {

struct SearchOutcome {
  std::optional<size_t> found;  // view-space index, classically verified
  uint64_t queries_used = 0;
  std::vector<size_t> iterations_log;  // Grover iterations per attempt
  // Probability mass on marked indices in the final pre-measurement state;
  // set by grover_fixed only.
  std::optional<double> marked_probability;
};

// Iteration count round(pi/4 * sqrt(N/t) - 1/2), clamped at zero.
size_t grover_iterations(size_t domain, size_t presumed_targets);

// Fixed-iteration search assuming t marked inputs: prepare uniform, iterate,
// measure once, verify the outcome with one classical query.
SearchOutcome grover_fixed(const OracleView& view, size_t presumed_targets, Rng& rng);

// Unknown-target schedule: attempt with r uniform in [0, ceil(m)), verify,
// grow m by 6/5 up to sqrt(N). Never spends more than max_queries; an attempt
// that would not fit in the remaining budget is not started.
SearchOutcome bbht_search(const OracleView& view, uint64_t max_queries, Rng& rng);

struct BvOutcome {
  size_t found = 0;
  double probability = 0.0;  // |amplitude|^2 at the returned index
};

// One phase query between Hadamard layers. On the promise f'(x) = a.x + c
// (mod 2) the final state is concentrated on a, so the maximizing index is
// returned without sampling. Exactly one query.
BvOutcome bernstein_vazirani(const OracleView& view);

}  // namespace oraclid
