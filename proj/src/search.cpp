#include "oraclid/search.hpp"

#include <cmath>
#include <stdexcept>

namespace oraclid {

size_t grover_iterations(size_t domain, size_t presumed_targets) {
  if (presumed_targets == 0 || presumed_targets > domain)
    throw std::invalid_argument("grover_iterations: t must be in [1, N]");
  double r = M_PI / 4.0 * std::sqrt(double(domain) / double(presumed_targets)) - 0.5;
  long rounded = std::lround(r);
  return rounded > 0 ? size_t(rounded) : 0;
}

SearchOutcome grover_fixed(const OracleView& view, size_t presumed_targets, Rng& rng) {
  size_t N = size_t(1) << view.n;
  size_t r = grover_iterations(N, presumed_targets);

  StateVector state = init_uniform(view.n);
  for (size_t i = 0; i < r; ++i) {
    apply_phase_oracle(state, view);
    apply_diffusion(state);
  }

  double marked = 0.0;
  for (size_t x = 0; x < N; ++x)
    if (view.oracle->effective_value(view.map(x))) marked += std::norm(state.amps[x]);

  SearchOutcome out;
  out.iterations_log.push_back(r);
  out.marked_probability = marked;
  size_t candidate = measure(state, rng);
  bool good = classical_query(view, candidate);
  out.queries_used = uint64_t(r) + 1;
  if (good) out.found = candidate;
  return out;
}

SearchOutcome bbht_search(const OracleView& view, uint64_t max_queries, Rng& rng) {
  size_t N = size_t(1) << view.n;
  double m = 1.0;
  double cap = std::sqrt(double(N));
  SearchOutcome out;
  for (;;) {
    size_t r = rng.below(size_t(std::ceil(m)));
    if (out.queries_used + r + 1 > max_queries) break;

    StateVector state = init_uniform(view.n);
    for (size_t i = 0; i < r; ++i) {
      apply_phase_oracle(state, view);
      apply_diffusion(state);
    }
    out.iterations_log.push_back(r);
    size_t candidate = measure(state, rng);
    bool good = classical_query(view, candidate);
    out.queries_used += uint64_t(r) + 1;
    if (good) {
      out.found = candidate;
      break;
    }
    m = std::min(m * 1.2, cap);
  }
  return out;
}

BvOutcome bernstein_vazirani(const OracleView& view) {
  StateVector state = init_uniform(view.n);
  apply_phase_oracle(state, view);
  apply_hadamard_all(state);

  BvOutcome out;
  double best = -1.0;
  for (size_t x = 0; x < state.amps.size(); ++x) {
    double p = std::norm(state.amps[x]);
    if (p > best) {
      best = p;
      out.found = x;
    }
  }
  out.probability = best;
  return out;
}

}  // namespace oraclid
