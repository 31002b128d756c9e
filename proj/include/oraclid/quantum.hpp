#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "oraclid/bitvec.hpp"
#include "oraclid/rng.hpp"

namespace oraclid {

class Rng;

struct StateVector {
  size_t n = 0;
  std::vector<std::complex<double>> amps;
};

StateVector init_uniform(size_t n);
double norm_sq(const StateVector& s);

// The hidden oracle under test: a secret answer row, an XOR mask currently in
// force (column flips are realized here, on the answers, not by rebuilding
// the oracle), and one monotone counter shared by quantum and classical use.
class HiddenOracle {
 public:
  explicit HiddenOracle(BitVec secret_row);
  HiddenOracle(BitVec secret_row, BitVec flip_mask);

  size_t n() const { return n_; }
  size_t domain() const { return size_t(1) << n_; }

  void set_mask(const BitVec& mask);
  const BitVec& mask() const { return mask_; }

  uint64_t query_count() const { return queries_; }

  // Masked answer bit without spending a query; apply_phase_oracle ticks the
  // counter once per invocation on its own.
  bool effective_value(size_t j) const { return row_.get(j) ^ mask_.get(j); }

  bool classical_query(size_t j) {
    ++queries_;
    return effective_value(j);
  }

  void tick() { ++queries_; }

 private:
  BitVec row_;
  BitVec mask_;
  size_t n_ = 0;
  uint64_t queries_ = 0;
};

// Aligned subcube of the oracle domain: view index x stands for the full
// input (x << shift) | base. The full domain is view(oracle, n, 0, 0).
struct OracleView {
  HiddenOracle* oracle = nullptr;
  size_t n = 0;
  size_t shift = 0;
  size_t base = 0;

  size_t map(size_t x) const { return (x << shift) | base; }
};

OracleView full_view(HiddenOracle& oracle);
OracleView subcube_view(HiddenOracle& oracle, size_t n, size_t shift, size_t base);

// Phase call with the target bit fixed to |->: amp[x] picks up (-1)^{f'(x)}.
// Costs one query.
void apply_phase_oracle(StateVector& state, const OracleView& view);
void apply_phase_oracle(StateVector& state, HiddenOracle& oracle);

void apply_hadamard_all(StateVector& state);

// Inversion about the mean: amp -> 2*mean - amp.
void apply_diffusion(StateVector& state);

// Sample a basis index from |amp|^2. The state is conceptually consumed;
// callers re-prepare rather than measuring twice.
size_t measure(const StateVector& state, Rng& rng);

bool classical_query(const OracleView& view, size_t j);

}  // namespace oraclid
