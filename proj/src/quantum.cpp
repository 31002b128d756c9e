#include "oraclid/quantum.hpp"

#include <cmath>
#include <stdexcept>

namespace oraclid {

namespace {

constexpr size_t kMaxSimQubits = 20;

bool power_of_two(size_t x) { return x != 0 && (x & (x - 1)) == 0; }

}  // namespace

StateVector init_uniform(size_t n) {
  if (n > kMaxSimQubits) throw std::invalid_argument("init_uniform: n exceeds the size cap");
  StateVector s;
  s.n = n;
  size_t N = size_t(1) << n;
  s.amps.assign(N, std::complex<double>(1.0 / std::sqrt(double(N)), 0.0));
  return s;
}

double norm_sq(const StateVector& s) {
  double total = 0.0;
  for (const auto& a : s.amps) total += std::norm(a);
  return total;
}

HiddenOracle::HiddenOracle(BitVec secret_row)
    : HiddenOracle(std::move(secret_row), BitVec()) {}

HiddenOracle::HiddenOracle(BitVec secret_row, BitVec flip_mask) : row_(std::move(secret_row)) {
  if (!power_of_two(row_.size()))
    throw std::invalid_argument("HiddenOracle: row length must be a power of two");
  size_t N = row_.size();
  n_ = 0;
  while ((size_t(1) << n_) < N) ++n_;
  if (flip_mask.size() == 0) flip_mask = BitVec(N);
  set_mask(flip_mask);
}

void HiddenOracle::set_mask(const BitVec& mask) {
  if (mask.size() != row_.size())
    throw std::invalid_argument("HiddenOracle: mask length differs from the row");
  mask_ = mask;
}

OracleView full_view(HiddenOracle& oracle) { return {&oracle, oracle.n(), 0, 0}; }

OracleView subcube_view(HiddenOracle& oracle, size_t n, size_t shift, size_t base) {
  OracleView v{&oracle, n, shift, base};
  size_t window = ((size_t(1) << n) - 1) << shift;
  if (n + shift > oracle.n() || (base & window) != 0 ||
      v.map((size_t(1) << n) - 1) >= oracle.domain())
    throw std::invalid_argument("subcube_view: view does not fit in the oracle domain");
  return v;
}

void apply_phase_oracle(StateVector& state, const OracleView& view) {
  if (state.n != view.n) throw std::invalid_argument("apply_phase_oracle: register size mismatch");
  view.oracle->tick();
  size_t N = size_t(1) << view.n;
  for (size_t x = 0; x < N; ++x) {
    if (view.oracle->effective_value(view.map(x))) state.amps[x] = -state.amps[x];
  }
}

void apply_phase_oracle(StateVector& state, HiddenOracle& oracle) {
  apply_phase_oracle(state, full_view(oracle));
}

void apply_hadamard_all(StateVector& state) {
  size_t N = state.amps.size();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (size_t len = 1; len < N; len <<= 1) {
    for (size_t block = 0; block < N; block += len << 1) {
      for (size_t i = block; i < block + len; ++i) {
        auto a = state.amps[i];
        auto b = state.amps[i + len];
        state.amps[i] = (a + b) * inv_sqrt2;
        state.amps[i + len] = (a - b) * inv_sqrt2;
      }
    }
  }
}

void apply_diffusion(StateVector& state) {
  std::complex<double> mean(0.0, 0.0);
  for (const auto& a : state.amps) mean += a;
  mean /= double(state.amps.size());
  for (auto& a : state.amps) a = 2.0 * mean - a;
}

size_t measure(const StateVector& state, Rng& rng) {
  double total = norm_sq(state);
  if (std::abs(total - 1.0) > 1e-6)
    throw std::logic_error("measure: state is not normalized");
  double u = rng.real01() * total;
  double acc = 0.0;
  for (size_t x = 0; x < state.amps.size(); ++x) {
    acc += std::norm(state.amps[x]);
    if (u < acc) return x;
  }
  return state.amps.size() - 1;
}

bool classical_query(const OracleView& view, size_t j) {
  return view.oracle->classical_query(view.map(j));
}

}  // namespace oraclid
