#include <doctest.h>

#include <cmath>
#include <vector>

#include "oraclid/quantum.hpp"
#include "oraclid/rng.hpp"

using namespace oraclid;

TEST_CASE("uniform state is normalized with equal weights") {
  StateVector s = init_uniform(5);
  REQUIRE(s.amps.size() == 32);
  CHECK(norm_sq(s) == doctest::Approx(1.0).epsilon(1e-12));
  for (const auto& a : s.amps) CHECK(std::abs(a - s.amps[0]) < 1e-15);
}

TEST_CASE("hadamard twice is the identity") {
  StateVector s = init_uniform(4);
  HiddenOracle oracle(BitVec::from_string("0110100110010110"));
  apply_phase_oracle(s, oracle);
  StateVector before = s;
  apply_hadamard_all(s);
  apply_hadamard_all(s);
  for (size_t i = 0; i < s.amps.size(); ++i)
    CHECK(std::abs(s.amps[i] - before.amps[i]) < 1e-12);
}

TEST_CASE("phase oracle equals the explicit diagonal") {
  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    size_t n = 2 + trial % 5;
    size_t N = size_t(1) << n;
    std::string bits(N, '0');
    for (auto& c : bits) c = rng.bernoulli(0.5) ? '1' : '0';
    HiddenOracle oracle{BitVec::from_string(bits)};

    StateVector s = init_uniform(n);
    // scramble so the check is not on a symmetric state
    apply_hadamard_all(s);
    apply_diffusion(s);
    StateVector expected = s;
    apply_phase_oracle(s, oracle);
    for (size_t x = 0; x < N; ++x)
      if (bits[x] == '1') expected.amps[x] = -expected.amps[x];
    for (size_t x = 0; x < N; ++x) CHECK(std::abs(s.amps[x] - expected.amps[x]) < 1e-12);
  }
}

TEST_CASE("mask flips answers by xor") {
  HiddenOracle oracle(BitVec::from_string("1010"), BitVec::from_string("1100"));
  CHECK(oracle.effective_value(0) == false);  // 1 ^ 1
  CHECK(oracle.effective_value(1) == true);   // 0 ^ 1
  CHECK(oracle.effective_value(2) == true);
  CHECK(oracle.effective_value(3) == false);
  oracle.set_mask(BitVec(4));
  CHECK(oracle.effective_value(0) == true);
  CHECK_THROWS_AS(oracle.set_mask(BitVec(8)), std::invalid_argument);
}

TEST_CASE("oracle length must be a power of two") {
  CHECK_THROWS_AS(HiddenOracle(BitVec::from_string("101")), std::invalid_argument);
}

TEST_CASE("query counter ticks for queries only") {
  HiddenOracle oracle(BitVec::from_string("1010"));
  CHECK(oracle.query_count() == 0);
  oracle.effective_value(2);
  CHECK(oracle.query_count() == 0);
  oracle.classical_query(2);
  CHECK(oracle.query_count() == 1);
  StateVector s = init_uniform(2);
  apply_phase_oracle(s, oracle);
  CHECK(oracle.query_count() == 2);
  apply_hadamard_all(s);
  apply_diffusion(s);
  CHECK(oracle.query_count() == 2);  // unitaries without the oracle are free
  classical_query(full_view(oracle), 0);
  CHECK(oracle.query_count() == 3);
}

TEST_CASE("subcube view maps pinned bits") {
  HiddenOracle oracle(BitVec::from_string("0000000010000000"));  // n=4, one at 8
  OracleView prefixes = subcube_view(oracle, 2, 2, 0);  // x -> x << 2
  CHECK(prefixes.map(2) == 8);
  OracleView suffixes = subcube_view(oracle, 2, 0, 8);  // x -> 8 | x
  CHECK(suffixes.map(3) == 11);
  CHECK(classical_query(prefixes, 2) == true);
  CHECK(classical_query(suffixes, 0) == true);
  CHECK(classical_query(suffixes, 1) == false);

  CHECK_THROWS_AS(subcube_view(oracle, 5, 0, 0), std::invalid_argument);   // too wide
  CHECK_THROWS_AS(subcube_view(oracle, 2, 3, 0), std::invalid_argument);   // past the end
  CHECK_THROWS_AS(subcube_view(oracle, 2, 2, 4), std::invalid_argument);   // base in window
}

TEST_CASE("phase oracle on a view touches only mapped inputs") {
  HiddenOracle oracle(BitVec::from_string("0100000000000000"));
  OracleView v = subcube_view(oracle, 2, 0, 0);  // suffixes of prefix 0
  StateVector s = init_uniform(2);
  apply_phase_oracle(s, v);
  CHECK(s.amps[1].real() < 0);
  CHECK(s.amps[0].real() > 0);
  CHECK(oracle.query_count() == 1);
}

TEST_CASE("measurement follows the squared amplitudes") {
  Rng rng(99);
  StateVector s;
  s.n = 1;
  s.amps = {{0.6, 0.0}, {0.0, 0.8}};
  size_t ones = 0, draws = 20000;
  for (size_t i = 0; i < draws; ++i) ones += measure(s, rng) == 1;
  CHECK(double(ones) / double(draws) == doctest::Approx(0.64).epsilon(0.03));

  StateVector u = init_uniform(3);
  std::vector<size_t> counts(8, 0);
  for (size_t i = 0; i < 8000; ++i) ++counts[measure(u, rng)];
  double chi2 = 0;
  for (size_t c : counts) chi2 += (double(c) - 1000.0) * (double(c) - 1000.0) / 1000.0;
  CHECK(chi2 < 35.0);  // 7 dof, far beyond the 99.9% quantile
}

TEST_CASE("measurement refuses an unnormalized state") {
  StateVector s;
  s.n = 1;
  s.amps = {{0.5, 0.0}, {0.5, 0.0}};
  Rng rng(1);
  CHECK_THROWS_AS(measure(s, rng), std::logic_error);
}
