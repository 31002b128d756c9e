#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace oraclid {

inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Seedable generator. Children are derived by hashing the parent seed with a
// key, never by sharing stream state, so (master, oracle id, trial) always
// maps to the same child stream regardless of scheduling or trial count.
// Bounded and real draws are implemented locally so results depend only on
// mt19937_64 output, not on standard-library distribution internals.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

  uint64_t seed() const { return seed_; }

  Rng split(uint64_t a, uint64_t b = 0) const {
    uint64_t s = splitmix64(seed_ ^ splitmix64(a ^ 0x6a09e667f3bcc909ull));
    return Rng(splitmix64(s ^ splitmix64(b ^ 0xbb67ae8584caa73bull)));
  }

  uint64_t next() { return engine_(); }

  // Uniform in [0, bound), unbiased via rejection.
  size_t below(size_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    uint64_t threshold = (0 - uint64_t(bound)) % uint64_t(bound);
    for (;;) {
      uint64_t x = next();
      if (x >= threshold) return size_t(x % uint64_t(bound));
    }
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double real01() { return double(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return real01() < p; }

  // Standard normal via Box-Muller; draws two uniforms per call.
  double normal() {
    double u = 1.0 - real01();
    double v = real01();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586477 * v);
  }

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace oraclid
