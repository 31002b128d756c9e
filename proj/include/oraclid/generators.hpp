#pragma once

#include <cstdint>

#include "oraclid/oracle_matrix.hpp"

namespace oraclid {

// Single-target family: f_i(j) = 1 iff i == j. M = N.
OracleMatrix make_grover(size_t n);

// Inner-product family: f_i(j) = i.j mod 2. M = N.
OracleMatrix make_bv(size_t n);

// Prefix/suffix family: f_a(x) = 1 iff the top n-k bits of a and x agree and
// the bottom k bits satisfy suffix(a).suffix(x) = 0 mod 2. M = N, #(S) = 2^k.
OracleMatrix make_hybrid(size_t n, size_t k);

// Each entry independently 1 with probability K/N; rows that collide with an
// earlier row are redrawn (at most 100 times each) so the set stays distinct.
OracleMatrix sample_av(size_t n, size_t K, uint64_t seed);

// OR of K pairwise-disjoint random permutation matrices, built by sequential
// random perfect matchings with rejection. Every row and column weight is
// exactly K.
OracleMatrix sample_balanced(size_t n, size_t K, uint64_t seed);

}  // namespace oraclid
