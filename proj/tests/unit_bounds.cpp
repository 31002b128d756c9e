#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "brute.hpp"
#include "oraclid/bounds.hpp"
#include "oraclid/generators.hpp"
#include "oraclid/rng.hpp"

using namespace oraclid;

namespace {

std::vector<std::string> to_strings(const OracleMatrix& S) {
  std::vector<std::string> out;
  for (size_t i = 0; i < S.num_rows(); ++i) out.push_back(S.row(i).to_string());
  return out;
}

OracleMatrix permute_columns(const OracleMatrix& S, Rng& rng) {
  size_t N = S.num_columns();
  std::vector<size_t> perm(N);
  for (size_t i = 0; i < N; ++i) perm[i] = i;
  for (size_t i = N; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
  std::vector<std::string> rows;
  for (size_t i = 0; i < S.num_rows(); ++i) {
    std::string r(N, '0');
    for (size_t j = 0; j < N; ++j) r[j] = S.value(i, perm[j]) ? '1' : '0';
    rows.push_back(std::move(r));
  }
  return OracleMatrix::from_strings(S.n(), rows);
}

}  // namespace

TEST_CASE("simple bound on the standard families") {
  BoundReport g = simple_adversary_bound(make_grover(4));
  CHECK(g.value == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(g.sensitivity_k == 1);
  BoundReport b = simple_adversary_bound(make_bv(4));
  CHECK(b.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(b.sensitivity_k == 8);
  BoundReport h = simple_adversary_bound(make_hybrid(4, 2));
  CHECK(h.value == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("simple bound measures the flipped matrix") {
  // complement of single-target rows: every column nearly all 1s; flipping
  // restores single-target structure, so the bound stays sqrt(M)
  OracleMatrix g = make_grover(3);
  std::vector<std::string> rows = to_strings(g);
  for (auto& r : rows)
    for (auto& c : r) c = c == '1' ? '0' : '1';
  BoundReport rep = simple_adversary_bound(OracleMatrix::from_strings(3, rows));
  CHECK(rep.value == doctest::Approx(std::sqrt(8.0)).epsilon(1e-12));
  CHECK(rep.sensitivity_k == 1);
}

TEST_CASE("simple bound is invariant under column permutation") {
  Rng rng(55);
  for (const OracleMatrix& S : {make_bv(3), make_hybrid(4, 2), sample_av(5, 5, 6)}) {
    double base = simple_adversary_bound(S).value;
    for (int i = 0; i < 5; ++i) {
      OracleMatrix P = permute_columns(S, rng);
      CHECK(simple_adversary_bound(P).value == doctest::Approx(base).epsilon(1e-12));
    }
  }
}

TEST_CASE("relation bound on a hand relation over single-target rows") {
  OracleMatrix S = make_grover(2);
  AdversaryRelation rel;
  rel.x_rows = {0};
  rel.y_rows = {1, 2, 3};
  rel.pairs = {{0, 1}, {0, 2}, {0, 3}};
  BoundReport rep = adversary_bound(S, rel);
  CHECK(rep.m == 3);
  CHECK(rep.m_prime == 1);
  CHECK(rep.l_max == 3);
  CHECK(rep.value == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness->a == 0);
  CHECK(rep.witness->b == 1);
  CHECK(rep.witness->column == 0);

  brute::RelationBound want = brute::relation_bound_from_definition(to_strings(S), rel.pairs);
  CHECK(rep.value == doctest::Approx(want.value).epsilon(1e-12));
  CHECK(rep.l_max == want.l_max);
}

TEST_CASE("relation bound agrees with the definition on sampled relations") {
  Rng rng(91);
  for (const OracleMatrix& S : {make_bv(3), make_hybrid(3, 1), sample_av(4, 4, 13)}) {
    for (int round = 0; round < 4; ++round) {
      size_t M = S.num_rows();
      size_t half = M / 2;
      AdversaryRelation rel;
      for (size_t i = 0; i < half; ++i) rel.x_rows.push_back(i);
      for (size_t i = half; i < M; ++i) rel.y_rows.push_back(i);
      for (size_t a : rel.x_rows)
        for (size_t b : rel.y_rows)
          if (rng.bernoulli(0.7)) rel.pairs.push_back({a, b});
      bool connected = true;
      {
        std::vector<size_t> da(M, 0), db(M, 0);
        for (auto [a, b] : rel.pairs) ++da[a], ++db[b];
        for (size_t a : rel.x_rows) connected = connected && da[a] > 0;
        for (size_t b : rel.y_rows) connected = connected && db[b] > 0;
      }
      if (!connected || rel.pairs.empty()) continue;
      BoundReport rep = adversary_bound(S, rel);
      brute::RelationBound want = brute::relation_bound_from_definition(to_strings(S), rel.pairs);
      CHECK(rep.m == want.m);
      CHECK(rep.m_prime == want.m_prime);
      CHECK(rep.l_max == want.l_max);
      CHECK(rep.value == doctest::Approx(want.value).epsilon(1e-12));
    }
  }
}

TEST_CASE("relation bound rejects malformed relations") {
  OracleMatrix S = make_grover(2);
  AdversaryRelation rel;
  CHECK_THROWS_AS(adversary_bound(S, rel), std::invalid_argument);  // empty
  rel.x_rows = {0};
  rel.y_rows = {1, 2};
  rel.pairs = {{0, 1}};
  CHECK_THROWS_AS(adversary_bound(S, rel), std::invalid_argument);  // row 2 unused
  rel.y_rows = {1};
  rel.pairs = {{0, 9}};
  CHECK_THROWS_AS(adversary_bound(S, rel), std::invalid_argument);  // out of range
}

TEST_CASE("halves relation bound never falls far below the simple bound") {
  std::vector<OracleMatrix> sets = {make_grover(3), make_bv(3),      make_bv(5),
                                    make_hybrid(4, 2), make_hybrid(5, 2), make_grover(5),
                                    sample_av(5, 4, 8), sample_balanced(5, 3, 2)};
  for (const OracleMatrix& S : sets) {
    double simple = simple_adversary_bound(S).value;
    double halves = adversary_bound(S, make_halves_relation(S)).value;
    CHECK(halves >= simple / std::sqrt(2.0) - 1e-9);
  }
}

TEST_CASE("threshold instance hits the closed form") {
  for (size_t N : {4u, 8u, 16u}) {
    for (size_t K : {1u, 2u, 3u}) {
      ThresholdInstance inst = threshold_instance_bound(N, K);
      CHECK(inst.report.m == N - K);
      CHECK(inst.report.m_prime == K + 1);
      CHECK(inst.report.l_max == 1);
      CHECK(inst.report.value ==
            doctest::Approx(std::sqrt(double((N - K) * (K + 1)))).epsilon(1e-12));
      // relation really connects weight-K rows to weight-(K+1) rows
      for (auto [a, b] : inst.relation.pairs) {
        CHECK(inst.matrix.row_weight(a) == K);
        CHECK(inst.matrix.row_weight(b) == K + 1);
      }
      brute::RelationBound want =
          brute::relation_bound_from_definition(to_strings(inst.matrix), inst.relation.pairs);
      CHECK(want.value == doctest::Approx(inst.report.value).epsilon(1e-12));
    }
  }
  CHECK(threshold_instance_bound(4, 1).report.value ==
        doctest::Approx(std::sqrt(6.0)).epsilon(1e-12));
  CHECK_THROWS_AS(threshold_instance_bound(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(threshold_instance_bound(32, 1), std::invalid_argument);
  CHECK_THROWS_AS(threshold_instance_bound(4, 4), std::invalid_argument);
}
