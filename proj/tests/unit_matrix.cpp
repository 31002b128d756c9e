#include <doctest.h>

#include <set>
#include <stdexcept>

#include "brute.hpp"
#include "oraclid/generators.hpp"
#include "oraclid/oracle_matrix.hpp"

using namespace oraclid;

namespace {

std::vector<std::string> to_strings(const OracleMatrix& S) {
  std::vector<std::string> out;
  for (size_t i = 0; i < S.num_rows(); ++i) out.push_back(S.row(i).to_string());
  return out;
}

}  // namespace

TEST_CASE("from_strings validates shape and distinctness") {
  CHECK_THROWS_AS(OracleMatrix::from_strings(2, {}), std::invalid_argument);
  CHECK_THROWS_AS(OracleMatrix::from_strings(2, {"101"}), std::invalid_argument);
  CHECK_THROWS_AS(OracleMatrix::from_strings(2, {"1010", "1010"}), std::invalid_argument);
  CHECK_THROWS_AS(OracleMatrix::from_strings(21, {"0"}), std::invalid_argument);
  OracleMatrix S = OracleMatrix::from_strings(2, {"1010", "0101"});
  CHECK(S.num_rows() == 2);
  CHECK(S.row_id(1) == 1);
  CHECK(S.value(0, 0));
  CHECK_FALSE(S.value(0, 1));
}

TEST_CASE("column flip matches the majority rule") {
  OracleMatrix S = OracleMatrix::from_strings(2, {"1110", "1100", "1000"});
  FlipResult f = column_flip(S);
  CHECK(f.mask.to_string() == "1100");
  CHECK(to_strings(f.matrix) == std::vector<std::string>{"0010", "0000", "0100"});
  CHECK(is_one_sensitive(f.matrix));

  auto [brows, bmask] = brute::flip_majority_columns(to_strings(S));
  CHECK(bmask == f.mask.to_string());
  CHECK(brows == to_strings(f.matrix));

  // flipping again changes nothing
  FlipResult again = column_flip(f.matrix);
  CHECK_FALSE(again.mask.any());
}

TEST_CASE("column flip leaves exact ties alone") {
  OracleMatrix S = OracleMatrix::from_strings(1, {"10", "01"});
  FlipResult f = column_flip(S);
  CHECK_FALSE(f.mask.any());
}

TEST_CASE("flip agrees with the reference on sampled matrices") {
  for (uint64_t seed : {1u, 2u, 3u, 4u}) {
    OracleMatrix S = sample_av(5, 6, seed);
    FlipResult f = column_flip(S);
    auto [brows, bmask] = brute::flip_majority_columns(to_strings(S));
    CHECK(bmask == f.mask.to_string());
    CHECK(brows == to_strings(f.matrix));
    CHECK(is_one_sensitive(f.matrix));
    CHECK(sensitivity(f.matrix).max_ones == brute::max_column_ones(brows));
  }
}

TEST_CASE("half weight threshold") {
  auto hwt = [](std::vector<std::string> rows) {
    size_t n = 0;
    while ((size_t(1) << n) < rows[0].size()) ++n;
    return half_weight_threshold(OracleMatrix::from_strings(n, rows));
  };
  // weights 0,1,2,3 -> second largest of the top half
  CHECK(hwt({"0000", "1000", "1100", "1110"}) == 2);
  CHECK(hwt({"11111000"}) == 5);
  CHECK(hwt({"11100000", "00111000", "00000111"}) == 3);
  CHECK(brute::half_weight_threshold({"0000", "1000", "1100", "1110"}) == 2);
  CHECK(brute::half_weight_threshold({"11111000"}) == 5);
}

TEST_CASE("half weight threshold is at least one for two distinct rows") {
  // at most one row can be all-zero, so the upper half always holds a 1
  for (uint64_t seed : {7u, 8u, 9u}) {
    OracleMatrix S = sample_av(4, 2, seed);
    FlipResult f = column_flip(S);
    CHECK(half_weight_threshold(f.matrix) >= 1);
  }
}

TEST_CASE("eliminate by value keeps exactly the matching rows") {
  OracleMatrix bv2 = make_bv(2);
  // column 3 is i0*j0 + i1*j1 with j=11: rows 0 and 3 give 0
  auto kept = eliminate_by_value(bv2, 3, false);
  REQUIRE(kept);
  CHECK(kept->row_ids() == std::vector<size_t>{0, 3});
  auto kept1 = eliminate_by_value(bv2, 3, true);
  REQUIRE(kept1);
  CHECK(kept1->row_ids() == std::vector<size_t>{1, 2});
  // no row has a 1 in column 0
  CHECK_FALSE(eliminate_by_value(bv2, 0, true).has_value());
}

TEST_CASE("eliminate heavy rows drops weight >= threshold") {
  OracleMatrix S = OracleMatrix::from_strings(2, {"0000", "1000", "1100", "1110"});
  auto kept = eliminate_heavy_rows(S, 2);
  REQUIRE(kept);
  CHECK(kept->row_ids() == std::vector<size_t>{0, 1});
  CHECK_FALSE(eliminate_heavy_rows(S, 0).has_value());
}

TEST_CASE("row ids survive chained eliminations") {
  OracleMatrix S = make_grover(3);
  auto a = eliminate_by_value(S, 5, false);
  REQUIRE(a);
  auto b = eliminate_heavy_rows(*a, 2);
  REQUIRE(b);
  for (size_t i = 0; i < b->num_rows(); ++i) {
    size_t id = b->row_id(i);
    CHECK(b->row(i) == S.row(id));
  }
}

TEST_CASE("greedy distinguishing columns separate all rows") {
  for (const OracleMatrix& S :
       {make_bv(3), make_grover(3), make_hybrid(4, 2), sample_av(4, 3, 11)}) {
    std::vector<size_t> cols = greedy_distinguishing_columns(S);
    std::set<std::string> keys;
    for (size_t i = 0; i < S.num_rows(); ++i) {
      std::string key;
      for (size_t c : cols) key += S.value(i, c) ? '1' : '0';
      keys.insert(key);
    }
    CHECK(keys.size() == S.num_rows());
  }
}

TEST_CASE("reduce_columns keeps a distinguishing square-ish matrix") {
  OracleMatrix S = OracleMatrix::from_strings(2, {"1000", "0100"});
  OracleMatrix R = reduce_columns(S);
  CHECK(R.num_columns() == 2);
  CHECK(to_strings(R) == std::vector<std::string>{"10", "01"});

  OracleMatrix big = make_hybrid(4, 1);
  OracleMatrix R2 = reduce_columns(OracleMatrix::from_rows(
      big.n(), {big.row(0), big.row(3), big.row(8)}, {0, 3, 8}));
  CHECK(R2.num_columns() == 4);  // smallest power of two >= 3
  CHECK(R2.num_rows() == 3);
  std::vector<std::string> reduced = to_strings(R2);
  std::set<std::string> keys(reduced.begin(), reduced.end());
  CHECK(keys.size() == 3);

  // needs room: M > N/2 is refused
  CHECK_THROWS_AS(reduce_columns(make_grover(2)), std::invalid_argument);
}
