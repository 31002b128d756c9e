#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oraclid/bitvec.hpp"

namespace oraclid {

// A known oracle set: M pairwise-distinct rows over N = 2^n inputs. Row ids
// name the original rows and survive eliminations, so a shrunken candidate
// set can still point back at the matrix it came from. Instances are
// immutable; every transform returns a new matrix.
class OracleMatrix {
 public:
  static constexpr size_t kMaxQubits = 20;

  static OracleMatrix from_rows(size_t n, std::vector<BitVec> rows);
  static OracleMatrix from_rows(size_t n, std::vector<BitVec> rows, std::vector<size_t> ids);
  static OracleMatrix from_strings(size_t n, const std::vector<std::string>& rows);

  size_t n() const { return n_; }
  size_t num_columns() const { return size_t(1) << n_; }
  size_t num_rows() const { return rows_.size(); }

  const BitVec& row(size_t i) const { return rows_[i]; }
  size_t row_id(size_t i) const { return ids_[i]; }
  const std::vector<size_t>& row_ids() const { return ids_; }
  bool value(size_t i, size_t j) const { return rows_[i].get(j); }
  size_t row_weight(size_t i) const { return rows_[i].count_ones(); }

 private:
  OracleMatrix() = default;

  size_t n_ = 0;
  std::vector<BitVec> rows_;
  std::vector<size_t> ids_;
};

struct FlipResult {
  OracleMatrix matrix;
  BitVec mask;  // mask.get(j) == true means column j was negated
};

struct ColumnStats {
  std::vector<size_t> ones;  // per-column count of 1 entries
  size_t max_ones = 0;       // #(S)
};

// Negate every column holding more 1s than 0s; exact ties stay as they are.
FlipResult column_flip(const OracleMatrix& S);

ColumnStats sensitivity(const OracleMatrix& S);
bool is_one_sensitive(const OracleMatrix& S);

// Largest K such that at least half of the rows carry K or more 1s.
size_t half_weight_threshold(const OracleMatrix& S);

// Keep rows whose entry at `column` equals `value`; nullopt when none do.
std::optional<OracleMatrix> eliminate_by_value(const OracleMatrix& S, size_t column, bool value);

// Drop rows with weight >= min_weight; nullopt when every row is dropped.
std::optional<OracleMatrix> eliminate_heavy_rows(const OracleMatrix& S, size_t min_weight);

// Greedy distinguishing set: repeatedly split the largest group of
// still-identical rows on the column giving the most balanced split.
std::vector<size_t> greedy_distinguishing_columns(const OracleMatrix& S);

// Shrink to the greedy distinguishing columns padded with the lowest-index
// remaining columns up to the smallest power of two >= M. Requires M <= N/2.
OracleMatrix reduce_columns(const OracleMatrix& S);

}  // namespace oraclid
