#include "oraclid/oracle_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace oraclid {

OracleMatrix OracleMatrix::from_rows(size_t n, std::vector<BitVec> rows) {
  std::vector<size_t> ids(rows.size());
  for (size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  return from_rows(n, std::move(rows), std::move(ids));
}

OracleMatrix OracleMatrix::from_rows(size_t n, std::vector<BitVec> rows, std::vector<size_t> ids) {
  if (n > kMaxQubits) throw std::invalid_argument("OracleMatrix: n exceeds the size cap");
  if (rows.empty()) throw std::invalid_argument("OracleMatrix: need at least one row");
  if (ids.size() != rows.size()) throw std::invalid_argument("OracleMatrix: ids/rows mismatch");
  size_t N = size_t(1) << n;
  std::unordered_set<BitVec, BitVecHash> seen;
  seen.reserve(rows.size() * 2);
  for (const auto& r : rows) {
    if (r.size() != N) throw std::invalid_argument("OracleMatrix: row length differs from 2^n");
    if (!seen.insert(r).second) throw std::invalid_argument("OracleMatrix: duplicate row");
  }
  OracleMatrix m;
  m.n_ = n;
  m.rows_ = std::move(rows);
  m.ids_ = std::move(ids);
  return m;
}

OracleMatrix OracleMatrix::from_strings(size_t n, const std::vector<std::string>& rows) {
  std::vector<BitVec> parsed;
  parsed.reserve(rows.size());
  for (const auto& s : rows) parsed.push_back(BitVec::from_string(s));
  return from_rows(n, std::move(parsed));
}

FlipResult column_flip(const OracleMatrix& S) {
  size_t N = S.num_columns();
  size_t M = S.num_rows();
  ColumnStats stats = sensitivity(S);
  BitVec mask(N);
  for (size_t j = 0; j < N; ++j) {
    if (2 * stats.ones[j] > M) mask.set(j, true);
  }
  std::vector<BitVec> rows;
  rows.reserve(M);
  for (size_t i = 0; i < M; ++i) {
    BitVec r = S.row(i);
    r.xor_with(mask);
    rows.push_back(std::move(r));
  }
  return {OracleMatrix::from_rows(S.n(), std::move(rows), S.row_ids()), std::move(mask)};
}

ColumnStats sensitivity(const OracleMatrix& S) {
  ColumnStats stats;
  stats.ones.assign(S.num_columns(), 0);
  for (size_t i = 0; i < S.num_rows(); ++i) {
    const BitVec& r = S.row(i);
    for (size_t j = 0; j < stats.ones.size(); ++j)
      if (r.get(j)) ++stats.ones[j];
  }
  for (size_t c : stats.ones) stats.max_ones = std::max(stats.max_ones, c);
  return stats;
}

bool is_one_sensitive(const OracleMatrix& S) {
  ColumnStats stats = sensitivity(S);
  for (size_t c : stats.ones)
    if (2 * c > S.num_rows()) return false;
  return true;
}

size_t half_weight_threshold(const OracleMatrix& S) {
  std::vector<size_t> weights(S.num_rows());
  for (size_t i = 0; i < weights.size(); ++i) weights[i] = S.row_weight(i);
  std::sort(weights.begin(), weights.end(), std::greater<size_t>());
  size_t idx = (weights.size() + 1) / 2 - 1;  // the ceil(M/2)-th largest
  return weights[idx];
}

std::optional<OracleMatrix> eliminate_by_value(const OracleMatrix& S, size_t column, bool value) {
  if (column >= S.num_columns()) throw std::out_of_range("eliminate_by_value: column");
  std::vector<BitVec> rows;
  std::vector<size_t> ids;
  for (size_t i = 0; i < S.num_rows(); ++i) {
    if (S.value(i, column) == value) {
      rows.push_back(S.row(i));
      ids.push_back(S.row_id(i));
    }
  }
  if (rows.empty()) return std::nullopt;
  return OracleMatrix::from_rows(S.n(), std::move(rows), std::move(ids));
}

std::optional<OracleMatrix> eliminate_heavy_rows(const OracleMatrix& S, size_t min_weight) {
  std::vector<BitVec> rows;
  std::vector<size_t> ids;
  for (size_t i = 0; i < S.num_rows(); ++i) {
    if (S.row_weight(i) < min_weight) {
      rows.push_back(S.row(i));
      ids.push_back(S.row_id(i));
    }
  }
  if (rows.empty()) return std::nullopt;
  return OracleMatrix::from_rows(S.n(), std::move(rows), std::move(ids));
}

namespace {

// Split score of a column against one group: min(#0, #1), zero when the
// column does not split the group at all.
size_t split_score(const OracleMatrix& S, const std::vector<size_t>& group, size_t column) {
  size_t ones = 0;
  for (size_t i : group) ones += S.value(i, column);
  return std::min(ones, group.size() - ones);
}

}  // namespace

std::vector<size_t> greedy_distinguishing_columns(const OracleMatrix& S) {
  std::vector<std::vector<size_t>> groups{std::vector<size_t>(S.num_rows())};
  for (size_t i = 0; i < S.num_rows(); ++i) groups[0][i] = i;

  std::vector<size_t> chosen;
  std::vector<bool> used(S.num_columns(), false);
  for (;;) {
    size_t target = groups.size();
    for (size_t g = 0; g < groups.size(); ++g) {
      if (groups[g].size() < 2) continue;
      if (target == groups.size() || groups[g].size() > groups[target].size()) target = g;
    }
    if (target == groups.size()) break;  // all singletons

    size_t best_col = S.num_columns();
    size_t best_score = 0;
    for (size_t j = 0; j < S.num_columns(); ++j) {
      if (used[j]) continue;
      size_t score = split_score(S, groups[target], j);
      if (score > best_score) {
        best_score = score;
        best_col = j;
      }
    }
    if (best_col == S.num_columns())
      throw std::logic_error("greedy_distinguishing_columns: unsplittable group of distinct rows");
    used[best_col] = true;
    chosen.push_back(best_col);

    std::vector<std::vector<size_t>> next;
    for (auto& g : groups) {
      std::vector<size_t> zeros, ones;
      for (size_t i : g) (S.value(i, best_col) ? ones : zeros).push_back(i);
      if (!zeros.empty()) next.push_back(std::move(zeros));
      if (!ones.empty()) next.push_back(std::move(ones));
    }
    groups = std::move(next);
  }
  return chosen;
}

OracleMatrix reduce_columns(const OracleMatrix& S) {
  size_t M = S.num_rows();
  if (2 * M > S.num_columns())
    throw std::invalid_argument("reduce_columns: needs M <= N/2");

  std::vector<size_t> cols = greedy_distinguishing_columns(S);
  size_t target = 1, bits = 0;
  while (target < M) {
    target <<= 1;
    ++bits;
  }
  std::vector<bool> picked(S.num_columns(), false);
  for (size_t j : cols) picked[j] = true;
  for (size_t j = 0; j < S.num_columns() && cols.size() < target; ++j) {
    if (!picked[j]) {
      picked[j] = true;
      cols.push_back(j);
    }
  }

  std::vector<BitVec> rows;
  rows.reserve(M);
  for (size_t i = 0; i < M; ++i) {
    BitVec r(target);
    for (size_t c = 0; c < cols.size(); ++c) r.set(c, S.value(i, cols[c]));
    rows.push_back(std::move(r));
  }
  return OracleMatrix::from_rows(bits, std::move(rows), S.row_ids());
}

}  // namespace oraclid
