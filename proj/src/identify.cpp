#include "oraclid/identify.hpp"

#include <cmath>
#include <stdexcept>

#include "oraclid/search.hpp"

namespace oraclid {

void AlgorithmConstants::set(const std::string& name, double value) {
  auto as_count = [&](int& slot, int min_value) {
    if (value != std::floor(value) || value < min_value)
      throw std::invalid_argument("constant " + name + " wants an integer >= " +
                                  std::to_string(min_value));
    slot = int(value);
  };
  if (name == "general_budget_c") general_budget_c = value;
  else if (name == "square_budget_c") square_budget_c = value;
  else if (name == "av_budget_c") av_budget_c = value;
  else if (name == "balanced_budget_c") balanced_budget_c = value;
  else if (name == "hybrid_budget_c") hybrid_budget_c = value;
  else if (name == "square_retries") as_count(square_retries, 0);
  else if (name == "av_classical_slack") as_count(av_classical_slack, 0);
  else if (name == "rep_floor") as_count(rep_floor, 1);
  else if (name == "round_ceiling_factor") as_count(round_ceiling_factor, 1);
  else throw std::invalid_argument("unknown constant: " + name);
}

std::vector<std::string> AlgorithmConstants::names() {
  return {"general_budget_c", "square_budget_c",    "av_budget_c",
          "balanced_budget_c", "hybrid_budget_c",   "square_retries",
          "av_classical_slack", "rep_floor",        "round_ceiling_factor"};
}

namespace {

uint64_t sqrt_budget(double c, double ratio) {
  return uint64_t(std::ceil(c * std::sqrt(ratio)));
}

size_t ceil_log2(size_t x) {
  size_t bits = 0;
  while ((size_t(1) << bits) < x) ++bits;
  return bits;
}

// ceil(log2 log2 M), floored
size_t repetitions(size_t M, int floor_reps) {
  double ll = (M >= 2) ? std::log2(std::log2(double(M))) : 0.0;
  long r = (long)std::ceil(ll - 1e-12);
  if (r < floor_reps) r = floor_reps;
  return size_t(r);
}

void check_shape(const OracleMatrix& S, const HiddenOracle& oracle) {
  if (oracle.domain() != S.num_columns())
    throw std::invalid_argument("identify: oracle domain differs from the matrix");
}

// Lowest-index column on which the surviving rows disagree.
size_t find_distinguishing_column(const OracleMatrix& Z) {
  for (size_t j = 0; j < Z.num_columns(); ++j) {
    bool first = Z.value(0, j);
    for (size_t i = 1; i < Z.num_rows(); ++i)
      if (Z.value(i, j) != first) return j;
  }
  throw std::logic_error("distinct rows must disagree somewhere");
}

Transcript begin_transcript(const char* algorithm, size_t n, size_t M) {
  Transcript t;
  t.algorithm = algorithm;
  t.n = n;
  t.M = M;
  return t;
}

}  // namespace

Transcript identify_general(const OracleMatrix& S, HiddenOracle& oracle, Rng& rng,
                            const AlgorithmConstants& constants) {
  check_shape(S, oracle);
  if (S.num_rows() < 2) throw std::invalid_argument("identify_general: needs M >= 2");

  Transcript t = begin_transcript("identify_general", S.n(), S.num_rows());
  uint64_t start = oracle.query_count();
  size_t N = S.num_columns();
  size_t reps = repetitions(S.num_rows(), constants.rep_floor);
  size_t ceiling = size_t(constants.round_ceiling_factor) * std::max<size_t>(ceil_log2(S.num_rows()), 1);

  OracleMatrix Z = S;
  BitVec cumulative_mask(N);
  while (Z.num_rows() > 1) {
    if (t.rounds.size() >= ceiling) {
      t.outcome = RunOutcome::kBudgetCeiling;
      t.total_queries = oracle.query_count() - start;
      return t;
    }

    FlipResult flip = column_flip(Z);
    Z = std::move(flip.matrix);
    cumulative_mask.xor_with(flip.mask);
    oracle.set_mask(cumulative_mask);

    size_t K = half_weight_threshold(Z);
    uint64_t budget = sqrt_budget(constants.general_budget_c, double(N) / double(std::max<size_t>(K, 1)));

    RoundRecord round;
    round.phase = "flip-search";
    round.candidates_before = Z.num_rows();
    round.threshold = K;
    round.budget = budget;
    uint64_t round_start = oracle.query_count();

    std::optional<size_t> hit;
    for (size_t rep = 0; rep < reps && !hit; ++rep) {
      SearchOutcome out = bbht_search(full_view(oracle), budget, rng);
      hit = out.found;
    }
    round.queries = oracle.query_count() - round_start;

    std::optional<OracleMatrix> next;
    if (hit) {
      round.hit = true;
      round.column = int64_t(*hit);
      next = eliminate_by_value(Z, *hit, true);
    } else {
      next = eliminate_heavy_rows(Z, K);
    }
    if (!next) {
      round.candidates_after = 0;
      t.rounds.push_back(std::move(round));
      t.outcome = RunOutcome::kEmptyCandidates;
      t.total_queries = oracle.query_count() - start;
      return t;
    }
    Z = std::move(*next);
    round.candidates_after = Z.num_rows();
    t.rounds.push_back(std::move(round));
  }

  t.outcome = RunOutcome::kIdentified;
  t.identified_row = Z.row_id(0);
  t.total_queries = oracle.query_count() - start;
  return t;
}

Transcript identify_square(const OracleMatrix& S, HiddenOracle& oracle, Rng& rng,
                           const AlgorithmConstants& constants) {
  check_shape(S, oracle);
  if (S.num_rows() < 2) throw std::invalid_argument("identify_square: needs M >= 2");

  Transcript t = begin_transcript("identify_square", S.n(), S.num_rows());
  uint64_t start = oracle.query_count();
  size_t N = S.num_columns();
  size_t s = size_t(std::ceil(std::sqrt(double(N))));

  auto finish = [&](RunOutcome outcome, std::optional<size_t> id) {
    t.outcome = outcome;
    t.identified_row = id;
    t.total_queries = oracle.query_count() - start;
    return t;
  };

  // Step 1: classical queries on columns carrying at least ceil(sqrt N)
  // of both answer values.
  OracleMatrix Z = S;
  while (Z.num_rows() > 1) {
    ColumnStats stats = sensitivity(Z);
    size_t pick = Z.num_columns();
    for (size_t j = 0; j < Z.num_columns(); ++j) {
      size_t ones = stats.ones[j];
      size_t zeros = Z.num_rows() - ones;
      if (ones >= s && zeros >= s) {
        pick = j;
        break;
      }
    }
    if (pick == Z.num_columns()) break;

    RoundRecord round;
    round.phase = "balanced-column-query";
    round.candidates_before = Z.num_rows();
    round.column = int64_t(pick);
    bool answer = oracle.classical_query(pick);
    round.queries = 1;
    round.hit = answer;
    std::optional<OracleMatrix> next = eliminate_by_value(Z, pick, answer);
    if (!next) {
      round.candidates_after = 0;
      t.rounds.push_back(std::move(round));
      return finish(RunOutcome::kEmptyCandidates, std::nullopt);
    }
    Z = std::move(*next);
    round.candidates_after = Z.num_rows();
    t.rounds.push_back(std::move(round));
  }
  if (Z.num_rows() == 1) return finish(RunOutcome::kIdentified, Z.row_id(0));

  // Step 2: flip, then search with one retry.
  FlipResult flip = column_flip(Z);
  Z = std::move(flip.matrix);
  oracle.set_mask(flip.mask);

  uint64_t budget = sqrt_budget(constants.square_budget_c, double(N));
  std::optional<size_t> hit;
  for (int attempt = 0; attempt <= constants.square_retries && !hit; ++attempt) {
    RoundRecord round;
    round.phase = "flip-search";
    round.candidates_before = Z.num_rows();
    round.candidates_after = Z.num_rows();
    round.budget = budget;
    uint64_t round_start = oracle.query_count();
    SearchOutcome out = bbht_search(full_view(oracle), budget, rng);
    round.queries = oracle.query_count() - round_start;
    if (out.found) {
      hit = out.found;
      round.hit = true;
      round.column = int64_t(*out.found);
    }
    t.rounds.push_back(std::move(round));
  }
  if (!hit) return finish(RunOutcome::kGroverMiss, std::nullopt);

  std::optional<OracleMatrix> next = eliminate_by_value(Z, *hit, true);
  if (!next) return finish(RunOutcome::kEmptyCandidates, std::nullopt);
  Z = std::move(*next);
  t.rounds.back().candidates_after = Z.num_rows();

  // Step 3: classical distinguishing queries among the rows sharing the hit.
  while (Z.num_rows() > 1) {
    size_t column = find_distinguishing_column(Z);
    RoundRecord round;
    round.phase = "distinguish-query";
    round.candidates_before = Z.num_rows();
    round.column = int64_t(column);
    bool answer = oracle.classical_query(column);
    round.queries = 1;
    round.hit = answer;
    std::optional<OracleMatrix> rest = eliminate_by_value(Z, column, answer);
    if (!rest) {
      round.candidates_after = 0;
      t.rounds.push_back(std::move(round));
      return finish(RunOutcome::kEmptyCandidates, std::nullopt);
    }
    Z = std::move(*rest);
    round.candidates_after = Z.num_rows();
    t.rounds.push_back(std::move(round));
  }
  return finish(RunOutcome::kIdentified, Z.row_id(0));
}

Transcript identify_av(const OracleMatrix& S, size_t K, int d, HiddenOracle& oracle, Rng& rng,
                       const AlgorithmConstants& constants) {
  check_shape(S, oracle);
  if (K < 1) throw std::invalid_argument("identify_av: K must be positive");
  if (d < 0) throw std::invalid_argument("identify_av: d must be nonnegative");

  Transcript t = begin_transcript("identify_av", S.n(), S.num_rows());
  uint64_t start = oracle.query_count();
  size_t N = S.num_columns();
  uint64_t budget = sqrt_budget(constants.av_budget_c, double(N) / double(K));

  auto finish = [&](RunOutcome outcome, std::optional<size_t> id) {
    t.outcome = outcome;
    t.identified_row = id;
    t.total_queries = oracle.query_count() - start;
    return t;
  };

  OracleMatrix Z = S;
  for (int run = 0; run < d && Z.num_rows() > 1; ++run) {
    RoundRecord round;
    round.phase = "sparse-search";
    round.candidates_before = Z.num_rows();
    round.candidates_after = Z.num_rows();
    round.budget = budget;
    uint64_t round_start = oracle.query_count();
    SearchOutcome out = bbht_search(full_view(oracle), budget, rng);
    round.queries = oracle.query_count() - round_start;
    if (out.found) {
      round.hit = true;
      round.column = int64_t(*out.found);
      std::optional<OracleMatrix> next = eliminate_by_value(Z, *out.found, true);
      if (!next) {
        round.candidates_after = 0;
        t.rounds.push_back(std::move(round));
        return finish(RunOutcome::kEmptyCandidates, std::nullopt);
      }
      Z = std::move(*next);
      round.candidates_after = Z.num_rows();
    }
    t.rounds.push_back(std::move(round));
  }

  // classical distinguishing phase, capped near 2 log2 N
  size_t cap = 2 * ceil_log2(N) + size_t(constants.av_classical_slack);
  size_t spent = 0;
  while (Z.num_rows() > 1) {
    if (spent >= cap) {
      t.classical_cap_hit = true;
      return finish(RunOutcome::kBudgetCeiling, std::nullopt);
    }
    size_t column = find_distinguishing_column(Z);
    RoundRecord round;
    round.phase = "distinguish-query";
    round.candidates_before = Z.num_rows();
    round.column = int64_t(column);
    bool answer = oracle.classical_query(column);
    round.queries = 1;
    round.hit = answer;
    ++spent;
    std::optional<OracleMatrix> next = eliminate_by_value(Z, column, answer);
    if (!next) {
      round.candidates_after = 0;
      t.rounds.push_back(std::move(round));
      return finish(RunOutcome::kEmptyCandidates, std::nullopt);
    }
    Z = std::move(*next);
    round.candidates_after = Z.num_rows();
    t.rounds.push_back(std::move(round));
  }
  return finish(RunOutcome::kIdentified, Z.row_id(0));
}

Transcript identify_balanced(const OracleMatrix& S, size_t K, HiddenOracle& oracle, Rng& rng,
                             const AlgorithmConstants& constants) {
  check_shape(S, oracle);
  if (K < 1) throw std::invalid_argument("identify_balanced: K must be positive");

  Transcript t = begin_transcript("identify_balanced", S.n(), S.num_rows());
  uint64_t start = oracle.query_count();
  size_t N = S.num_columns();
  uint64_t budget = sqrt_budget(constants.balanced_budget_c, double(N) / double(K));

  auto finish = [&](RunOutcome outcome, std::optional<size_t> id) {
    t.outcome = outcome;
    t.identified_row = id;
    t.total_queries = oracle.query_count() - start;
    return t;
  };

  RoundRecord round;
  round.phase = "balanced-search";
  round.candidates_before = S.num_rows();
  round.candidates_after = S.num_rows();
  round.budget = budget;
  uint64_t round_start = oracle.query_count();
  SearchOutcome out = bbht_search(full_view(oracle), budget, rng);
  round.queries = oracle.query_count() - round_start;
  if (!out.found) {
    t.rounds.push_back(std::move(round));
    return finish(RunOutcome::kGroverMiss, std::nullopt);
  }
  round.hit = true;
  round.column = int64_t(*out.found);

  std::optional<OracleMatrix> next = eliminate_by_value(S, *out.found, true);
  if (!next) {
    round.candidates_after = 0;
    t.rounds.push_back(std::move(round));
    return finish(RunOutcome::kEmptyCandidates, std::nullopt);
  }
  OracleMatrix Z = std::move(*next);
  round.candidates_after = Z.num_rows();
  t.rounds.push_back(std::move(round));

  while (Z.num_rows() > 1) {
    size_t column = find_distinguishing_column(Z);
    RoundRecord r2;
    r2.phase = "distinguish-query";
    r2.candidates_before = Z.num_rows();
    r2.column = int64_t(column);
    bool answer = oracle.classical_query(column);
    r2.queries = 1;
    r2.hit = answer;
    std::optional<OracleMatrix> rest = eliminate_by_value(Z, column, answer);
    if (!rest) {
      r2.candidates_after = 0;
      t.rounds.push_back(std::move(r2));
      return finish(RunOutcome::kEmptyCandidates, std::nullopt);
    }
    Z = std::move(*rest);
    r2.candidates_after = Z.num_rows();
    t.rounds.push_back(std::move(r2));
  }
  return finish(RunOutcome::kIdentified, Z.row_id(0));
}

Transcript identify_hybrid(size_t n, size_t k, HiddenOracle& oracle, Rng& rng,
                           const AlgorithmConstants& constants) {
  if (k > n) throw std::invalid_argument("identify_hybrid: k must not exceed n");
  if (oracle.domain() != (size_t(1) << n))
    throw std::invalid_argument("identify_hybrid: oracle domain differs from 2^n");

  size_t N = size_t(1) << n;
  Transcript t = begin_transcript("identify_hybrid", n, N);
  uint64_t start = oracle.query_count();

  auto finish = [&](RunOutcome outcome, std::optional<size_t> id) {
    t.outcome = outcome;
    t.identified_row = id;
    t.total_queries = oracle.query_count() - start;
    return t;
  };

  // Phase 1: single-target search over the prefixes, suffix pinned to zero.
  size_t prefix = 0;
  if (n > k) {
    size_t prefix_bits = n - k;
    OracleView view = subcube_view(oracle, prefix_bits, k, 0);
    uint64_t budget = sqrt_budget(constants.hybrid_budget_c, double(size_t(1) << prefix_bits));
    size_t per_run = grover_iterations(size_t(1) << prefix_bits, 1) + 1;

    RoundRecord round;
    round.phase = "grover-prefix";
    round.candidates_before = N;
    round.candidates_after = N;
    round.budget = budget;
    uint64_t phase_start = oracle.query_count();
    std::optional<size_t> hit;
    uint64_t spent = 0;
    while (!hit && spent + per_run <= budget) {
      SearchOutcome out = grover_fixed(view, 1, rng);
      spent += out.queries_used;
      if (out.found) hit = out.found;
    }
    round.queries = oracle.query_count() - phase_start;
    if (!hit) {
      t.rounds.push_back(std::move(round));
      return finish(RunOutcome::kGroverMiss, std::nullopt);
    }
    prefix = *hit;
    round.hit = true;
    round.column = int64_t(view.map(prefix));
    round.candidates_after = size_t(1) << k;
    t.rounds.push_back(std::move(round));
  }

  // Phase 2: one phase query recovers the suffix.
  size_t suffix = 0;
  if (k > 0) {
    OracleView view = subcube_view(oracle, k, 0, prefix << k);
    RoundRecord round;
    round.phase = "bv-suffix";
    round.candidates_before = size_t(1) << k;
    round.candidates_after = 1;
    uint64_t phase_start = oracle.query_count();
    BvOutcome bv = bernstein_vazirani(view);
    round.queries = oracle.query_count() - phase_start;
    suffix = bv.found;
    round.hit = true;
    round.column = int64_t((prefix << k) | suffix);
    t.rounds.push_back(std::move(round));
  }

  return finish(RunOutcome::kIdentified, (prefix << k) | suffix);
}

Transcript classical_identify_hybrid(size_t n, size_t k, HiddenOracle& oracle) {
  if (k > n) throw std::invalid_argument("classical_identify_hybrid: k must not exceed n");
  if (oracle.domain() != (size_t(1) << n))
    throw std::invalid_argument("classical_identify_hybrid: oracle domain differs from 2^n");

  size_t N = size_t(1) << n;
  Transcript t = begin_transcript("classical_identify_hybrid", n, N);
  uint64_t start = oracle.query_count();

  // Scan prefixes with the suffix held at zero until the oracle answers 1.
  size_t prefixes = size_t(1) << (n - k);
  std::optional<size_t> prefix;
  RoundRecord scan;
  scan.phase = "prefix-scan";
  scan.candidates_before = N;
  for (size_t p = 0; p < prefixes; ++p) {
    bool answer = oracle.classical_query(p << k);
    ++scan.queries;
    if (answer) {
      prefix = p;
      break;
    }
  }
  if (!prefix) {
    scan.candidates_after = 0;
    t.rounds.push_back(std::move(scan));
    t.outcome = RunOutcome::kEmptyCandidates;
    t.total_queries = oracle.query_count() - start;
    return t;
  }
  scan.hit = true;
  scan.column = int64_t(*prefix << k);
  scan.candidates_after = size_t(1) << k;
  t.rounds.push_back(std::move(scan));

  // One unit-vector probe per suffix bit: the answer is 1 exactly when the
  // hidden suffix bit is 0.
  size_t suffix = 0;
  RoundRecord probes;
  probes.phase = "suffix-probes";
  probes.candidates_before = size_t(1) << k;
  probes.candidates_after = 1;
  for (size_t b = k; b > 0; --b) {
    size_t bit = b - 1;
    bool answer = oracle.classical_query((*prefix << k) | (size_t(1) << bit));
    ++probes.queries;
    if (!answer) suffix |= size_t(1) << bit;
  }
  probes.hit = true;
  size_t identified = (*prefix << k) | suffix;
  probes.column = int64_t(identified);
  t.rounds.push_back(std::move(probes));

  t.outcome = RunOutcome::kIdentified;
  t.identified_row = identified;
  t.total_queries = oracle.query_count() - start;
  return t;
}

}  // namespace oraclid
