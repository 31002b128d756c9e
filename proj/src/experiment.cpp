#include "oraclid/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "oraclid/bounds.hpp"
#include "oraclid/generators.hpp"

namespace oraclid {

std::string canonical_algorithm(const std::string& name) {
  static const std::map<std::string, std::string> aliases = {
      {"identify_general", "identify_general"},
      {"general", "identify_general"},
      {"identify_square", "identify_square"},
      {"square", "identify_square"},
      {"identify_av", "identify_av"},
      {"av", "identify_av"},
      {"identify_balanced", "identify_balanced"},
      {"balanced", "identify_balanced"},
      {"identify_hybrid", "identify_hybrid"},
      {"hybrid", "identify_hybrid"},
      {"classical_identify_hybrid", "classical_identify_hybrid"},
      {"classical-hybrid", "classical_identify_hybrid"},
      {"classical_hybrid", "classical_identify_hybrid"},
  };
  auto it = aliases.find(name);
  if (it == aliases.end()) throw ConfigError("unknown algorithm: " + name);
  return it->second;
}

namespace {

size_t infer_balanced_weight(const OracleMatrix& S) {
  ColumnStats stats = sensitivity(S);
  for (size_t c : stats.ones)
    if (c != stats.max_ones)
      throw ConfigError("identify_balanced: column weights are unequal; pass K explicitly");
  if (stats.max_ones == 0) throw ConfigError("identify_balanced: matrix has no 1 entries");
  return stats.max_ones;
}

void check_hybrid_shape(const OracleMatrix& S, size_t k) {
  if (k > S.n()) throw ConfigError("hybrid: k must not exceed n");
  OracleMatrix expected = make_hybrid(S.n(), k);
  if (S.num_rows() != expected.num_rows())
    throw ConfigError("hybrid: matrix row count differs from the (n, k) family");
  for (size_t i = 0; i < S.num_rows(); ++i) {
    if (!(S.row(i) == expected.row(i)) || S.row_id(i) != i)
      throw ConfigError("hybrid: matrix is not the (n, k) family in row order");
  }
}

size_t worker_count(size_t configured, size_t tasks) {
  size_t limit = configured;
  if (limit == 0) {
    limit = std::thread::hardware_concurrency();
    if (limit == 0) limit = 1;
  }
  if (const char* env = std::getenv("ORACLID_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw ConfigError("ORACLID_THREADS must be a positive integer");
    limit = std::min<size_t>(limit, v);
  }
  return std::max<size_t>(1, std::min(limit, tasks));
}

QueryStats stats_of(std::vector<uint64_t> values) {
  QueryStats s;
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  double sum = 0;
  for (uint64_t v : values) sum += double(v);
  s.mean = sum / double(values.size());
  s.max = values.back();
  size_t idx = size_t(std::ceil(0.95 * double(values.size())));
  s.p95 = double(values[idx == 0 ? 0 : idx - 1]);
  return s;
}

struct RunResult {
  Transcript transcript;
  size_t oracle_index = 0;
  size_t trial = 0;
  bool correct = false;
};

}  // namespace

void validate_config(const OracleMatrix& S, const ExperimentConfig& config) {
  std::string algo = canonical_algorithm(config.algorithm);
  if (config.trials < 1) throw ConfigError("trials must be at least 1");
  if (config.sample_oracles && (config.sample_count < 1 || config.sample_count > S.num_rows()))
    throw ConfigError("oracle sample count must be in [1, M]");

  if (algo == "identify_general" || algo == "identify_square") {
    if (S.num_rows() < 2) throw ConfigError(algo + ": needs at least two rows");
  } else if (algo == "identify_av") {
    if (!config.weight) throw ConfigError("identify_av: pass K (the expected column weight)");
    if (*config.weight < 1 || *config.weight > S.num_columns())
      throw ConfigError("identify_av: K must be in [1, N]");
    if (config.av_runs < 0) throw ConfigError("identify_av: d must be nonnegative");
  } else if (algo == "identify_balanced") {
    if (config.weight) {
      if (*config.weight < 1 || *config.weight > S.num_columns())
        throw ConfigError("identify_balanced: K must be in [1, N]");
    } else {
      infer_balanced_weight(S);
    }
  } else {
    if (!config.hybrid_k) throw ConfigError(algo + ": pass k (the suffix length)");
    check_hybrid_shape(S, *config.hybrid_k);
  }
}

ExperimentSummary run_experiment(const OracleMatrix& S, const ExperimentConfig& config,
                                 std::vector<Transcript>* transcripts) {
  validate_config(S, config);
  std::string algo = canonical_algorithm(config.algorithm);

  size_t balanced_k = 0;
  if (algo == "identify_balanced")
    balanced_k = config.weight ? *config.weight : infer_balanced_weight(S);

  // hidden-oracle selection
  std::vector<size_t> oracle_indices;
  if (config.sample_oracles) {
    std::vector<size_t> all(S.num_rows());
    for (size_t i = 0; i < all.size(); ++i) all[i] = i;
    Rng pick = Rng(config.master_seed).split(0x6f7261636c65ull);  // selection stream
    for (size_t i = 0; i < config.sample_count; ++i) {
      size_t j = i + pick.below(all.size() - i);
      std::swap(all[i], all[j]);
    }
    all.resize(config.sample_count);
    oracle_indices = std::move(all);
  } else {
    oracle_indices.resize(S.num_rows());
    for (size_t i = 0; i < oracle_indices.size(); ++i) oracle_indices[i] = i;
  }

  Rng master(config.master_seed);
  size_t total = oracle_indices.size() * config.trials;
  std::vector<RunResult> results(total);

  auto run_one = [&](size_t task) {
    size_t oracle_index = oracle_indices[task / config.trials];
    size_t trial = task % config.trials;
    size_t oracle_id = S.row_id(oracle_index);
    Rng rng = master.split(uint64_t(oracle_id), uint64_t(trial));
    HiddenOracle oracle(S.row(oracle_index));

    Transcript t;
    if (algo == "identify_general") {
      t = identify_general(S, oracle, rng, config.constants);
    } else if (algo == "identify_square") {
      t = identify_square(S, oracle, rng, config.constants);
    } else if (algo == "identify_av") {
      t = identify_av(S, *config.weight, config.av_runs, oracle, rng, config.constants);
    } else if (algo == "identify_balanced") {
      t = identify_balanced(S, balanced_k, oracle, rng, config.constants);
    } else if (algo == "identify_hybrid") {
      t = identify_hybrid(S.n(), *config.hybrid_k, oracle, rng, config.constants);
    } else {
      t = classical_identify_hybrid(S.n(), *config.hybrid_k, oracle);
    }
    t.seed = rng.seed();

    RunResult& r = results[task];
    r.transcript = std::move(t);
    r.oracle_index = oracle_index;
    r.trial = trial;
    r.correct = r.transcript.outcome == RunOutcome::kIdentified &&
                r.transcript.identified_row && *r.transcript.identified_row == oracle_id;
  };

  size_t workers = worker_count(config.max_threads, total);
  if (workers <= 1) {
    for (size_t task = 0; task < total; ++task) run_one(task);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          size_t task = next.fetch_add(1);
          if (task >= total) return;
          run_one(task);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  ExperimentSummary summary;
  summary.algorithm = algo;
  summary.n = S.n();
  summary.M = S.num_rows();
  summary.master_seed = config.master_seed;
  summary.trials_per_oracle = config.trials;
  summary.runs = total;

  std::vector<uint64_t> all_queries, success_queries;
  for (const auto& r : results) {
    all_queries.push_back(r.transcript.total_queries);
    ++summary.outcome_counts[outcome_name(r.transcript.outcome)];
    if (r.correct) {
      ++summary.successes;
      success_queries.push_back(r.transcript.total_queries);
    }
  }
  summary.success_rate = double(summary.successes) / double(total);
  summary.queries_all = stats_of(all_queries);
  summary.queries_success = stats_of(std::move(success_queries));
  summary.lower_bound = simple_adversary_bound(S).value;
  summary.bound_violation =
      summary.successes > 0 && summary.queries_success.mean < summary.lower_bound;

  for (size_t oi = 0; oi < oracle_indices.size(); ++oi) {
    OracleAggregate agg;
    agg.oracle_id = S.row_id(oracle_indices[oi]);
    std::vector<uint64_t> queries;
    for (size_t trial = 0; trial < config.trials; ++trial) {
      const RunResult& r = results[oi * config.trials + trial];
      ++agg.trials;
      agg.successes += r.correct;
      queries.push_back(r.transcript.total_queries);
      agg.max_queries = std::max(agg.max_queries, r.transcript.total_queries);
    }
    QueryStats qs = stats_of(std::move(queries));
    agg.mean_queries = qs.mean;
    summary.per_oracle.push_back(agg);
  }

  if (transcripts) {
    transcripts->reserve(transcripts->size() + results.size());
    for (auto& r : results) transcripts->push_back(std::move(r.transcript));
  }
  return summary;
}

nlohmann::json to_json(const ExperimentSummary& s) {
  nlohmann::json per_oracle = nlohmann::json::array();
  for (const auto& o : s.per_oracle) {
    per_oracle.push_back({{"oracle_id", o.oracle_id},
                          {"trials", o.trials},
                          {"successes", o.successes},
                          {"mean_queries", o.mean_queries},
                          {"max_queries", o.max_queries}});
  }
  return {
      {"algorithm", s.algorithm},
      {"n", s.n},
      {"M", s.M},
      {"master_seed", s.master_seed},
      {"trials_per_oracle", s.trials_per_oracle},
      {"runs", s.runs},
      {"successes", s.successes},
      {"success_rate", s.success_rate},
      {"queries_all",
       {{"mean", s.queries_all.mean}, {"max", s.queries_all.max}, {"p95", s.queries_all.p95}}},
      {"queries_success",
       {{"mean", s.queries_success.mean},
        {"max", s.queries_success.max},
        {"p95", s.queries_success.p95}}},
      {"lower_bound", s.lower_bound},
      {"bound_violation", s.bound_violation},
      {"outcomes", s.outcome_counts},
      {"per_oracle", std::move(per_oracle)},
  };
}

std::string per_oracle_csv(const ExperimentSummary& s) {
  std::ostringstream out;
  out << "oracle_id,trials,successes,success_rate,mean_queries,max_queries\n";
  for (const auto& o : s.per_oracle) {
    out << o.oracle_id << ',' << o.trials << ',' << o.successes << ','
        << (o.trials ? double(o.successes) / double(o.trials) : 0.0) << ',' << o.mean_queries
        << ',' << o.max_queries << '\n';
  }
  return out.str();
}

nlohmann::json transcript_record(const Transcript& t, size_t oracle_id, size_t trial,
                                 bool correct) {
  nlohmann::json j = to_json(t);
  j["oracle_id"] = oracle_id;
  j["trial"] = trial;
  j["correct"] = correct;
  return j;
}

}  // namespace oraclid
