// oraclid: query-model simulator for identifying a hidden Boolean oracle
// drawn from a known set. Exit codes: 0 ok, 2 bad request, 3 file problem.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oraclid/bounds.hpp"
#include "oraclid/experiment.hpp"
#include "oraclid/generators.hpp"
#include "oraclid/matrix_io.hpp"
#include "oraclid/oracle_matrix.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

// File problem rather than bad request; mapped to exit code 3.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    if (!std::cout) throw IoError("write to stdout failed");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << text;
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

oraclid::OracleMatrix load_input(const std::string& path) {
  try {
    if (path == "-") return oraclid::load_matrix(std::cin);
    return oraclid::load_matrix_file(path);
  } catch (const oraclid::ConfigError&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
}

struct GenArgs {
  std::string family;
  size_t n = 0;
  std::optional<size_t> k;
  std::optional<size_t> weight;
  uint64_t seed = 1;
  std::string out = "-";
};

int run_gen(const GenArgs& a) {
  oraclid::OracleMatrix S = [&] {
    if (a.family == "grover") return oraclid::make_grover(a.n);
    if (a.family == "bv") return oraclid::make_bv(a.n);
    if (a.family == "hybrid") {
      if (!a.k) throw oraclid::ConfigError("gen hybrid: pass --k");
      return oraclid::make_hybrid(a.n, *a.k);
    }
    if (!a.weight) throw oraclid::ConfigError("gen " + a.family + ": pass --K");
    if (a.family == "av") return oraclid::sample_av(a.n, *a.weight, a.seed);
    return oraclid::sample_balanced(a.n, *a.weight, a.seed);
  }();
  std::ostringstream text;
  oraclid::save_matrix(S, text);
  write_text(a.out, text.str());
  return kExitOk;
}

struct RunArgs {
  std::string file;
  std::string algorithm;
  size_t trials = 1;
  uint64_t seed = 1;
  std::string oracles = "all";
  std::optional<size_t> k;
  std::optional<size_t> weight;
  int av_runs = 3;
  size_t threads = 0;
  std::vector<std::string> const_overrides;
  std::string format = "json";
  std::string out = "-";
  std::string transcripts_path;
};

int run_run(const RunArgs& a) {
  oraclid::OracleMatrix S = load_input(a.file);

  oraclid::ExperimentConfig cfg;
  cfg.algorithm = a.algorithm;
  cfg.master_seed = a.seed;
  cfg.trials = a.trials;
  cfg.hybrid_k = a.k;
  cfg.weight = a.weight;
  cfg.av_runs = a.av_runs;
  cfg.max_threads = a.threads;
  if (a.oracles != "all") {
    const std::string prefix = "sample:";
    if (a.oracles.rfind(prefix, 0) != 0)
      throw oraclid::ConfigError("--oracles takes 'all' or 'sample:<count>'");
    size_t pos = 0;
    unsigned long long count = 0;
    try {
      count = std::stoull(a.oracles.substr(prefix.size()), &pos);
    } catch (const std::exception&) {
      throw oraclid::ConfigError("--oracles sample count is not a number");
    }
    if (pos != a.oracles.size() - prefix.size() || count == 0)
      throw oraclid::ConfigError("--oracles sample count is not a positive integer");
    cfg.sample_oracles = true;
    cfg.sample_count = size_t(count);
  }
  for (const std::string& item : a.const_overrides) {
    size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw oraclid::ConfigError("--const takes name=value, got '" + item + "'");
    double value = 0;
    size_t pos = 0;
    try {
      value = std::stod(item.substr(eq + 1), &pos);
    } catch (const std::exception&) {
      throw oraclid::ConfigError("--const value is not a number in '" + item + "'");
    }
    if (pos != item.size() - eq - 1)
      throw oraclid::ConfigError("--const value is not a number in '" + item + "'");
    try {
      cfg.constants.set(item.substr(0, eq), value);
    } catch (const std::invalid_argument& e) {
      throw oraclid::ConfigError(e.what());
    }
  }

  std::vector<oraclid::Transcript> transcripts;
  oraclid::ExperimentSummary summary = oraclid::run_experiment(
      S, cfg, a.transcripts_path.empty() ? nullptr : &transcripts);

  if (!a.transcripts_path.empty()) {
    std::ostringstream lines;
    for (size_t i = 0; i < transcripts.size(); ++i) {
      const oraclid::Transcript& t = transcripts[i];
      size_t oracle_id = summary.per_oracle[i / cfg.trials].oracle_id;
      size_t trial = i % cfg.trials;
      bool correct = t.outcome == oraclid::RunOutcome::kIdentified && t.identified_row &&
                     *t.identified_row == oracle_id;
      lines << oraclid::transcript_record(t, oracle_id, trial, correct).dump() << '\n';
    }
    write_text(a.transcripts_path, lines.str());
  }

  if (a.format == "csv") {
    write_text(a.out, oraclid::per_oracle_csv(summary));
  } else {
    write_text(a.out, oraclid::to_json(summary).dump(2) + "\n");
  }
  return kExitOk;
}

struct BoundArgs {
  std::string kind;
  std::string file;
  size_t N = 0;
  size_t K = 0;
  std::string out = "-";
};

int run_bound(const BoundArgs& a) {
  nlohmann::json report;
  if (a.kind == "threshold") {
    if (a.N == 0 || a.K == 0)
      throw oraclid::ConfigError("bound threshold: pass --N and --K");
    oraclid::ThresholdInstance inst = oraclid::threshold_instance_bound(a.N, a.K);
    report = oraclid::to_json(inst.report);
    report["N"] = a.N;
    report["K"] = a.K;
  } else {
    if (a.file.empty())
      throw oraclid::ConfigError("bound " + a.kind + ": pass --file");
    oraclid::OracleMatrix S = load_input(a.file);
    if (a.kind == "simple") {
      report = oraclid::to_json(oraclid::simple_adversary_bound(S));
    } else {
      oraclid::AdversaryRelation rel = oraclid::make_halves_relation(S);
      report = oraclid::to_json(oraclid::adversary_bound(S, rel));
    }
  }
  write_text(a.out, report.dump(2) + "\n");
  return kExitOk;
}

struct InspectArgs {
  std::string file;
  std::string out = "-";
};

int run_inspect(const InspectArgs& a) {
  oraclid::OracleMatrix S = load_input(a.file);
  oraclid::ColumnStats before = oraclid::sensitivity(S);
  oraclid::FlipResult flipped = oraclid::column_flip(S);
  oraclid::ColumnStats after = oraclid::sensitivity(flipped.matrix);

  uint64_t weight_min = UINT64_MAX, weight_max = 0;
  for (size_t i = 0; i < S.num_rows(); ++i) {
    uint64_t w = S.row_weight(i);
    weight_min = std::min(weight_min, w);
    weight_max = std::max(weight_max, w);
  }

  nlohmann::json j = {
      {"n", S.n()},
      {"columns", S.num_columns()},
      {"rows", S.num_rows()},
      {"row_weight_min", weight_min},
      {"row_weight_max", weight_max},
      {"max_column_ones", before.max_ones},
      {"max_column_ones_after_flip", after.max_ones},
      {"one_sensitive_after_flip", oraclid::is_one_sensitive(flipped.matrix)},
      {"flip_mask_ones", flipped.mask.count_ones()},
      {"half_weight_threshold", oraclid::half_weight_threshold(S)},
  };
  if (S.num_rows() >= 2)
    j["simple_bound"] = oraclid::simple_adversary_bound(S).value;
  else
    j["simple_bound"] = nullptr;
  write_text(a.out, j.dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"oraclid: identify a hidden Boolean oracle from a known set while counting queries"};
  app.require_subcommand(1);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "write a matrix file for a built-in oracle family");
  gen->add_option("family", gen_args.family, "grover | bv | hybrid | av | balanced")
      ->required()
      ->check(CLI::IsMember({"grover", "bv", "hybrid", "av", "balanced"}));
  gen->add_option("--n", gen_args.n, "index length in bits (N = 2^n columns)")
      ->required()
      ->check(CLI::Range(size_t(1), size_t(20)));
  gen->add_option("--k", gen_args.k, "suffix length (hybrid family)");
  gen->add_option("--K", gen_args.weight, "column weight (av and balanced families)");
  gen->add_option("--seed", gen_args.seed, "sampling seed (av and balanced families)");
  gen->add_option("--out", gen_args.out, "output path, '-' for stdout");

  RunArgs run_args;
  CLI::App* run = app.add_subcommand("run", "run an identification algorithm over a matrix");
  run->add_option("--file", run_args.file, "matrix file, '-' for stdin")->required();
  run->add_option("--algorithm", run_args.algorithm,
                  "general | square | av | balanced | hybrid | classical-hybrid")
      ->required();
  run->add_option("--trials", run_args.trials, "trials per hidden oracle")
      ->check(CLI::PositiveNumber);
  run->add_option("--seed", run_args.seed, "master seed");
  run->add_option("--oracles", run_args.oracles, "'all' or 'sample:<count>'");
  run->add_option("--k", run_args.k, "suffix length (hybrid algorithms)");
  run->add_option("--K", run_args.weight, "column weight (av and balanced algorithms)");
  run->add_option("--d", run_args.av_runs, "search repetitions (av algorithm)");
  run->add_option("--threads", run_args.threads,
                  "worker cap, 0 = hardware (ORACLID_THREADS also caps)");
  run->add_option("--const", run_args.const_overrides,
                  "override an algorithm constant, name=value (repeatable)");
  run->add_option("--format", run_args.format, "summary format")
      ->check(CLI::IsMember({"json", "csv"}));
  run->add_option("--out", run_args.out, "summary path, '-' for stdout");
  run->add_option("--transcripts", run_args.transcripts_path,
                  "also write one JSON transcript per line to this path");

  BoundArgs bound_args;
  CLI::App* bound = app.add_subcommand("bound", "compute adversary lower bounds");
  bound->add_option("kind", bound_args.kind, "simple | halves | threshold")
      ->required()
      ->check(CLI::IsMember({"simple", "halves", "threshold"}));
  bound->add_option("--file", bound_args.file, "matrix file (simple and halves)");
  bound->add_option("--N", bound_args.N, "domain size (threshold)");
  bound->add_option("--K", bound_args.K, "weight parameter (threshold)");
  bound->add_option("--out", bound_args.out, "output path, '-' for stdout");

  InspectArgs inspect_args;
  CLI::App* inspect = app.add_subcommand("inspect", "print structural facts about a matrix");
  inspect->add_option("--file", inspect_args.file, "matrix file, '-' for stdin")->required();
  inspect->add_option("--out", inspect_args.out, "output path, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (gen->parsed()) return run_gen(gen_args);
    if (run->parsed()) return run_run(run_args);
    if (bound->parsed()) return run_bound(bound_args);
    return run_inspect(inspect_args);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const oraclid::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
