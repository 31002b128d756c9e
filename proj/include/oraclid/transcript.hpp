#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace oraclid {

enum class RunOutcome {
  kIdentified,
  kGroverMiss,       // quantum search never produced a verified 1
  kEmptyCandidates,  // an elimination removed every candidate
  kBudgetCeiling,    // a round or query ceiling tripped
};

const char* outcome_name(RunOutcome o);

struct RoundRecord {
  std::string phase;
  size_t candidates_before = 0;
  size_t candidates_after = 0;
  size_t threshold = 0;   // K for the round, when one applies
  uint64_t budget = 0;    // quantum query budget, when one applies
  bool hit = false;
  int64_t column = -1;    // full-domain index of a verified 1, -1 otherwise
  uint64_t queries = 0;   // oracle calls spent in this round
};

struct Transcript {
  std::string algorithm;
  size_t n = 0;
  size_t M = 0;
  uint64_t seed = 0;
  std::vector<RoundRecord> rounds;
  uint64_t total_queries = 0;
  RunOutcome outcome = RunOutcome::kGroverMiss;
  std::optional<size_t> identified_row;
  bool classical_cap_hit = false;
};

nlohmann::json to_json(const RoundRecord& r);
nlohmann::json to_json(const Transcript& t);

}  // namespace oraclid
