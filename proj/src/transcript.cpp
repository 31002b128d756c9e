#include "oraclid/transcript.hpp"

namespace oraclid {

const char* outcome_name(RunOutcome o) {
  switch (o) {
    case RunOutcome::kIdentified: return "identified";
    case RunOutcome::kGroverMiss: return "grover-miss";
    case RunOutcome::kEmptyCandidates: return "empty-candidates";
    case RunOutcome::kBudgetCeiling: return "budget-ceiling";
  }
  return "unknown";
}

nlohmann::json to_json(const RoundRecord& r) {
  return {
      {"phase", r.phase},
      {"candidates_before", r.candidates_before},
      {"candidates_after", r.candidates_after},
      {"threshold", r.threshold},
      {"budget", r.budget},
      {"hit", r.hit},
      {"column", r.column},
      {"queries", r.queries},
  };
}

nlohmann::json to_json(const Transcript& t) {
  nlohmann::json rounds = nlohmann::json::array();
  for (const auto& r : t.rounds) rounds.push_back(to_json(r));
  nlohmann::json j{
      {"algorithm", t.algorithm},
      {"n", t.n},
      {"M", t.M},
      {"seed", t.seed},
      {"rounds", std::move(rounds)},
      {"total_queries", t.total_queries},
      {"outcome", outcome_name(t.outcome)},
      {"classical_cap_hit", t.classical_cap_hit},
  };
  if (t.identified_row)
    j["identified_row"] = *t.identified_row;
  else
    j["identified_row"] = nullptr;
  return j;
}

}  // namespace oraclid
