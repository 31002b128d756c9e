#include "oraclid/adversary.hpp"

#include <cmath>
#include <stdexcept>

namespace oraclid {

AdversaryResponder::AdversaryResponder(const OracleMatrix& S) : S_(S) {
  live_.resize(S.num_rows());
  for (size_t i = 0; i < live_.size(); ++i) live_[i] = i;
}

bool AdversaryResponder::respond(size_t column) {
  if (column >= S_.num_columns()) throw std::out_of_range("AdversaryResponder: column");
  std::vector<size_t> zeros, ones;
  zeros.reserve(live_.size());
  for (size_t i : live_) (S_.value(i, column) ? ones : zeros).push_back(i);
  bool answer = ones.size() > zeros.size();
  live_ = answer ? std::move(ones) : std::move(zeros);
  history_.emplace_back(column, answer);
  return answer;
}

size_t adversary_query_floor(size_t N, size_t K) {
  if (K == 0) throw std::invalid_argument("adversary_query_floor: K must be positive");
  size_t log_k = size_t(std::floor(std::log2(double(K)) + 1e-12));
  size_t base = N / K + log_k;
  return base >= 3 ? base - 3 : 0;
}

}  // namespace oraclid
