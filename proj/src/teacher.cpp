#include "mealy/teacher.hpp"

namespace mealy {

std::optional<Word> Teacher::output_query(const Word& w, QueryPhase phase) {
  if (budget_ && total_symbols_ >= *budget_) return std::nullopt;
  auto result = run(sul_, w);
  if (phase == QueryPhase::Learn) {
    stats_.learn_symbols += static_cast<long long>(w.size());
    stats_.learn_resets += 1;
  } else {
    stats_.test_symbols += static_cast<long long>(w.size());
    stats_.test_resets += 1;
  }
  total_symbols_ += static_cast<long long>(w.size());
  total_resets_ += 1;
  if (record_) transcript_.push_back(w);
  return std::move(result.outputs);
}

}  // namespace mealy
