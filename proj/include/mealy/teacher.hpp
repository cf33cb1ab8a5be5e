#pragma once

#include <optional>
#include <vector>

#include "mealy/machine.hpp"

namespace mealy {

enum class QueryPhase { Learn, Test };

struct QueryStats {
  long long learn_symbols = 0;
  long long learn_resets = 0;
  long long test_symbols = 0;
  long long test_resets = 0;

  long long total() const { return learn_symbols + learn_resets + test_symbols + test_resets; }
};

// Simulated teacher: answers output queries on a hidden machine, tags the
// cost per phase and enforces an optional symbol budget. An accepted query
// is always answered in full, even if it crosses the budget; once the
// consumed symbols reach the budget, further queries are rejected.
class Teacher {
 public:
  explicit Teacher(MealyMachine sul, std::optional<long long> symbol_budget = std::nullopt)
      : sul_(std::move(sul)), budget_(symbol_budget) {}

  // Output word of the hidden machine, or nullopt when the budget was
  // already depleted before this query.
  std::optional<Word> output_query(const Word& w, QueryPhase phase);

  const Alphabet& input_alphabet() const { return sul_.inputs(); }
  const Alphabet& output_alphabet() const { return sul_.outputs(); }

  const QueryStats& stats() const { return stats_; }
  long long total_symbols() const { return total_symbols_; }
  long long total_resets() const { return total_resets_; }
  std::optional<long long> budget() const { return budget_; }

  // Harness-side access for post-hoc verification; never used by the
  // learner and never counted.
  const MealyMachine& underlying() const { return sul_; }

  void record_transcript(bool on) { record_ = on; }
  const std::vector<Word>& transcript() const { return transcript_; }

 private:
  MealyMachine sul_;
  std::optional<long long> budget_;
  QueryStats stats_;
  long long total_symbols_ = 0;
  long long total_resets_ = 0;
  bool record_ = false;
  std::vector<Word> transcript_;
};

}  // namespace mealy
