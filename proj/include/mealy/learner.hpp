#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mealy/bandit.hpp"
#include "mealy/machine.hpp"
#include "mealy/rng.hpp"
#include "mealy/teacher.hpp"
#include "mealy/testsuite.hpp"

namespace mealy {

// Equivalence strategies: enumerate a deterministic expert suite, sample
// from a single expert, or mix experts with the bandit.
struct EqStrategy {
  enum class Kind { Deterministic, Randomized, MoE };

  static EqStrategy deterministic(Expert expert) { return {Kind::Deterministic, {std::move(expert)}}; }
  static EqStrategy randomized(Expert expert) { return {Kind::Randomized, {std::move(expert)}}; }
  static EqStrategy moe(std::vector<Expert> experts) {
    if (experts.empty()) throw std::invalid_argument("mixture needs at least one expert");
    return {Kind::MoE, std::move(experts)};
  }

  Kind kind;
  std::vector<Expert> experts;
};

// Parses "baseline", "moe", "moe:<e+e+...>", "expert:<name>", "det",
// "det:<name>" with expert names trivial, active-inputs, future,
// components. The future expert uses lookahead k.
EqStrategy parse_strategy(const std::string& text, int k);

struct LearnConfig {
  int k = 2;
  double gamma = 0.2;
  LengthDistribution mu = mu_default();
  long long test_budget = -1;
  int warmup_states = 5;
};

struct TraceEntry {
  int states;                  // hypothesis size
  long long cumulative_symbols;  // symbols consumed when it was built
  std::string refuted_by;      // expert that found its counterexample, if any
};

struct RunRecord {
  std::string model;
  std::string strategy;
  std::uint64_t seed = 0;
  bool learned = false;
  int states = 0;
  QueryStats stats;
  std::vector<TraceEntry> trace;
  std::string note;
};

// Executes the suite in shortlex order as test queries; returns the first
// mismatching word. `budget_exhausted` is set if the teacher rejects.
struct DeterministicEqResult {
  std::optional<Word> counterexample;
  bool budget_exhausted = false;
};
DeterministicEqResult eq_deterministic(const MealyMachine& h, Teacher& teacher,
                                       const TestSuite& suite);

// Mealy observation table: rows are a prefix-closed word set, columns are
// suffixes seeded with every single input. Cells store the suffix outputs
// of row.column on the teacher.
class ObservationTable {
 public:
  explicit ObservationTable(const Alphabet& inputs);

  // Fills missing cells and restores closedness and consistency. Returns
  // false when the teacher rejects a query (budget exhausted).
  bool make_closed_consistent(Teacher& teacher);

  // Builds the hypothesis (canonical minimal reachable machine). Requires
  // a closed and consistent table.
  MealyMachine hypothesis(const Alphabet& outputs) const;

  // Adds every prefix of the counterexample as a row. Throws
  // NotACounterexample when the word does not actually distinguish the
  // current hypothesis from the teacher. Returns false on budget
  // exhaustion.
  bool process_counterexample(Teacher& teacher, const MealyMachine& current, const Word& ce);

  std::size_t num_rows() const { return rows_.size(); }
  std::size_t num_columns() const { return columns_.size(); }

 private:
  bool fill(Teacher& teacher);
  const Word* cell(const Word& row, const Word& column) const;
  std::vector<int> signature_of(const Word& row) const;
  void add_row(const Word& row);

  Alphabet inputs_;
  std::vector<Word> rows_;      // insertion order, prefix-closed
  std::vector<Word> columns_;   // single inputs first, then added suffixes
  std::map<Word, std::map<Word, Word>> cells_;  // row word -> column -> outputs
};

// Full learning loop: build hypotheses from the table, refute them with
// the chosen equivalence strategy, stop on a clean suite pass or budget
// exhaustion. `learned` is verified post hoc against the hidden machine.
RunRecord learn(Teacher& teacher, const EqStrategy& strategy, Rng& rng, const LearnConfig& config);

}  // namespace mealy
