#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mealy/alphabet.hpp"
#include "mealy/errors.hpp"
#include "mealy/testsuite.hpp"
#include "mealy/word.hpp"

namespace mealy {

// Complete deterministic Mealy machine: delta and lambda are total over
// (state, input id). States are 0..num_states()-1.
class MealyMachine {
 public:
  MealyMachine(Alphabet inputs, Alphabet outputs, int num_states, int initial)
      : inputs_(std::move(inputs)),
        outputs_(std::move(outputs)),
        num_states_(num_states),
        initial_(initial),
        delta_(static_cast<std::size_t>(num_states) * inputs_.size(), -1),
        lambda_(static_cast<std::size_t>(num_states) * inputs_.size(), -1) {
    if (num_states_ <= 0) throw std::invalid_argument("machine needs at least one state");
    if (initial_ < 0 || initial_ >= num_states_) throw std::invalid_argument("bad initial state");
  }

  void set_transition(int state, int input, int target, int output) {
    check_state(state);
    check_state(target);
    delta_[cell(state, input)] = target;
    lambda_[cell(state, input)] = output;
  }

  int next_state(int state, int input) const { return delta_[cell(state, input)]; }
  int output(int state, int input) const { return lambda_[cell(state, input)]; }

  const Alphabet& inputs() const { return inputs_; }
  const Alphabet& outputs() const { return outputs_; }
  int num_states() const { return num_states_; }
  int initial() const { return initial_; }

  // Every (state, input) pair must be assigned before use.
  bool complete() const {
    for (int t : delta_)
      if (t < 0) return false;
    return true;
  }

 private:
  std::size_t cell(int state, int input) const {
    return static_cast<std::size_t>(state) * inputs_.size() + static_cast<std::size_t>(input);
  }
  void check_state(int q) const {
    if (q < 0 || q >= num_states_) throw std::out_of_range("state id out of range");
  }

  Alphabet inputs_;
  Alphabet outputs_;
  int num_states_;
  int initial_;
  std::vector<int> delta_;
  std::vector<int> lambda_;
};

// Partial Mealy machine: delta and lambda share their domain. Missing
// transitions are reported by run().
class PartialMealyMachine {
 public:
  PartialMealyMachine(Alphabet inputs, Alphabet outputs, int num_states, int initial)
      : inputs_(std::move(inputs)),
        outputs_(std::move(outputs)),
        num_states_(num_states),
        initial_(initial),
        delta_(static_cast<std::size_t>(num_states) * inputs_.size(), -1),
        lambda_(static_cast<std::size_t>(num_states) * inputs_.size(), -1) {}

  void set_transition(int state, int input, int target, int output) {
    delta_[cell(state, input)] = target;
    lambda_[cell(state, input)] = output;
  }

  bool defined(int state, int input) const { return delta_[cell(state, input)] >= 0; }
  int next_state(int state, int input) const { return delta_[cell(state, input)]; }
  int output(int state, int input) const { return lambda_[cell(state, input)]; }

  const Alphabet& inputs() const { return inputs_; }
  const Alphabet& outputs() const { return outputs_; }
  int num_states() const { return num_states_; }
  int initial() const { return initial_; }

 private:
  std::size_t cell(int state, int input) const {
    return static_cast<std::size_t>(state) * inputs_.size() + static_cast<std::size_t>(input);
  }

  Alphabet inputs_;
  Alphabet outputs_;
  int num_states_;
  int initial_;
  std::vector<int> delta_;
  std::vector<int> lambda_;
};

struct RunResult {
  int state;
  Word outputs;
};

// Result of running a word on a partial machine. When a transition is
// missing, `defined` is false and `position` is the index of the first
// missing step; `state`/`outputs` reflect the progress made before it.
struct PartialRun {
  bool defined;
  std::size_t position;
  int state;
  Word outputs;
};

RunResult run(const MealyMachine& m, int state, const Word& w);
PartialRun run(const PartialMealyMachine& m, int state, const Word& w);

inline RunResult run(const MealyMachine& m, const Word& w) { return run(m, m.initial(), w); }

// States whose transitions all self-loop (outputs are irrelevant).
std::vector<int> sinks(const MealyMachine& m);
std::vector<bool> sink_mask(const MealyMachine& m);

// States reachable from the initial state, in BFS discovery order.
std::vector<int> reachable_states(const MealyMachine& m);

struct MinimizeResult {
  MealyMachine machine;
  // old state -> new state; -1 for unreachable states.
  std::vector<int> state_map;
};

// Reachable minimal quotient with canonical (BFS) state numbering.
MinimizeResult minimize(const MealyMachine& m);

bool is_minimal(const MealyMachine& m);

// None iff the machines agree on every input word; otherwise the
// shortlex-least among the shortest counterexamples (product BFS).
std::optional<Word> equivalence(const MealyMachine& m, const MealyMachine& n);

// None iff the machines agree on every word of the suite; otherwise the
// shortlex-least failing word.
std::optional<Word> agree_on(const MealyMachine& m, const MealyMachine& n, const TestSuite& suite);

// Access words: for each reachable state the shortlex-least shortest one.
// Contains epsilon; |result| equals the number of reachable states.
TestSuite state_cover(const MealyMachine& m);

// Characterization set: non-empty; distinguishes every pair of distinct
// states of the minimized machine. Computed from partition-refinement
// splits; for a one-state machine the singleton {first input symbol}.
TestSuite char_set(const MealyMachine& m);

// Active-machine transformation. States of `machine` are the non-sink
// states of the source, renumbered in ascending order; the partial maps
// keep exactly the transitions (q, i) where i is active in q, i.e. the
// target is neither a sink nor q itself. `alphabet` is I': the source
// input ids active in at least one state.
struct ActiveMachine {
  PartialMealyMachine machine;
  std::vector<int> to_active;    // source state -> active state, -1 for sinks
  std::vector<int> to_original;  // active state -> source state
  std::vector<int> alphabet;     // I' as source input ids, ascending
};

ActiveMachine active(const MealyMachine& m);

// Exact-structure comparison up to state renumbering (canonical BFS
// numbering on both sides). Expects minimal reachable machines.
bool isomorphic(const MealyMachine& m, const MealyMachine& n);

// Maps output ids of `from` onto output ids of `to` by name; names absent
// in `to` get fresh ids past the end so they never compare equal.
std::vector<int> output_id_map(const Alphabet& from, const Alphabet& to);

void require_same_inputs(const MealyMachine& m, const MealyMachine& n);

}  // namespace mealy
