#pragma once

#include <map>
#include <string>
#include <vector>

#include "mealy/digraph.hpp"
#include "mealy/machine.hpp"

namespace mealy {

// Set of input subalphabets (ids ascending, set deduplicated).
using Subalphabet = std::vector<int>;
using SubalphabetSet = std::vector<Subalphabet>;

// Subalphabet-generating strategy. Fixed is a workbench utility that
// returns a constant subalphabet set regardless of hypothesis and word.
struct Expert {
  enum class Kind { Trivial, ActiveInputs, Future, Components, Fixed };

  static Expert trivial() { return {Kind::Trivial, 0, {}}; }
  static Expert active_inputs() { return {Kind::ActiveInputs, 0, {}}; }
  static Expert future(int lookahead) {
    if (lookahead < 1) throw std::invalid_argument("future expert needs lookahead >= 1");
    return {Kind::Future, lookahead, {}};
  }
  static Expert components() { return {Kind::Components, 0, {}}; }
  static Expert fixed(SubalphabetSet subs) { return {Kind::Fixed, 0, std::move(subs)}; }

  std::string name() const;

  Kind kind;
  int lookahead;
  SubalphabetSet fixed_subs;
};

// Inputs active in at least one state: the target is neither a sink nor
// the state itself. Defined for any machine, including all-sink ones.
Subalphabet active_inputs(const MealyMachine& h);

// Inputs defined somewhere within l-1 active steps of the state reached
// by v (on the full machine). Empty when v ends in a sink.
Subalphabet future_alphabet(const MealyMachine& h, const Word& v, int lookahead);

// Transition structure of a partial machine with parallel edges collapsed.
DiGraph state_graph(const PartialMealyMachine& m);

// internal(c)/m - outdeg(c)*indeg(c)/m^2, where the degree sums include
// internal edges. Throws when the graph has no edges.
double modularity(const DiGraph& g, const std::vector<int>& community);

struct NoEdges : std::runtime_error {
  NoEdges() : std::runtime_error("modularity needs at least one edge") {}
};

struct NewmanResult {
  Partition partition;
  // Communities as they were just before each merge, in merge order.
  std::vector<std::pair<std::vector<int>, std::vector<int>>> merges;
};

// Greedy agglomeration: repeatedly merge the pair with the largest gain in
// total modularity while the gain is positive. Ties pick the smallest
// (min-member, min-member) pair. Zero-degree nodes stay singletons.
NewmanResult newman_trace(const DiGraph& g);
Partition newman(const DiGraph& g);

// One subalphabet per community: inputs labelling a transition of
// active(h) that stays inside the community.
SubalphabetSet component_alphabets(const MealyMachine& h, const Partition& parts);

// Precomputes everything an expert needs for one hypothesis, so repeated
// evaluations (one per sampled test) stay cheap. The future expert memoizes
// per reached state, so an instance must not be shared across threads.
class ExpertEvaluator {
 public:
  ExpertEvaluator(Expert expert, const MealyMachine& h);

  SubalphabetSet eval(const Word& v) const;
  const Expert& expert() const { return expert_; }

 private:
  Expert expert_;
  const MealyMachine* h_;
  SubalphabetSet fixed_result_;          // all kinds except Future
  mutable std::map<int, SubalphabetSet> future_cache_;  // state -> result
};

SubalphabetSet expert_eval(const Expert& e, const MealyMachine& h, const Word& v);

}  // namespace mealy
