#pragma once

#include <optional>
#include <vector>

#include "mealy/experts.hpp"
#include "mealy/rng.hpp"
#include "mealy/suitegen.hpp"
#include "mealy/teacher.hpp"

namespace mealy {

// Per-expert weights plus the exploration parameter. Weights start at 1
// and only grow; the probability vector is derived on demand.
struct BanditState {
  BanditState(std::vector<Expert> experts_, double gamma_)
      : experts(std::move(experts_)), weights(experts.size(), 1.0), gamma(gamma_) {
    if (experts.empty()) throw std::invalid_argument("need at least one expert");
    if (!(gamma > 0.0 && gamma <= 1.0)) throw std::invalid_argument("gamma must be in (0,1]");
  }

  std::vector<Expert> experts;
  std::vector<double> weights;
  double gamma;
};

// probs(i) = (1-gamma) * weights(i)/sum(weights) + gamma/|E|.
std::vector<double> update_probs(const BanditState& state);

// On a counterexample, multiply the chosen expert's weight by
// exp(gamma / (probs(e) * |E|)); otherwise leave the state unchanged.
BanditState update_weights(BanditState state, const std::vector<double>& probs, int chosen,
                           bool found_counterexample);

struct MabConfig {
  LengthDistribution mu = mu_default();
  long long test_budget = -1;  // max tests per call; < 0 means unbounded
  // Hypotheses smaller than this use the trivial expert without weight
  // updates. Only applies when more than one expert is enabled.
  int warmup_states = 5;
};

struct MabResult {
  std::optional<Word> counterexample;
  BanditState state;
  bool budget_exhausted = false;
  std::string found_by;  // expert that produced the counterexample
};

// One equivalence query: sample an expert proportional to the probs, draw
// a test, compare hypothesis and teacher outputs, update weights, return
// on the first mismatch. Returns without a counterexample when the
// teacher rejects a query or the test budget runs out.
MabResult mab_eq(const MealyMachine& h, BanditState state, Teacher& teacher,
                 const MabConfig& config, Rng& rng);

}  // namespace mealy
