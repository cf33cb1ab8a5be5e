#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mealy/learner.hpp"

namespace mealy {

// Batch of learning runs over the cross product of models, strategies and
// seeds. Models are DOT paths or generator specs:
//   asml:<a>:<b>  tcp:<a>:<b>  ssh:<a>:<b>  random:<n>:<inputs>:<outputs>:<seed>
struct ExperimentConfig {
  std::vector<std::string> models;
  std::vector<std::string> strategies;
  std::vector<std::uint64_t> seeds;
  long long budget = 10000000;
  int k = 2;
  double gamma = 0.2;
  long long test_budget = -1;
  int parallelism = 1;
  std::uint64_t master_seed = 0;
  std::string output;  // CSV path; empty writes to stdout
};

// Parses a key = value file (one pair per line, '#' comments). Lists are
// comma separated; seeds also accept "lo..hi" ranges.
ExperimentConfig parse_experiment_config(const std::string& path);

MealyMachine resolve_model(const std::string& spec);

// One row per (model, strategy, seed) in sorted order, then one aggregate
// row per (model, strategy) with seed "all". Deterministic bytes for a
// given config, independent of the parallelism degree.
std::string run_experiment(const ExperimentConfig& config);

// True when every cell of the batch learned its model (used by --strict).
bool all_learned(const std::string& csv);

}  // namespace mealy
