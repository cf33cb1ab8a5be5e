#include "mealy/bandit.hpp"

#include <cmath>
#include <numeric>

namespace mealy {

std::vector<double> update_probs(const BanditState& state) {
  double sum = std::accumulate(state.weights.begin(), state.weights.end(), 0.0);
  std::size_t n = state.weights.size();
  std::vector<double> probs(n);
  for (std::size_t i = 0; i < n; ++i)
    probs[i] = (1.0 - state.gamma) * (state.weights[i] / sum) +
               state.gamma / static_cast<double>(n);
  return probs;
}

BanditState update_weights(BanditState state, const std::vector<double>& probs, int chosen,
                           bool found_counterexample) {
  if (!found_counterexample) return state;
  double e = static_cast<double>(state.experts.size());
  state.weights[static_cast<std::size_t>(chosen)] *=
      std::exp(state.gamma / (probs[static_cast<std::size_t>(chosen)] * e));
  return state;
}

namespace {

int categorical(const std::vector<double>& probs, Rng& rng) {
  double u = rng.unit();
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < probs.size(); ++i) {
    acc += probs[i];
    if (u < acc) return static_cast<int>(i);
  }
  return static_cast<int>(probs.size()) - 1;
}

}  // namespace

MabResult mab_eq(const MealyMachine& h, BanditState state, Teacher& teacher,
                 const MabConfig& config, Rng& rng) {
  auto remap = output_id_map(teacher.output_alphabet(), h.outputs());

  std::vector<TestSampler> samplers;
  samplers.reserve(state.experts.size());
  for (const Expert& e : state.experts) samplers.emplace_back(h, e);

  bool warmup = state.experts.size() > 1 && h.num_states() < config.warmup_states;
  std::optional<TestSampler> trivial_sampler;
  if (warmup) trivial_sampler.emplace(h, Expert::trivial());

  for (long long t = 0; config.test_budget < 0 || t < config.test_budget; ++t) {
    std::vector<double> probs;
    int chosen = 0;
    const TestSampler* sampler;
    if (warmup) {
      sampler = &*trivial_sampler;
    } else {
      if (state.experts.size() > 1) {
        probs = update_probs(state);
        chosen = categorical(probs, rng);
      }
      sampler = &samplers[static_cast<std::size_t>(chosen)];
    }

    SampledTest test = sampler->sample(config.mu, rng);
    auto expected = run(h, test.full).outputs;
    auto answer = teacher.output_query(test.full, QueryPhase::Test);
    if (!answer) return {std::nullopt, std::move(state), true, ""};

    bool found = false;
    for (std::size_t i = 0; i < expected.size(); ++i)
      if (expected[i] != remap[static_cast<std::size_t>((*answer)[i])]) {
        found = true;
        break;
      }

    if (!warmup && state.experts.size() > 1)
      state = update_weights(std::move(state), probs, chosen, found);
    else if (!warmup && found)  // single expert: probs is the constant 1
      state = update_weights(std::move(state), {1.0}, chosen, found);

    if (found) {
      std::string by = warmup ? Expert::trivial().name()
                              : state.experts[static_cast<std::size_t>(chosen)].name();
      return {std::move(test.full), std::move(state), false, std::move(by)};
    }
  }
  return {std::nullopt, std::move(state), false, ""};
}

}  // namespace mealy
