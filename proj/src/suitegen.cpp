#include "mealy/suitegen.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace mealy {

LengthDistribution LengthDistribution::point_mass(int length) {
  if (length < 0) throw std::invalid_argument("length must be non-negative");
  return LengthDistribution(Kind::Point, length);
}

LengthDistribution LengthDistribution::hybrid_geometric() {
  return LengthDistribution(Kind::HybridGeometric, 0);
}

double LengthDistribution::pmf(int length) const {
  if (length < 0) return 0.0;
  switch (kind_) {
    case Kind::Point:
      return length == point_ ? 1.0 : 0.0;
    case Kind::HybridGeometric:
      if (length == 3) return 7.0 / 8.0;
      if (length >= 4) return std::ldexp(1.0, -length);
      return 0.0;
  }
  return 0.0;
}

int LengthDistribution::sample(Rng& rng) const {
  switch (kind_) {
    case Kind::Point:
      return point_;
    case Kind::HybridGeometric: {
      if (rng.unit() < 7.0 / 8.0) return 3;
      int length = 4;
      while (rng.unit() >= 0.5) ++length;
      return length;
    }
  }
  return 0;
}

LengthDistribution mu_default() { return LengthDistribution::hybrid_geometric(); }

std::vector<Word> words_up_to(const std::vector<int>& symbols, int max_len) {
  std::vector<Word> out{{}};
  std::size_t layer_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t layer_end = out.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i)
      for (int s : symbols) {
        Word w = out[i];
        w.push_back(s);
        out.push_back(std::move(w));
      }
    layer_begin = layer_end;
  }
  return out;
}

namespace {

std::vector<int> full_alphabet(const MealyMachine& h) {
  std::vector<int> ids(static_cast<std::size_t>(h.inputs().size()));
  for (int i = 0; i < h.inputs().size(); ++i) ids[static_cast<std::size_t>(i)] = i;
  return ids;
}

const MealyMachine& ensure_minimal(const MealyMachine& h, std::optional<MealyMachine>& storage) {
  if (is_minimal(h)) return h;
  storage = minimize(h).machine;
  return *storage;
}

}  // namespace

TestSuite w_method(const MealyMachine& h, int k) {
  return restricted_w_method(h, k, full_alphabet(h));
}

TestSuite restricted_w_method(const MealyMachine& hypothesis, int k,
                              const std::vector<int>& infix_alphabet) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  std::optional<MealyMachine> storage;
  const MealyMachine& h = ensure_minimal(hypothesis, storage);
  TestSuite cover = state_cover(h);
  TestSuite suffixes = char_set(h);
  auto infixes = words_up_to(infix_alphabet, k + 1);
  std::vector<Word> words;
  words.reserve(cover.size() * infixes.size() * suffixes.size());
  for (const Word& p : cover)
    for (const Word& m : infixes)
      for (const Word& w : suffixes) words.push_back(concat(concat(p, m), w));
  return TestSuite(std::move(words), "w-method k=" + std::to_string(k));
}

TestSuite ets(const MealyMachine& hypothesis, const Expert& expert, int k) {
  if (k < 1) throw std::invalid_argument("ets needs k >= 1; use w_method for k = 0");
  std::optional<MealyMachine> storage;
  const MealyMachine& h = ensure_minimal(hypothesis, storage);
  TestSuite cover = state_cover(h);
  TestSuite suffixes = char_set(h);
  auto tails = words_up_to(full_alphabet(h), 2);
  ExpertEvaluator evaluator(expert, h);

  std::vector<Word> words;
  for (const Word& p : cover) {
    std::set<Word> middles;
    for (const Subalphabet& sub : evaluator.eval(p))
      for (Word& m : words_up_to(sub, k - 1)) middles.insert(std::move(m));
    for (const Word& m : middles)
      for (const Word& t : tails)
        for (const Word& w : suffixes) words.push_back(concat(concat(concat(p, m), t), w));
  }
  return TestSuite(std::move(words), "ets " + expert.name() + " k=" + std::to_string(k));
}

TestSuite reach_language(const MealyMachine& hypothesis, const Expert& expert, int k) {
  if (k < 1) throw std::invalid_argument("reach language needs k >= 1");
  std::optional<MealyMachine> storage;
  const MealyMachine& h = ensure_minimal(hypothesis, storage);
  TestSuite cover = state_cover(h);
  auto tails = words_up_to(full_alphabet(h), 1);
  ExpertEvaluator evaluator(expert, h);

  std::vector<Word> words;
  for (const Word& p : cover) {
    std::set<Word> middles;
    for (const Subalphabet& sub : evaluator.eval(p))
      for (Word& m : words_up_to(sub, k - 1)) middles.insert(std::move(m));
    for (const Word& m : middles)
      for (const Word& t : tails) words.push_back(concat(concat(p, m), t));
  }
  return TestSuite(std::move(words), "reach-language");
}

namespace {

// States of s reached from `from` by words over `symbols` of length <= k.
void bounded_reach(const MealyMachine& s, const std::vector<int>& from,
                   const std::vector<int>& symbols, int k, std::vector<bool>& reached) {
  std::deque<std::pair<int, int>> queue;
  for (int q : from)
    if (!reached[static_cast<std::size_t>(q)]) {
      reached[static_cast<std::size_t>(q)] = true;
      queue.push_back({q, 0});
    }
  // Depth-bounded multi-source BFS; revisiting states at a deeper level is
  // unnecessary because level only shrinks the remaining budget.
  std::vector<int> best_depth(static_cast<std::size_t>(s.num_states()), -1);
  for (auto& [q, d] : queue) best_depth[static_cast<std::size_t>(q)] = 0;
  while (!queue.empty()) {
    auto [q, d] = queue.front();
    queue.pop_front();
    if (d == k) continue;
    for (int i : symbols) {
      int t = s.next_state(q, i);
      reached[static_cast<std::size_t>(t)] = true;
      if (best_depth[static_cast<std::size_t>(t)] < 0 || best_depth[static_cast<std::size_t>(t)] > d + 1) {
        best_depth[static_cast<std::size_t>(t)] = d + 1;
        queue.push_back({t, d + 1});
      }
    }
  }
}

}  // namespace

bool class_membership(const MealyMachine& s, const MealyMachine& h, const Expert& expert, int k) {
  require_same_inputs(s, h);
  if (expert.kind == Expert::Kind::Trivial) return true;

  TestSuite cover = state_cover(h);
  std::vector<bool> reached(static_cast<std::size_t>(s.num_states()), false);

  if (expert.kind == Expert::Kind::Future) {
    for (const Word& v : cover) {
      auto sub = future_alphabet(h, v, expert.lookahead);
      std::vector<int> from{run(s, v).state};
      bounded_reach(s, from, sub, k, reached);
    }
  } else {
    std::vector<int> from;
    for (const Word& v : cover) from.push_back(run(s, v).state);
    ExpertEvaluator evaluator(expert, h);
    for (const Subalphabet& sub : evaluator.eval({}))
      bounded_reach(s, from, sub, k, reached);
  }

  auto mask = sink_mask(s);
  auto live = reachable_states(s);
  for (int q : live)
    if (!mask[static_cast<std::size_t>(q)] && !reached[static_cast<std::size_t>(q)]) return false;
  return true;
}

TestSampler::TestSampler(const MealyMachine& h, Expert expert)
    : h_(&h), evaluator_(std::move(expert), h) {
  TestSuite cover = state_cover(h);
  TestSuite suffixes = char_set(h);
  cover_.assign(cover.begin(), cover.end());
  suffixes_.assign(suffixes.begin(), suffixes.end());
}

SampledTest TestSampler::sample(const LengthDistribution& mu, Rng& rng) const {
  SampledTest t;
  t.expert = evaluator_.expert().name();
  t.drawn_length = mu.sample(rng);
  t.access = cover_[static_cast<std::size_t>(rng.index(cover_.size()))];
  auto subs = evaluator_.eval(t.access);
  const Subalphabet& sub = subs[static_cast<std::size_t>(rng.index(subs.size()))];

  int restricted = std::max(t.drawn_length - 2, 0);
  int free_tail = std::min(t.drawn_length, 2);
  if (!sub.empty())
    for (int j = 0; j < restricted; ++j)
      t.infix.push_back(sub[static_cast<std::size_t>(rng.index(sub.size()))]);
  for (int j = 0; j < free_tail; ++j)
    t.infix.push_back(rng.index(static_cast<std::size_t>(h_->inputs().size())));

  t.suffix = suffixes_[static_cast<std::size_t>(rng.index(suffixes_.size()))];
  t.full = concat(concat(t.access, t.infix), t.suffix);
  return t;
}

SampledTest sample_test(const MealyMachine& h, const Expert& expert, const LengthDistribution& mu,
                        Rng& rng) {
  return TestSampler(h, expert).sample(mu, rng);
}

}  // namespace mealy
