#pragma once

#include <optional>
#include <set>
#include <vector>

#include "mealy/generators.hpp"
#include "mealy/machine.hpp"
#include "mealy/rng.hpp"
#include "mealy/word.hpp"

namespace test {

using namespace mealy;

inline Word w(const MealyMachine& m, const std::string& text) {
  return parse_word(text, m.inputs());
}

inline std::string outs(const MealyMachine& m, const Word& outputs) {
  return format_word(outputs, m.outputs());
}

// Brute-force oracle: machines agree on every word up to max_len.
inline std::optional<Word> brute_force_counterexample(const MealyMachine& a, const MealyMachine& b,
                                                      int max_len) {
  auto remap = output_id_map(b.outputs(), a.outputs());
  std::vector<Word> frontier{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& u : frontier)
      for (int i = 0; i < a.inputs().size(); ++i) {
        Word v = u;
        v.push_back(i);
        auto ra = run(a, v);
        auto rb = run(b, v);
        bool diff = false;
        for (std::size_t p = 0; p < v.size() && !diff; ++p)
          diff = ra.outputs[p] != remap[static_cast<std::size_t>(rb.outputs[p])];
        if (diff) return v;
        next.push_back(std::move(v));
      }
    frontier = std::move(next);
  }
  return std::nullopt;
}

// Random complete machine, optionally forcing the last state to be a sink.
inline MealyMachine random_machine(Rng& rng, int n, int num_inputs, int num_outputs,
                                   bool with_sink = false) {
  Alphabet inputs, outputs;
  for (int i = 0; i < num_inputs; ++i) inputs.add("i" + std::to_string(i));
  for (int o = 0; o < num_outputs; ++o) outputs.add("o" + std::to_string(o));
  MealyMachine m(std::move(inputs), std::move(outputs), n, 0);
  for (int q = 0; q < n; ++q)
    for (int i = 0; i < num_inputs; ++i)
      m.set_transition(q, i, rng.index(static_cast<std::size_t>(n)),
                       rng.index(static_cast<std::size_t>(num_outputs)));
  if (with_sink && n > 1) {
    int sink = n - 1;
    for (int i = 0; i < num_inputs; ++i) m.set_transition(sink, i, sink, 0);
  }
  return m;
}

// Random machine that is reachable and minimal with exactly n states.
inline MealyMachine random_minimal_machine(Rng& rng, int n, int num_inputs, int num_outputs,
                                           bool with_sink = false) {
  for (;;) {
    MealyMachine m = random_machine(rng, n, num_inputs, num_outputs, with_sink);
    if (reachable_states(m).size() == static_cast<std::size_t>(n) && is_minimal(m)) return m;
  }
}

// Mutates a copy of h: appends extra states with random rows and rewires a
// few transitions, keeping the machine complete.
inline MealyMachine mutate(Rng& rng, const MealyMachine& h, int extra_states, int rewires) {
  int n = h.num_states() + extra_states;
  MealyMachine s(h.inputs(), h.outputs(), n, h.initial());
  for (int q = 0; q < h.num_states(); ++q)
    for (int i = 0; i < h.inputs().size(); ++i)
      s.set_transition(q, i, h.next_state(q, i), h.output(q, i));
  for (int q = h.num_states(); q < n; ++q)
    for (int i = 0; i < h.inputs().size(); ++i)
      s.set_transition(q, i, rng.index(static_cast<std::size_t>(n)),
                       rng.index(static_cast<std::size_t>(h.outputs().size())));
  for (int r = 0; r < rewires; ++r) {
    int q = rng.index(static_cast<std::size_t>(h.num_states()));
    int i = rng.index(static_cast<std::size_t>(h.inputs().size()));
    s.set_transition(q, i, rng.index(static_cast<std::size_t>(n)),
                     rng.index(static_cast<std::size_t>(h.outputs().size())));
  }
  return s;
}

}  // namespace test
