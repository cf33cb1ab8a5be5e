#include "mealy/machine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace mealy {

RunResult run(const MealyMachine& m, int state, const Word& w) {
  RunResult r{state, {}};
  r.outputs.reserve(w.size());
  for (int i : w) {
    r.outputs.push_back(m.output(r.state, i));
    r.state = m.next_state(r.state, i);
  }
  return r;
}

PartialRun run(const PartialMealyMachine& m, int state, const Word& w) {
  PartialRun r{true, 0, state, {}};
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    int i = w[pos];
    if (!m.defined(r.state, i)) {
      r.defined = false;
      r.position = pos;
      return r;
    }
    r.outputs.push_back(m.output(r.state, i));
    r.state = m.next_state(r.state, i);
  }
  return r;
}

std::vector<bool> sink_mask(const MealyMachine& m) {
  std::vector<bool> mask(static_cast<std::size_t>(m.num_states()), false);
  for (int q = 0; q < m.num_states(); ++q) {
    bool sink = true;
    for (int i = 0; i < m.inputs().size() && sink; ++i) sink = m.next_state(q, i) == q;
    mask[static_cast<std::size_t>(q)] = sink;
  }
  return mask;
}

std::vector<int> sinks(const MealyMachine& m) {
  std::vector<int> out;
  auto mask = sink_mask(m);
  for (int q = 0; q < m.num_states(); ++q)
    if (mask[static_cast<std::size_t>(q)]) out.push_back(q);
  return out;
}

std::vector<int> reachable_states(const MealyMachine& m) {
  std::vector<bool> seen(static_cast<std::size_t>(m.num_states()), false);
  std::vector<int> order;
  std::deque<int> queue{m.initial()};
  seen[static_cast<std::size_t>(m.initial())] = true;
  while (!queue.empty()) {
    int q = queue.front();
    queue.pop_front();
    order.push_back(q);
    for (int i = 0; i < m.inputs().size(); ++i) {
      int t = m.next_state(q, i);
      if (!seen[static_cast<std::size_t>(t)]) {
        seen[static_cast<std::size_t>(t)] = true;
        queue.push_back(t);
      }
    }
  }
  return order;
}

namespace {

// Renumbers states so that BFS from the initial state (inputs in id order)
// visits 0, 1, 2, ... Unreachable states are dropped.
MealyMachine bfs_canonical(const MealyMachine& m, std::vector<int>* old_to_new_out = nullptr) {
  auto order = reachable_states(m);
  std::vector<int> old_to_new(static_cast<std::size_t>(m.num_states()), -1);
  for (std::size_t k = 0; k < order.size(); ++k) old_to_new[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
  MealyMachine out(m.inputs(), m.outputs(), static_cast<int>(order.size()), 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    int q = order[k];
    for (int i = 0; i < m.inputs().size(); ++i)
      out.set_transition(static_cast<int>(k), i, old_to_new[static_cast<std::size_t>(m.next_state(q, i))],
                         m.output(q, i));
  }
  if (old_to_new_out) *old_to_new_out = std::move(old_to_new);
  return out;
}

// Moore partition refinement on a reachable machine. Returns the block id
// per state; block numbering follows the sorted (old block, signature)
// keys, which is deterministic.
std::vector<int> refine_blocks(const MealyMachine& m) {
  int n = m.num_states();
  int num_inputs = m.inputs().size();
  std::vector<int> block(static_cast<std::size_t>(n), 0);

  auto split = [&](auto&& signature) {
    std::map<std::pair<int, std::vector<int>>, int> next_id;
    std::vector<int> next(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) {
      auto key = std::make_pair(block[static_cast<std::size_t>(q)], signature(q));
      auto [it, inserted] = next_id.emplace(std::move(key), static_cast<int>(next_id.size()));
      next[static_cast<std::size_t>(q)] = it->second;
      (void)inserted;
    }
    bool changed = next_id.size() != static_cast<std::size_t>(*std::max_element(block.begin(), block.end()) + 1);
    block = std::move(next);
    return changed;
  };

  // Initial split on output rows, then iterate on successor blocks.
  split([&](int q) {
    std::vector<int> sig(static_cast<std::size_t>(num_inputs));
    for (int i = 0; i < num_inputs; ++i) sig[static_cast<std::size_t>(i)] = m.output(q, i);
    return sig;
  });
  while (split([&](int q) {
    std::vector<int> sig(static_cast<std::size_t>(num_inputs));
    for (int i = 0; i < num_inputs; ++i)
      sig[static_cast<std::size_t>(i)] = block[static_cast<std::size_t>(m.next_state(q, i))];
    return sig;
  })) {
  }
  return block;
}

}  // namespace

MinimizeResult minimize(const MealyMachine& m) {
  std::vector<int> to_reach;
  MealyMachine reach = bfs_canonical(m, &to_reach);
  std::vector<int> block = refine_blocks(reach);
  int num_blocks = *std::max_element(block.begin(), block.end()) + 1;

  MealyMachine quotient(m.inputs(), m.outputs(), num_blocks, block[static_cast<std::size_t>(reach.initial())]);
  std::vector<bool> done(static_cast<std::size_t>(num_blocks), false);
  for (int q = 0; q < reach.num_states(); ++q) {
    int b = block[static_cast<std::size_t>(q)];
    if (done[static_cast<std::size_t>(b)]) continue;
    done[static_cast<std::size_t>(b)] = true;
    for (int i = 0; i < m.inputs().size(); ++i)
      quotient.set_transition(b, i, block[static_cast<std::size_t>(reach.next_state(q, i))], reach.output(q, i));
  }

  std::vector<int> quot_to_canon;
  MealyMachine canon = bfs_canonical(quotient, &quot_to_canon);

  MinimizeResult result{std::move(canon), std::vector<int>(static_cast<std::size_t>(m.num_states()), -1)};
  for (int q = 0; q < m.num_states(); ++q) {
    int r = to_reach[static_cast<std::size_t>(q)];
    if (r >= 0) result.state_map[static_cast<std::size_t>(q)] =
        quot_to_canon[static_cast<std::size_t>(block[static_cast<std::size_t>(r)])];
  }
  return result;
}

bool is_minimal(const MealyMachine& m) { return minimize(m).machine.num_states() == m.num_states(); }

void require_same_inputs(const MealyMachine& m, const MealyMachine& n) {
  if (!(m.inputs() == n.inputs())) throw AlphabetMismatch("machines have different input alphabets");
}

std::vector<int> output_id_map(const Alphabet& from, const Alphabet& to) {
  std::vector<int> map(static_cast<std::size_t>(from.size()));
  int fresh = to.size();
  for (int i = 0; i < from.size(); ++i)
    map[static_cast<std::size_t>(i)] = to.contains(from.name(i)) ? to.id(from.name(i)) : fresh++;
  return map;
}

std::optional<Word> equivalence(const MealyMachine& m, const MealyMachine& n) {
  require_same_inputs(m, n);
  auto remap = output_id_map(n.outputs(), m.outputs());

  struct Node {
    int parent;
    int input;
  };
  std::vector<Node> trace;
  std::vector<std::vector<bool>> seen(static_cast<std::size_t>(m.num_states()),
                                      std::vector<bool>(static_cast<std::size_t>(n.num_states()), false));
  std::deque<std::pair<std::pair<int, int>, int>> queue;  // ((p, q), trace index)

  auto word_to = [&](int trace_idx, int last_input) {
    Word w;
    for (int k = trace_idx; k >= 0; k = trace[static_cast<std::size_t>(k)].parent)
      w.push_back(trace[static_cast<std::size_t>(k)].input);
    std::reverse(w.begin(), w.end());
    w.push_back(last_input);
    return w;
  };

  seen[static_cast<std::size_t>(m.initial())][static_cast<std::size_t>(n.initial())] = true;
  queue.push_back({{m.initial(), n.initial()}, -1});
  while (!queue.empty()) {
    auto [pq, idx] = queue.front();
    queue.pop_front();
    auto [p, q] = pq;
    for (int i = 0; i < m.inputs().size(); ++i) {
      if (m.output(p, i) != remap[static_cast<std::size_t>(n.output(q, i))]) return word_to(idx, i);
      int pp = m.next_state(p, i);
      int qq = n.next_state(q, i);
      if (!seen[static_cast<std::size_t>(pp)][static_cast<std::size_t>(qq)]) {
        seen[static_cast<std::size_t>(pp)][static_cast<std::size_t>(qq)] = true;
        trace.push_back({idx, i});
        queue.push_back({{pp, qq}, static_cast<int>(trace.size()) - 1});
      }
    }
  }
  return std::nullopt;
}

std::optional<Word> agree_on(const MealyMachine& m, const MealyMachine& n, const TestSuite& suite) {
  require_same_inputs(m, n);
  auto remap = output_id_map(n.outputs(), m.outputs());
  for (const Word& w : suite) {
    auto rm = run(m, w);
    auto rn = run(n, w);
    for (std::size_t k = 0; k < w.size(); ++k)
      if (rm.outputs[k] != remap[static_cast<std::size_t>(rn.outputs[k])]) return w;
  }
  return std::nullopt;
}

TestSuite state_cover(const MealyMachine& m) {
  std::vector<Word> cover;
  std::vector<bool> seen(static_cast<std::size_t>(m.num_states()), false);
  std::deque<std::pair<int, Word>> queue;
  seen[static_cast<std::size_t>(m.initial())] = true;
  queue.push_back({m.initial(), {}});
  while (!queue.empty()) {
    auto [q, w] = queue.front();
    queue.pop_front();
    cover.push_back(w);
    for (int i = 0; i < m.inputs().size(); ++i) {
      int t = m.next_state(q, i);
      if (!seen[static_cast<std::size_t>(t)]) {
        seen[static_cast<std::size_t>(t)] = true;
        Word wt = w;
        wt.push_back(i);
        queue.push_back({t, std::move(wt)});
      }
    }
  }
  return TestSuite(std::move(cover), "state-cover");
}

TestSuite char_set(const MealyMachine& machine) {
  const MealyMachine m = is_minimal(machine) ? machine : minimize(machine).machine;
  int n = m.num_states();
  if (n == 1) return TestSuite({Word{0}}, "char-set");

  // dist[p][q]: a shortest word separating p and q, filled in rounds of
  // increasing length; ties broken by the smallest splitting input.
  auto at = [n](int p, int q) { return static_cast<std::size_t>(p) * static_cast<std::size_t>(n) + static_cast<std::size_t>(q); };
  std::vector<Word> dist(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<bool> have(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);

  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      for (int i = 0; i < m.inputs().size(); ++i)
        if (m.output(p, i) != m.output(q, i)) {
          dist[at(p, q)] = {i};
          have[at(p, q)] = true;
          break;
        }

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<std::size_t, Word>> round;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (have[at(p, q)]) continue;
        for (int i = 0; i < m.inputs().size(); ++i) {
          int pp = m.next_state(p, i);
          int qq = m.next_state(q, i);
          if (pp == qq) continue;
          auto cell = pp < qq ? at(pp, qq) : at(qq, pp);
          if (!have[cell]) continue;
          Word w{i};
          w.insert(w.end(), dist[cell].begin(), dist[cell].end());
          round.push_back({at(p, q), std::move(w)});
          break;
        }
      }
    for (auto& [cell, w] : round) {
      dist[cell] = std::move(w);
      have[cell] = true;
      changed = true;
    }
  }

  std::vector<Word> words;
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (have[at(p, q)]) words.push_back(dist[at(p, q)]);
  return TestSuite(std::move(words), "char-set");
}

ActiveMachine active(const MealyMachine& m) {
  auto mask = sink_mask(m);
  if (mask[static_cast<std::size_t>(m.initial())]) throw InitialIsSink();

  ActiveMachine result{
      PartialMealyMachine(m.inputs(), m.outputs(), 0, 0), std::vector<int>(static_cast<std::size_t>(m.num_states()), -1), {}, {}};
  for (int q = 0; q < m.num_states(); ++q)
    if (!mask[static_cast<std::size_t>(q)]) {
      result.to_active[static_cast<std::size_t>(q)] = static_cast<int>(result.to_original.size());
      result.to_original.push_back(q);
    }

  PartialMealyMachine pm(m.inputs(), m.outputs(), static_cast<int>(result.to_original.size()),
                         result.to_active[static_cast<std::size_t>(m.initial())]);
  std::vector<bool> input_active(static_cast<std::size_t>(m.inputs().size()), false);
  for (std::size_t a = 0; a < result.to_original.size(); ++a) {
    int q = result.to_original[a];
    for (int i = 0; i < m.inputs().size(); ++i) {
      int t = m.next_state(q, i);
      if (t == q || mask[static_cast<std::size_t>(t)]) continue;
      pm.set_transition(static_cast<int>(a), i, result.to_active[static_cast<std::size_t>(t)], m.output(q, i));
      input_active[static_cast<std::size_t>(i)] = true;
    }
  }
  for (int i = 0; i < m.inputs().size(); ++i)
    if (input_active[static_cast<std::size_t>(i)]) result.alphabet.push_back(i);
  result.machine = std::move(pm);
  return result;
}

bool isomorphic(const MealyMachine& m, const MealyMachine& n) {
  if (!(m.inputs() == n.inputs())) return false;
  MealyMachine cm = bfs_canonical(m);
  MealyMachine cn = bfs_canonical(n);
  if (cm.num_states() != cn.num_states()) return false;
  for (int q = 0; q < cm.num_states(); ++q)
    for (int i = 0; i < cm.inputs().size(); ++i) {
      if (cm.next_state(q, i) != cn.next_state(q, i)) return false;
      if (cm.outputs().name(cm.output(q, i)) != cn.outputs().name(cn.output(q, i))) return false;
    }
  return true;
}

}  // namespace mealy
