#include "mealy/experts.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace mealy {

std::string Expert::name() const {
  switch (kind) {
    case Kind::Trivial: return "trivial";
    case Kind::ActiveInputs: return "active-inputs";
    case Kind::Future: return "future:" + std::to_string(lookahead);
    case Kind::Components: return "components";
    case Kind::Fixed: return "fixed";
  }
  return "?";
}

Subalphabet active_inputs(const MealyMachine& h) {
  auto mask = sink_mask(h);
  Subalphabet out;
  for (int i = 0; i < h.inputs().size(); ++i) {
    bool active = false;
    for (int q = 0; q < h.num_states() && !active; ++q) {
      int t = h.next_state(q, i);
      active = t != q && !mask[static_cast<std::size_t>(t)];
    }
    if (active) out.push_back(i);
  }
  return out;
}

namespace {

// Active states reachable from `start` in at most `steps` transitions of
// the active machine, then the inputs defined at any of them.
Subalphabet future_from_state(const ActiveMachine& am, int start, int steps) {
  std::vector<bool> seen(static_cast<std::size_t>(am.machine.num_states()), false);
  std::deque<std::pair<int, int>> queue{{start, 0}};
  seen[static_cast<std::size_t>(start)] = true;
  std::vector<bool> inputs(static_cast<std::size_t>(am.machine.inputs().size()), false);
  while (!queue.empty()) {
    auto [q, d] = queue.front();
    queue.pop_front();
    for (int i = 0; i < am.machine.inputs().size(); ++i) {
      if (!am.machine.defined(q, i)) continue;
      inputs[static_cast<std::size_t>(i)] = true;
      int t = am.machine.next_state(q, i);
      if (d + 1 <= steps && !seen[static_cast<std::size_t>(t)]) {
        seen[static_cast<std::size_t>(t)] = true;
        queue.push_back({t, d + 1});
      }
    }
  }
  Subalphabet out;
  for (int i = 0; i < am.machine.inputs().size(); ++i)
    if (inputs[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

SubalphabetSet dedup(SubalphabetSet subs) {
  std::sort(subs.begin(), subs.end());
  subs.erase(std::unique(subs.begin(), subs.end()), subs.end());
  return subs;
}

}  // namespace

Subalphabet future_alphabet(const MealyMachine& h, const Word& v, int lookahead) {
  if (lookahead < 1) throw std::invalid_argument("lookahead must be >= 1");
  int qv = run(h, v).state;
  auto mask = sink_mask(h);
  if (mask[static_cast<std::size_t>(qv)]) return {};
  auto am = active(h);
  return future_from_state(am, am.to_active[static_cast<std::size_t>(qv)], lookahead - 1);
}

DiGraph state_graph(const PartialMealyMachine& m) {
  std::vector<std::pair<int, int>> edges;
  for (int q = 0; q < m.num_states(); ++q)
    for (int i = 0; i < m.inputs().size(); ++i)
      if (m.defined(q, i)) edges.push_back({q, m.next_state(q, i)});
  return DiGraph(m.num_states(), std::move(edges));
}

double modularity(const DiGraph& g, const std::vector<int>& community) {
  if (g.num_edges() == 0) throw NoEdges();
  std::vector<bool> in(static_cast<std::size_t>(g.num_nodes()), false);
  for (int v : community) in[static_cast<std::size_t>(v)] = true;
  long long internal = 0, outdeg = 0, indeg = 0;
  for (auto [u, v] : g.edges()) {
    bool iu = in[static_cast<std::size_t>(u)], iv = in[static_cast<std::size_t>(v)];
    if (iu && iv) ++internal;
    if (iu) ++outdeg;
    if (iv) ++indeg;
  }
  double m = static_cast<double>(g.num_edges());
  return static_cast<double>(internal) / m - static_cast<double>(outdeg * indeg) / (m * m);
}

NewmanResult newman_trace(const DiGraph& g) {
  int n = g.num_nodes();
  NewmanResult result;
  if (n == 0) return result;

  // cross[a][b]: number of edges from community a to community b. Gains
  // are scored in exact integers: gain(a,b) * m^2 =
  //   (cross[a][b] + cross[b][a]) * m - (out[a]*in[b] + out[b]*in[a]).
  std::vector<std::vector<long long>> cross(static_cast<std::size_t>(n),
                                            std::vector<long long>(static_cast<std::size_t>(n), 0));
  std::vector<long long> out(static_cast<std::size_t>(n), 0), in(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : g.edges()) {
    ++cross[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    ++out[static_cast<std::size_t>(u)];
    ++in[static_cast<std::size_t>(v)];
  }
  long long m = g.num_edges();

  std::vector<std::vector<int>> members(static_cast<std::size_t>(n));
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  for (int v = 0; v < n; ++v) members[static_cast<std::size_t>(v)] = {v};

  if (m > 0) {
    while (true) {
      long long best = 0;
      int ba = -1, bb = -1;
      for (int a = 0; a < n; ++a) {
        if (!alive[static_cast<std::size_t>(a)]) continue;
        for (int b = a + 1; b < n; ++b) {
          if (!alive[static_cast<std::size_t>(b)]) continue;
          long long gain =
              (cross[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] +
               cross[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]) * m -
              (out[static_cast<std::size_t>(a)] * in[static_cast<std::size_t>(b)] +
               out[static_cast<std::size_t>(b)] * in[static_cast<std::size_t>(a)]);
          if (gain > best) {
            best = gain;
            ba = a;
            bb = b;
          }
        }
      }
      if (ba < 0) break;  // best gain not positive

      result.merges.push_back({members[static_cast<std::size_t>(ba)], members[static_cast<std::size_t>(bb)]});
      // Merge bb into ba (ba keeps the smaller min member by construction).
      auto& ma = members[static_cast<std::size_t>(ba)];
      auto& mb = members[static_cast<std::size_t>(bb)];
      ma.insert(ma.end(), mb.begin(), mb.end());
      std::sort(ma.begin(), ma.end());
      mb.clear();
      alive[static_cast<std::size_t>(bb)] = false;
      for (int c = 0; c < n; ++c) {
        if (!alive[static_cast<std::size_t>(c)] || c == ba) continue;
        cross[static_cast<std::size_t>(ba)][static_cast<std::size_t>(c)] +=
            cross[static_cast<std::size_t>(bb)][static_cast<std::size_t>(c)];
        cross[static_cast<std::size_t>(c)][static_cast<std::size_t>(ba)] +=
            cross[static_cast<std::size_t>(c)][static_cast<std::size_t>(bb)];
      }
      cross[static_cast<std::size_t>(ba)][static_cast<std::size_t>(ba)] +=
          cross[static_cast<std::size_t>(bb)][static_cast<std::size_t>(bb)] +
          cross[static_cast<std::size_t>(ba)][static_cast<std::size_t>(bb)] +
          cross[static_cast<std::size_t>(bb)][static_cast<std::size_t>(ba)];
      out[static_cast<std::size_t>(ba)] += out[static_cast<std::size_t>(bb)];
      in[static_cast<std::size_t>(ba)] += in[static_cast<std::size_t>(bb)];
    }
  }

  for (int a = 0; a < n; ++a)
    if (alive[static_cast<std::size_t>(a)]) result.partition.push_back(members[static_cast<std::size_t>(a)]);
  return result;
}

Partition newman(const DiGraph& g) { return newman_trace(g).partition; }

SubalphabetSet component_alphabets(const MealyMachine& h, const Partition& parts) {
  auto am = active(h);
  SubalphabetSet out;
  for (const auto& community : parts) {
    std::vector<bool> in(static_cast<std::size_t>(am.machine.num_states()), false);
    for (int v : community) in[static_cast<std::size_t>(v)] = true;
    std::vector<bool> used(static_cast<std::size_t>(h.inputs().size()), false);
    for (int v : community)
      for (int i = 0; i < h.inputs().size(); ++i)
        if (am.machine.defined(v, i) && in[static_cast<std::size_t>(am.machine.next_state(v, i))])
          used[static_cast<std::size_t>(i)] = true;
    Subalphabet sub;
    for (int i = 0; i < h.inputs().size(); ++i)
      if (used[static_cast<std::size_t>(i)]) sub.push_back(i);
    out.push_back(std::move(sub));
  }
  return out;
}

ExpertEvaluator::ExpertEvaluator(Expert expert, const MealyMachine& h)
    : expert_(std::move(expert)), h_(&h) {
  switch (expert_.kind) {
    case Expert::Kind::Trivial: {
      Subalphabet all(static_cast<std::size_t>(h.inputs().size()));
      for (int i = 0; i < h.inputs().size(); ++i) all[static_cast<std::size_t>(i)] = i;
      fixed_result_ = {std::move(all)};
      break;
    }
    case Expert::Kind::ActiveInputs:
      fixed_result_ = {active_inputs(h)};
      break;
    case Expert::Kind::Components: {
      auto mask = sink_mask(h);
      if (mask[static_cast<std::size_t>(h.initial())]) {
        fixed_result_ = {{}};
        break;
      }
      auto parts = newman(state_graph(active(h).machine));
      auto subs = component_alphabets(h, parts);
      fixed_result_ = subs.empty() ? SubalphabetSet{{}} : dedup(std::move(subs));
      break;
    }
    case Expert::Kind::Fixed:
      fixed_result_ = expert_.fixed_subs.empty() ? SubalphabetSet{{}} : dedup(expert_.fixed_subs);
      break;
    case Expert::Kind::Future:
      break;
  }
}

SubalphabetSet ExpertEvaluator::eval(const Word& v) const {
  if (expert_.kind != Expert::Kind::Future) return fixed_result_;
  int qv = run(*h_, v).state;
  auto it = future_cache_.find(qv);
  if (it != future_cache_.end()) return it->second;
  SubalphabetSet result{future_alphabet(*h_, v, expert_.lookahead)};
  future_cache_.emplace(qv, result);
  return result;
}

SubalphabetSet expert_eval(const Expert& e, const MealyMachine& h, const Word& v) {
  return ExpertEvaluator(e, h).eval(v);
}

}  // namespace mealy
