#include "mealy/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "mealy/dot.hpp"
#include "mealy/generators.hpp"

namespace mealy {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<int> split_spec_ints(const std::string& spec, std::size_t expected) {
  auto rest = spec.substr(spec.find(':') + 1);
  std::vector<int> out;
  std::stringstream ss(rest);
  std::string item;
  while (std::getline(ss, item, ':')) out.push_back(std::stoi(item));
  if (out.size() != expected) throw std::invalid_argument("bad model spec: " + spec);
  return out;
}

}  // namespace

MealyMachine resolve_model(const std::string& spec) {
  if (spec.rfind("asml:", 0) == 0) {
    auto v = split_spec_ints(spec, 2);
    return gen_asml(v[0], v[1]);
  }
  if (spec.rfind("tcp:", 0) == 0) {
    auto v = split_spec_ints(spec, 2);
    return gen_tcp(v[0], v[1]);
  }
  if (spec.rfind("ssh:", 0) == 0) {
    auto v = split_spec_ints(spec, 2);
    return gen_ssh(v[0], v[1]);
  }
  if (spec.rfind("random:", 0) == 0) {
    auto v = split_spec_ints(spec, 4);
    return gen_random(v[0], v[1], v[2], static_cast<std::uint64_t>(v[3]));
  }
  if (spec == "coffee") return fixtures().coffee_sul;
  if (spec == "openssh") return fixtures().openssh;
  return parse_dot_file(spec);
}

ExperimentConfig parse_experiment_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  ExperimentConfig config;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "models") {
      config.models = split_list(value);
    } else if (key == "strategies") {
      config.strategies = split_list(value);
    } else if (key == "seeds") {
      for (const auto& item : split_list(value)) {
        auto dots = item.find("..");
        if (dots == std::string::npos) {
          config.seeds.push_back(std::stoull(item));
        } else {
          std::uint64_t lo = std::stoull(item.substr(0, dots));
          std::uint64_t hi = std::stoull(item.substr(dots + 2));
          for (std::uint64_t s = lo; s <= hi; ++s) config.seeds.push_back(s);
        }
      }
    } else if (key == "budget") {
      config.budget = std::stoll(value);
    } else if (key == "k") {
      config.k = std::stoi(value);
    } else if (key == "gamma") {
      config.gamma = std::stod(value);
    } else if (key == "test_budget") {
      config.test_budget = std::stoll(value);
    } else if (key == "parallelism") {
      config.parallelism = std::stoi(value);
    } else if (key == "master_seed") {
      config.master_seed = std::stoull(value);
    } else if (key == "output") {
      config.output = value;
    } else {
      throw std::runtime_error("config line " + std::to_string(lineno) + ": unknown key " + key);
    }
  }
  if (config.seeds.empty()) throw std::runtime_error("config needs at least one seed");
  if (config.budget <= 0) throw std::runtime_error("config needs a positive budget");
  return config;
}

namespace {

struct Cell {
  std::string model;
  std::string strategy;
  std::uint64_t seed;
  RunRecord record;
  bool failed = false;
  std::string error;
};

std::string sanitize_note(std::string note) {
  for (char& c : note)
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  return note;
}

std::string csv_row(const Cell& c) {
  std::ostringstream out;
  out << c.model << ',' << c.strategy << ',' << c.seed << ',' << (c.record.learned ? 1 : 0) << ','
      << c.record.states << ',' << c.record.stats.learn_symbols << ','
      << c.record.stats.learn_resets << ',' << c.record.stats.test_symbols << ','
      << c.record.stats.test_resets << ',' << c.record.stats.total() << ','
      << sanitize_note(c.failed ? c.error : c.record.note) << '\n';
  return out.str();
}

std::string format_mean(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string run_experiment(const ExperimentConfig& config) {
  std::vector<Cell> cells;
  for (const auto& model : config.models)
    for (const auto& strategy : config.strategies)
      for (auto seed : config.seeds) cells.push_back({model, strategy, seed, {}, false, ""});

  auto run_cell = [&](Cell& cell) {
    try {
      MealyMachine sul = resolve_model(cell.model);
      Teacher teacher(std::move(sul), config.budget);
      std::string tag = cell.model + "|" + cell.strategy + "|" + std::to_string(cell.seed);
      Rng rng(fnv1a64(tag, fnv1a64(std::to_string(config.master_seed))));
      LearnConfig lc;
      lc.k = config.k;
      lc.gamma = config.gamma;
      lc.test_budget = config.test_budget;
      cell.record = learn(teacher, parse_strategy(cell.strategy, config.k), rng, lc);
      cell.record.model = cell.model;
      cell.record.strategy = cell.strategy;
      cell.record.seed = cell.seed;
    } catch (const std::exception& e) {
      cell.failed = true;
      cell.error = e.what();
      cell.record = RunRecord{};
    }
  };

  int workers = std::max(1, config.parallelism);
  if (workers == 1) {
    for (auto& cell : cells) run_cell(cell);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= cells.size()) return;
          run_cell(cells[i]);
        }
      });
    for (auto& t : pool) t.join();
  }

  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return std::tie(a.model, a.strategy, a.seed) < std::tie(b.model, b.strategy, b.seed);
  });

  std::ostringstream out;
  out << "model,strategy,seed,learned,states,learn_inputs,learn_resets,test_inputs,test_resets,"
         "total,note\n";
  for (const auto& cell : cells) out << csv_row(cell);

  // Aggregates per (model, strategy), in the same sorted order.
  for (std::size_t i = 0; i < cells.size();) {
    std::size_t j = i;
    long long learned = 0;
    double states = 0, ls = 0, lr = 0, ts = 0, tr = 0, total = 0;
    while (j < cells.size() && cells[j].model == cells[i].model &&
           cells[j].strategy == cells[i].strategy) {
      const auto& r = cells[j].record;
      learned += r.learned ? 1 : 0;
      states += r.states;
      ls += static_cast<double>(r.stats.learn_symbols);
      lr += static_cast<double>(r.stats.learn_resets);
      ts += static_cast<double>(r.stats.test_symbols);
      tr += static_cast<double>(r.stats.test_resets);
      total += static_cast<double>(r.stats.total());
      ++j;
    }
    double n = static_cast<double>(j - i);
    out << cells[i].model << ',' << cells[i].strategy << ",all," << learned << ','
        << format_mean(states / n) << ',' << format_mean(ls / n) << ',' << format_mean(lr / n)
        << ',' << format_mean(ts / n) << ',' << format_mean(tr / n) << ','
        << format_mean(total / n) << ",\n";
    i = j;
  }

  std::string csv = out.str();
  if (!config.output.empty()) {
    std::ofstream file(config.output);
    if (!file) throw std::runtime_error("cannot open " + config.output + " for writing");
    file << csv;
  }
  return csv;
}

bool all_learned(const std::string& csv) {
  std::stringstream ss(csv);
  std::string line;
  std::getline(ss, line);  // header
  while (std::getline(ss, line)) {
    std::vector<std::string> fields = split_list(line);
    if (fields.size() < 4 || fields[2] == "all") continue;
    if (fields[3] != "1") return false;
  }
  return true;
}

}  // namespace mealy
