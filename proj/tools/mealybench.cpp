#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "mealy/dot.hpp"
#include "mealy/experiment.hpp"
#include "mealy/experts.hpp"
#include "mealy/generators.hpp"
#include "mealy/learner.hpp"
#include "mealy/suitegen.hpp"

namespace {

using namespace mealy;

int cmd_gen(const std::string& family, int a, int b, int states, int num_inputs, int num_outputs,
            std::uint64_t seed, const std::string& output) {
  MealyMachine m = [&] {
    if (family == "asml") return gen_asml(a, b);
    if (family == "tcp") return gen_tcp(a, b);
    if (family == "ssh") return gen_ssh(a, b);
    if (family == "random") return gen_random(states, num_inputs, num_outputs, seed);
    if (family == "coffee") return fixtures().coffee_sul;
    if (family == "openssh") return fixtures().openssh;
    throw CLI::ValidationError("--family must be asml, tcp, ssh, random, coffee or openssh");
  }();
  if (output.empty())
    std::cout << write_dot(m);
  else
    write_dot_file(m, output);
  return 0;
}

int cmd_suite(const std::string& hyp_path, const std::string& method, const std::string& expert,
              int k) {
  MealyMachine h = parse_dot_file(hyp_path);
  TestSuite suite = method == "wmethod" ? w_method(h, k)
                                        : ets(h, parse_strategy("expert:" + expert, k).experts[0], k);
  for (const Word& w : suite) std::cout << format_word(w, h.inputs()) << "\n";
  return 0;
}

int cmd_equiv(const std::string& a_path, const std::string& b_path) {
  MealyMachine a = parse_dot_file(a_path);
  MealyMachine b = parse_dot_file(b_path);
  auto ce = equivalence(a, b);
  if (!ce) {
    std::cout << "equivalent\n";
    return 0;
  }
  std::cout << format_word(*ce, a.inputs()) << "\n";
  return 1;
}

int cmd_communities(const std::string& path) {
  MealyMachine m = parse_dot_file(path);
  ActiveMachine am = active(m);
  Partition parts = newman(state_graph(am.machine));
  for (const auto& community : parts) {
    for (std::size_t i = 0; i < community.size(); ++i) {
      if (i) std::cout << ' ';
      std::cout << am.to_original[static_cast<std::size_t>(community[i])];
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_learn(const std::string& sul_path, const std::string& strategy, int k, double gamma,
              std::uint64_t seed, long long budget, long long test_budget,
              const std::string& csv_path) {
  Teacher teacher(resolve_model(sul_path), budget);
  Rng rng(seed);
  LearnConfig config;
  config.k = k;
  config.gamma = gamma;
  config.test_budget = test_budget;
  RunRecord record = learn(teacher, parse_strategy(strategy, k), rng, config);

  std::ostringstream row;
  row << sul_path << ',' << strategy << ',' << seed << ',' << (record.learned ? 1 : 0) << ','
      << record.states << ',' << record.stats.learn_symbols << ',' << record.stats.learn_resets
      << ',' << record.stats.test_symbols << ',' << record.stats.test_resets << ','
      << record.stats.total() << ',' << record.note << '\n';
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    out << "model,strategy,seed,learned,states,learn_inputs,learn_resets,test_inputs,test_resets,"
           "total,note\n"
        << row.str();
  }
  std::cout << (record.learned ? "learned" : "not learned") << " " << record.states
            << " states, total " << record.stats.total() << "\n";
  for (const auto& entry : record.trace)
    std::cout << "  hypothesis " << entry.states << " states at " << entry.cumulative_symbols
              << " symbols" << (entry.refuted_by.empty() ? "" : ", refuted by " + entry.refuted_by)
              << "\n";
  return 0;
}

int cmd_experiment(const std::string& config_path, bool strict) {
  ExperimentConfig config = parse_experiment_config(config_path);
  std::string csv = run_experiment(config);
  if (config.output.empty())
    std::cout << csv;
  else
    std::cout << "wrote " << config.output << "\n";
  return strict && !all_learned(csv) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for active Mealy-machine learning with expert test suites"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "generate a benchmark machine as DOT");
  std::string family, gen_out;
  int a = 3, b = 5, states = 20, num_inputs = 11, num_outputs = 5;
  std::uint64_t gen_seed = 1;
  gen->add_option("--family", family, "asml|tcp|ssh|random|coffee|openssh")->required();
  gen->add_option("--a", a, "branch/width parameter");
  gen->add_option("--b", b, "irrelevant-input parameter");
  gen->add_option("--states", states, "random: state count");
  gen->add_option("--inputs", num_inputs, "random: input count");
  gen->add_option("--outputs", num_outputs, "random: output count");
  gen->add_option("--seed", gen_seed, "random: seed");
  gen->add_option("-o,--output", gen_out, "output file (stdout if omitted)");

  auto* suite = app.add_subcommand("suite", "print a test suite, one word per line");
  std::string hyp, method = "wmethod", suite_expert = "trivial";
  int suite_k = 2;
  suite->add_option("--hyp", hyp, "hypothesis DOT file")->required();
  suite->add_option("--method", method, "wmethod|ets");
  suite->add_option("--expert", suite_expert, "trivial|active-inputs|future|components");
  suite->add_option("--k", suite_k, "completeness parameter");

  auto* equiv = app.add_subcommand("equiv", "check equivalence of two machines");
  std::string equiv_a, equiv_b;
  equiv->add_option("a", equiv_a, "first DOT file")->required();
  equiv->add_option("b", equiv_b, "second DOT file")->required();

  auto* communities = app.add_subcommand("communities", "print communities of the active machine");
  std::string comm_path;
  communities->add_option("machine", comm_path, "DOT file")->required();

  auto* learn_cmd = app.add_subcommand("learn", "learn a model from a simulated teacher");
  std::string sul, strategy = "moe", learn_csv;
  int learn_k = 2;
  double gamma = 0.2;
  std::uint64_t learn_seed = 1;
  long long budget = 10000000, test_budget = -1;
  learn_cmd->add_option("--sul", sul, "DOT file or generator spec (e.g. asml:3:5)")->required();
  learn_cmd->add_option("--strategy", strategy,
                        "baseline|moe|moe:<e+e>|expert:<name>|det|det:<name>");
  learn_cmd->add_option("--k", learn_k, "completeness parameter");
  learn_cmd->add_option("--gamma", gamma, "exploration parameter");
  learn_cmd->add_option("--seed", learn_seed, "rng seed");
  learn_cmd->add_option("--budget", budget, "symbol budget");
  learn_cmd->add_option("--test-budget", test_budget, "max tests per equivalence query");
  learn_cmd->add_option("--csv", learn_csv, "write the run record as CSV");

  auto* experiment = app.add_subcommand("experiment", "run a batch of learning runs");
  std::string exp_config;
  bool strict = false;
  experiment->add_option("--config", exp_config, "key = value config file")->required();
  experiment->add_flag("--strict", strict, "exit 1 unless every cell learned");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed())
      return cmd_gen(family, a, b, states, num_inputs, num_outputs, gen_seed, gen_out);
    if (suite->parsed()) return cmd_suite(hyp, method, suite_expert, suite_k);
    if (equiv->parsed()) return cmd_equiv(equiv_a, equiv_b);
    if (communities->parsed()) return cmd_communities(comm_path);
    if (learn_cmd->parsed())
      return cmd_learn(sul, strategy, learn_k, gamma, learn_seed, budget, test_budget, learn_csv);
    if (experiment->parsed()) return cmd_experiment(exp_config, strict);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
