#include "mealy/generators.hpp"

#include <string>

#include "mealy/rng.hpp"

namespace mealy {

namespace {

// Builder that starts fully sink-bound: every transition loops on `sink`
// with output "-" until overwritten.
struct SinkDefault {
  SinkDefault(Alphabet inputs_, Alphabet outputs_, int n, int initial, int sink_state)
      : machine(std::move(inputs_), std::move(outputs_), n, initial), sink(sink_state) {
    int dash = machine.outputs().id("-");
    for (int q = 0; q < n; ++q)
      for (int i = 0; i < machine.inputs().size(); ++i) machine.set_transition(q, i, sink, dash);
    for (int i = 0; i < machine.inputs().size(); ++i) machine.set_transition(sink, i, sink, dash);
  }

  void edge(int from, const std::string& input, int to, const std::string& output) {
    machine.set_transition(from, machine.inputs().id(input), to, machine.outputs().id(output));
  }

  MealyMachine machine;
  int sink;
};

std::string xname(int i) { return "x" + std::to_string(i); }
std::string yname(int i) { return "y" + std::to_string(i); }

}  // namespace

MealyMachine gen_asml(int a, int b) {
  if (a < 2 || b < 0) throw std::invalid_argument("gen_asml needs a >= 2, b >= 0");
  Alphabet inputs, outputs;
  for (int i = 1; i <= a; ++i) inputs.add(xname(i));
  for (int i = 1; i <= b; ++i) inputs.add(yname(i));
  for (int i = 1; i <= a; ++i) outputs.add(xname(i));
  outputs.add("-");

  // States: spine s_1..s_a = 0..a-1, row (i,t) for i in 1..a and
  // t in 1..a-1, then z, then the sink.
  int n = a + a * (a - 1) + 2;
  auto row_state = [a](int i, int t) { return a + (i - 1) * (a - 1) + (t - 1); };
  int z = a + a * (a - 1);
  SinkDefault m(std::move(inputs), std::move(outputs), n, 0, n - 1);

  for (int j = 1; j < a; ++j) m.edge(j - 1, xname(j), j, xname(j));
  for (int i = 1; i <= a; ++i) {
    m.edge(a - 1, xname(i), row_state(i, 1), xname(i));
    for (int t = 1; t <= a - 1; ++t) {
      // Row i consumes the spine inputs rotated by i.
      int sym = ((i + t - 1) % a) + 1;
      int from = row_state(i, t);
      int to = t == a - 1 ? z : row_state(i, t + 1);
      m.edge(from, xname(sym), to, xname(sym));
    }
  }
  m.edge(z, xname(1), 0, xname(1));
  return m.machine;
}

MealyMachine gen_tcp(int a, int b) {
  if (a < 2 || b < 1) throw std::invalid_argument("gen_tcp needs a >= 2, b >= 1");
  Alphabet inputs, outputs;
  for (int i = 0; i <= a; ++i) inputs.add(xname(i));
  for (int i = 1; i <= b; ++i) inputs.add(yname(i));
  for (int i = 0; i <= a; ++i) outputs.add(xname(i));
  for (int i = 1; i <= b; ++i) outputs.add(yname(i));
  outputs.add("-");

  // States: spine p_1..p_b = 0..b-1, rows, z, sink. The branch happens at
  // p_b after the handshake y_1..y_{b-1}.
  int n = b + a * (a - 1) + 2;
  auto row_state = [a, b](int i, int t) { return b + (i - 1) * (a - 1) + (t - 1); };
  int z = b + a * (a - 1);
  int branch = b - 1;
  SinkDefault m(std::move(inputs), std::move(outputs), n, 0, n - 1);

  for (int j = 1; j < b; ++j) m.edge(j - 1, yname(j), j, yname(j));
  for (int i = 1; i <= a; ++i) {
    m.edge(branch, xname(i), row_state(i, 1), xname(i));
    for (int t = 1; t <= a - 1; ++t) {
      int sym = ((i + t - 1) % a) + 1;
      int from = row_state(i, t);
      int to = t == a - 1 ? z : row_state(i, t + 1);
      m.edge(from, xname(sym), to, xname(sym));
    }
  }
  m.edge(z, xname(0), branch, xname(0));
  return m.machine;
}

MealyMachine gen_ssh(int a, int b) {
  if (a < 2 || b < 0) throw std::invalid_argument("gen_ssh needs a >= 2, b >= 0");
  Alphabet inputs, outputs;
  for (int i = 1; i <= a; ++i) {
    inputs.add(xname(i) + "_1");
    inputs.add(xname(i) + "_2");
  }
  for (int i = 1; i <= b; ++i) inputs.add(yname(i));
  inputs.add("y");
  for (int i = 1; i <= a; ++i) outputs.add(xname(i));
  outputs.add("y");
  outputs.add("y_fail");
  outputs.add("-");

  // Block layout: entry, then 3 states per key, then exit.
  int block = 3 * a + 2;
  int n = 2 * block + b + 2;
  int auth = 2 * block;  // the y-branch state between the two blocks
  auto fail_state = [&](int i) { return 2 * block + 1 + (i - 1); };
  int sink = n - 1;
  SinkDefault m(std::move(inputs), std::move(outputs), n, 0, sink);

  auto key_exchange = [&](int base) {
    int entry = base;
    int exit = base + block - 1;
    for (int i = 1; i <= a; ++i) {
      int b1 = base + 1 + 3 * (i - 1);
      int b2 = b1 + 1;
      int b3 = b1 + 2;
      const std::string i1 = xname(i) + "_1", i2 = xname(i) + "_2", out = xname(i);
      m.edge(entry, i1, b1, out);
      m.edge(b1, i2, b2, out);
      m.edge(b2, i1, b3, out);
      m.edge(b3, i2, exit, out);
      m.edge(b2, i2, b1, out);
      m.edge(b3, i1, b2, out);
    }
    return exit;
  };

  int exit1 = key_exchange(0);
  m.edge(exit1, "y", auth, "y");
  for (int i = 1; i <= b; ++i) {
    m.edge(auth, yname(i), fail_state(i), "y_fail");
    m.edge(fail_state(i), yname(i), fail_state(i), "y_fail");
  }
  m.edge(auth, "y", block, "y");
  int exit2 = key_exchange(block);
  // Acknowledged rekey signal in the connected state; without it the
  // second exit would be behaviorally identical to the sink.
  m.edge(exit2, "y", exit2, "y");
  return m.machine;
}

MealyMachine gen_random(int n, int num_inputs, int num_outputs, std::uint64_t seed) {
  if (n < 1 || num_inputs < 1 || num_outputs < 1)
    throw std::invalid_argument("gen_random needs positive sizes");
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Alphabet inputs, outputs;
    for (int i = 0; i < num_inputs; ++i) inputs.add("i" + std::to_string(i));
    for (int o = 0; o < num_outputs; ++o) outputs.add("o" + std::to_string(o));
    MealyMachine m(std::move(inputs), std::move(outputs), n, 0);
    for (int q = 0; q < n; ++q)
      for (int i = 0; i < num_inputs; ++i)
        m.set_transition(q, i, rng.index(static_cast<std::size_t>(n)),
                         rng.index(static_cast<std::size_t>(num_outputs)));
    if (reachable_states(m).size() == static_cast<std::size_t>(n) && is_minimal(m)) return m;
  }
  throw GenerationFailed("no reachable minimal machine with " + std::to_string(n) +
                         " states after 1000 attempts");
}

MealyMachine m1() {
  Alphabet inputs({"a", "b"});
  Alphabet outputs({"1", "0"});
  MealyMachine m(std::move(inputs), std::move(outputs), 2, 0);
  m.set_transition(0, 0, 1, 0);  // A -a/1-> B
  m.set_transition(1, 0, 0, 1);  // B -a/0-> A
  m.set_transition(0, 1, 0, 1);  // A -b/0-> A
  m.set_transition(1, 1, 1, 0);  // B -b/1-> B
  return m;
}

Fixtures fixtures() {
  Alphabet coffee_in({"1", "coffee", "espresso", "tea"});

  Alphabet sul_out({"ok", "coffee", "espresso", "-"});
  MealyMachine sul(coffee_in, std::move(sul_out), 3, 0);
  auto set = [](MealyMachine& m, int q, const std::string& i, int t, const std::string& o) {
    m.set_transition(q, m.inputs().id(i), t, m.outputs().id(o));
  };
  set(sul, 0, "1", 1, "ok");
  set(sul, 1, "1", 2, "ok");
  set(sul, 2, "1", 2, "ok");
  set(sul, 0, "coffee", 0, "-");
  set(sul, 1, "coffee", 0, "coffee");
  set(sul, 2, "coffee", 1, "coffee");
  set(sul, 0, "espresso", 0, "-");
  set(sul, 1, "espresso", 1, "-");
  set(sul, 2, "espresso", 0, "espresso");
  for (int q = 0; q < 3; ++q) set(sul, q, "tea", q, "-");

  Alphabet h1_out({"ok", "coffee", "-"});
  MealyMachine h1(coffee_in, std::move(h1_out), 2, 0);
  set(h1, 0, "1", 1, "ok");
  set(h1, 1, "1", 1, "ok");
  set(h1, 0, "coffee", 0, "-");
  set(h1, 1, "coffee", 0, "coffee");
  for (int q = 0; q < 2; ++q) {
    set(h1, q, "espresso", q, "-");
    set(h1, q, "tea", q, "-");
  }

  Alphabet ssh_in({"prekex", "kexed", "preauth", "pk", "none", "pw", "auth", "openchan", "send"});
  Alphabet ssh_out({"ok", "nok", "-"});
  SinkDefault ssh(std::move(ssh_in), std::move(ssh_out), 16, 0, 15);
  ssh.edge(0, "prekex", 1, "ok");
  ssh.edge(1, "kexed", 2, "ok");
  ssh.edge(2, "preauth", 3, "ok");
  ssh.edge(3, "pk", 4, "nok");
  ssh.edge(3, "none", 5, "nok");
  ssh.edge(3, "pw", 6, "nok");
  ssh.edge(3, "auth", 7, "ok");
  ssh.edge(4, "pk", 4, "nok");
  ssh.edge(5, "none", 5, "nok");
  ssh.edge(6, "pw", 6, "nok");
  ssh.edge(6, "auth", 7, "ok");
  ssh.edge(7, "prekex", 8, "ok");
  ssh.edge(7, "openchan", 10, "ok");
  ssh.edge(8, "kexed", 9, "ok");
  ssh.edge(8, "openchan", 11, "ok");
  ssh.edge(9, "openchan", 12, "ok");
  ssh.edge(10, "send", 13, "ok");
  ssh.edge(10, "prekex", 11, "ok");
  ssh.edge(11, "kexed", 12, "ok");
  ssh.edge(11, "send", 14, "ok");
  ssh.edge(12, "send", 15, "ok");
  ssh.edge(13, "prekex", 14, "ok");
  ssh.edge(14, "kexed", 15, "ok");

  return {std::move(sul), std::move(h1), std::move(ssh.machine)};
}

}  // namespace mealy
