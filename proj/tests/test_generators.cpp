#include "doctest.h"
#include "helpers.hpp"
#include "mealy/experts.hpp"
#include "mealy/generators.hpp"

using namespace mealy;
using test::w;

namespace {

void check_family_shape(const MealyMachine& m, int expected_states) {
  CHECK(m.num_states() == expected_states);
  CHECK(m.complete());
  CHECK(reachable_states(m).size() == static_cast<std::size_t>(m.num_states()));
  CHECK(is_minimal(m));
  CHECK(sinks(m).size() == 1);
}

}  // namespace

TEST_CASE("gen_asml shape") {
  MealyMachine m = gen_asml(3, 5);
  CHECK(m.inputs().size() == 8);
  check_family_shape(m, 11);  // a^2 + 2

  for (int a = 2; a <= 4; ++a)
    for (int b : {0, 3}) check_family_shape(gen_asml(a, b), a * a + 2);

  // b = 0: no y inputs at all, the sink is reached only via wrong x order
  MealyMachine m0 = gen_asml(3, 0);
  CHECK(m0.inputs().size() == 3);
  CHECK(sinks(m0).size() == 1);
}

TEST_CASE("gen_asml active inputs exclude the irrelevant block") {
  for (int b : {1, 5}) {
    MealyMachine m = gen_asml(3, b);
    auto ai = active_inputs(m);
    CHECK(ai.size() == 3);
    for (int i : ai) CHECK(m.inputs().name(i)[0] == 'x');
  }
}

TEST_CASE("gen_tcp shape") {
  MealyMachine m = gen_tcp(3, 5);
  CHECK(m.inputs().size() == 9);  // x_0..x_3 plus y_1..y_5
  check_family_shape(m, 13);      // b + a(a-1) + 2

  for (int a = 2; a <= 4; ++a)
    for (int b : {1, 4}) check_family_shape(gen_tcp(a, b), b + a * (a - 1) + 2);

  // minimal handshake: branch immediately
  MealyMachine m1b = gen_tcp(3, 1);
  CHECK(m1b.num_states() == 1 + 6 + 2);
}

TEST_CASE("gen_tcp yields no y inputs in post-spine futures") {
  MealyMachine m = gen_tcp(3, 5);
  int n = m.num_states();
  TestSuite cover = state_cover(m);
  auto mask = sink_mask(m);
  int spine_end = 4;  // p_b has index b - 1
  for (const Word& v : cover) {
    int q = run(m, v).state;
    if (q <= spine_end || mask[static_cast<std::size_t>(q)]) continue;  // spine or sink
    for (int i : future_alphabet(m, v, n)) CHECK(m.inputs().name(i)[0] == 'x');
  }
}

TEST_CASE("gen_ssh shape") {
  MealyMachine m = gen_ssh(3, 5);
  CHECK(m.inputs().size() == 12);  // 2a + b + 1
  check_family_shape(m, 2 * 11 + 5 + 2);

  MealyMachine small = gen_ssh(2, 0);
  CHECK(small.inputs().size() == 5);
  check_family_shape(small, 2 * 8 + 2);
}

TEST_CASE("gen_ssh key inputs concentrate in the key-exchange communities") {
  MealyMachine m = gen_ssh(3, 2);
  auto parts = newman(state_graph(active(m).machine));
  auto subs = component_alphabets(m, parts);
  // every key pair {x_i_1, x_i_2} sits inside exactly two communities,
  // one per key-exchange block
  for (int key = 1; key <= 3; ++key) {
    int first = m.inputs().id("x" + std::to_string(key) + "_1");
    int second = m.inputs().id("x" + std::to_string(key) + "_2");
    int both = 0;
    for (const auto& sub : subs) {
      bool has_first = std::count(sub.begin(), sub.end(), first) > 0;
      bool has_second = std::count(sub.begin(), sub.end(), second) > 0;
      CHECK(has_first == has_second);
      if (has_first) ++both;
    }
    CHECK(both == 2);
  }
  // the authentication inputs cluster together as well
  bool auth_cluster = false;
  for (const auto& sub : subs) {
    std::vector<std::string> names;
    for (int i : sub) names.push_back(m.inputs().name(i));
    if (names == std::vector<std::string>{"y1", "y2", "y"}) auth_cluster = true;
  }
  CHECK(auth_cluster);
}

TEST_CASE("gen_random") {
  MealyMachine m = gen_random(20, 11, 5, 42);
  CHECK(m.num_states() == 20);
  CHECK(is_minimal(m));
  CHECK(reachable_states(m).size() == 20);

  MealyMachine again = gen_random(20, 11, 5, 42);
  CHECK(isomorphic(m, again));
  CHECK(!equivalence(m, again));

  MealyMachine single = gen_random(1, 2, 2, 7);
  CHECK(single.num_states() == 1);
}

TEST_CASE("fixtures") {
  Fixtures f = fixtures();

  CHECK(equivalence(f.coffee_sul, f.coffee_h1).has_value());
  TestSuite probe({w(f.coffee_sul, "1 1 coffee coffee")});
  CHECK(agree_on(f.coffee_sul, f.coffee_h1, probe).has_value());

  CHECK(f.openssh.num_states() == 16);
  CHECK(sinks(f.openssh) == std::vector<int>{15});
  CHECK(f.openssh.inputs().size() == 9);
  CHECK(is_minimal(f.openssh));

  CHECK(f.coffee_sul.num_states() == 3);
  CHECK(is_minimal(f.coffee_sul));
  CHECK(is_minimal(f.coffee_h1));
}
