#pragma once

#include <cstdint>

#include "mealy/machine.hpp"

namespace mealy {

// Scalable benchmark family: an x-spine of a states, a branch over a rows
// of a-1 states each consuming rotated spine inputs, a return state z, and
// b irrelevant inputs that always lead to the absorbing sink.
// n = a + a*(a-1) + 2 = a^2 + 2.
MealyMachine gen_asml(int a, int b);

// Handshake spine of b states reading y_1..y_{b-1}, then an ASML-style
// x-branch block over inputs x_1..x_a ending in z, with z returning to the
// last spine state on x_0. n = b + a*(a-1) + 2.
MealyMachine gen_tcp(int a, int b);

// Two key-exchange blocks over per-key inputs x_{i,1}, x_{i,2}, joined by
// an authentication state with b failure states. n = 2*(3a+2) + b + 2.
MealyMachine gen_ssh(int a, int b);

// Uniformly random complete machine, regenerated until it is reachable
// and minimal with exactly n states. Deterministic per seed.
MealyMachine gen_random(int n, int num_inputs, int num_outputs, std::uint64_t seed);

struct Fixtures {
  MealyMachine coffee_sul;
  MealyMachine coffee_h1;
  MealyMachine openssh;
};

Fixtures fixtures();

// Two-state toy machine used across the test suites.
MealyMachine m1();

}  // namespace mealy
