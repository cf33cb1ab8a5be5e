#pragma once

#include <iosfwd>
#include <string>

#include "mealy/machine.hpp"

namespace mealy {

// Restricted DOT dialect:
//   digraph <id> { __start0 -> <state>; (<state> -> <state> [label="<in>/<out>"];)* }
// The __start0 edge comes first and fixes the initial state. Identifiers
// are bare alphanumerics (underscores allowed) or double-quoted strings.
// Every (state, input) pair must occur exactly once.
MealyMachine parse_dot(const std::string& text);
MealyMachine parse_dot_file(const std::string& path);

std::string write_dot(const MealyMachine& m);
void write_dot_file(const MealyMachine& m, const std::string& path);

}  // namespace mealy
