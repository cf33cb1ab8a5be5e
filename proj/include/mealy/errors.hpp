#pragma once

#include <stdexcept>
#include <string>

namespace mealy {

struct AlphabetMismatch : std::runtime_error {
  explicit AlphabetMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct InitialIsSink : std::runtime_error {
  InitialIsSink() : std::runtime_error("initial state is a sink") {}
};

struct NotACounterexample : std::runtime_error {
  explicit NotACounterexample(const std::string& what) : std::runtime_error(what) {}
};

struct GenerationFailed : std::runtime_error {
  explicit GenerationFailed(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& reason)
      : std::runtime_error("parse error at line " + std::to_string(line) + ": " + reason),
        line(line) {}
  int line;
};

struct IncompleteMachine : std::runtime_error {
  IncompleteMachine(const std::string& state, const std::string& input)
      : std::runtime_error("missing transition from state '" + state + "' on input '" + input +
                           "'"),
        state(state),
        input(input) {}
  std::string state;
  std::string input;
};

}  // namespace mealy
