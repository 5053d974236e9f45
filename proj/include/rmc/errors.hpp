// errors.hpp

#pragma once

#include <stdexcept>
#include <string>

namespace rmc {

struct AlphabetMismatch : std::invalid_argument {
  AlphabetMismatch() : std::invalid_argument("alphabet mismatch") {}
};

struct BadTrackIndex : std::out_of_range {
  BadTrackIndex() : std::out_of_range("bad track index") {}
};

struct BadCounterIndex : std::out_of_range {
  BadCounterIndex() : std::out_of_range("bad counter index") {}
};

struct DimensionMismatch : std::invalid_argument {
  DimensionMismatch() : std::invalid_argument("counter dimension mismatch") {}
};

struct NotDeterministic : std::invalid_argument {
  NotDeterministic() : std::invalid_argument("automaton is not deterministic") {}
};

struct NotWeak : std::invalid_argument {
  NotWeak() : std::invalid_argument("automaton is not weak") {}
};

struct NotCanonical : std::invalid_argument {
  NotCanonical() : std::invalid_argument("automaton is not in canonical minimal form") {}
};

struct MalformedExtendedSymbol : std::invalid_argument {
  MalformedExtendedSymbol()
      : std::invalid_argument("malformed extended-alphabet symbol") {}
};

struct TooFewIncrements : std::invalid_argument {
  TooFewIncrements()
      : std::invalid_argument("decomposition has too few increments") {}
};

struct NotGrowing : std::runtime_error {
  explicit NotGrowing(size_t step)
      : std::runtime_error("sequence is not incrementally growing at step " +
                           std::to_string(step)),
        step_index(step) {}
  size_t step_index;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_number(line) {}
  int line_number;
};

}  // namespace rmc
