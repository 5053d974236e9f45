// io.hpp -- the shared text automaton format (one directive per line, '#'
// comments) and DOT export.

#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "rmc/counter.hpp"
#include "rmc/increments.hpp"

namespace rmc {

using Model = std::variant<Automaton, CounterAutomaton>;

// Directives: kind dfa|nfa|weak-buchi|counter|counter-weak; arity K;
// alphabet s1 s2 ... (base labels; arity-K symbols written t1/t2/.../tK);
// dimension n (counter kinds); states N; initial i...; accepting f...;
// trans q sym q' [+c1,...,cn].
Model parse_model(std::istream& in);
Model parse_model_file(const std::string& path);

void emit(const Automaton& a, std::ostream& out);
void emit(const CounterAutomaton& ac, std::ostream& out);
void emit_file(const Model& m, const std::string& path);

std::string to_text(const Automaton& a);
std::string to_text(const CounterAutomaton& ac);

// DOT export; the decomposition, when given, colors states by part.
std::string to_dot(const Automaton& a, const GrowDecomposition* grow = nullptr);
std::string to_dot(const CounterAutomaton& ac);

}  // namespace rmc
