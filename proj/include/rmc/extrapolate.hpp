// extrapolate.hpp -- the extrapolation constructions: finite-word, weak
// Buchi (with a nonaccepting copy of the head increment), and their
// one-counter variants whose valuations count simulated increments.

#pragma once

#include <optional>
#include <vector>

#include "rmc/counter.hpp"
#include "rmc/increments.hpp"

namespace rmc {

struct AddedEdge {
  StateId from;
  SymbolId sym;
  StateId to;
  uint32_t simulated;  // number of increments the edge stands for
};

// Finite-word rule: a transition from the head or head increment into
// increment I_j spawns copies into every earlier increment, loops into I_0
// included. Counter labels carry j-l; original transitions carry 0.
CounterAutomaton extrapolate_finite_counter(const Automaton& origin,
                                            const GrowDecomposition& grow,
                                            std::vector<AddedEdge>* log = nullptr);

Automaton extrapolate_finite(const Automaton& origin,
                             const GrowDecomposition& grow);

// Weak rule: I_0 is duplicated into a nonaccepting copy and the loop edges
// land there, so every newly created cycle is nonaccepting; the copy also
// carries the jump edges out (the counter construction's full rule set).
CounterAutomaton extrapolate_weak_counter(const Automaton& origin,
                                          const GrowDecomposition& grow,
                                          std::vector<AddedEdge>* log = nullptr);

Automaton extrapolate_weak(const Automaton& origin,
                           const GrowDecomposition& grow);

// Everything the correctness checks need, built once.
struct Extrapolation {
  Automaton origin;
  GrowDecomposition grow;
  CounterAutomaton counted;     // raw graph, dimension 1
  Automaton plain_raw;          // counterless(counted)
  Automaton plain_min;          // canonical form of plain_raw when weak_ok
  bool weak_ok = true;          // weak mode: canonicalization stayed weak
  CounterAutomaton zero_layer;  // counter_zero(origin)
  std::vector<AddedEdge> added;
};

Extrapolation make_extrapolation(const Automaton& origin,
                                 const GrowDecomposition& grow);

}  // namespace rmc
