// detail/partition.hpp -- internal refinement primitives shared between the
// minimizers and the increment detector.

#pragma once

#include <vector>

#include "rmc/automaton.hpp"

namespace rmc::detail {

// Hopcroft partition refinement over the completion of a partial automaton
// with deterministic transitions (initial states are ignored, so disjoint
// unions are fine). Returns the class of every state; the virtual sink's
// class id may still be shared by states equivalent to it.
std::vector<uint32_t> hopcroft_refine(const Automaton& a,
                                      const std::vector<bool>& flags);

// Loeding's canonical acceptance normalization for weak Buchi automata:
// even-colored states accept. Dead states must be pruned beforehand for the
// colors to be meaningful; states with empty language keep arbitrary colors.
std::vector<bool> weak_acceptance_flags(const Automaton& a);

}  // namespace rmc::detail
