// insertion.hpp -- explicit materialization of the i-th element of an
// extrapolated sequence: i fresh isomorphic increments are physically
// inserted between the head and the head increment, wired by the
// communication-equivalence pattern. This is the ground truth the
// extrapolation constructions are tested against.

#pragma once

#include "rmc/increments.hpp"

namespace rmc {

// Builds the automaton with i extra increments. i = 0 returns the origin
// unchanged (up to state order).
Automaton explicit_insertion(const Automaton& origin,
                             const GrowDecomposition& grow, uint32_t extra);

}  // namespace rmc
