// increments.hpp -- detecting the finite-state increment between successive
// minimal automata and decomposing the last element of an incrementally
// growing sequence into head, ordered isomorphic increments, and tail end.

#pragma once

#include <optional>
#include <vector>

#include "rmc/automaton.hpp"
#include "rmc/errors.hpp"

namespace rmc {

// Pairs of states accepting identical languages, one-to-one on canonical
// minimal inputs. Computed by partitioning the joint automaton.
StateMap forward_equivalence(const Automaton& a, const Automaton& b);

// Pairs of states reached by identical word sets from the initial states,
// with matching acceptance flags so the linked parts are isomorphic.
StateMap backward_equivalence(const Automaton& a, const Automaton& b);

// Myhill-Nerode classes of every state (kind-aware; weak Buchi states are
// refined after acceptance normalization). Classes are comparable between
// states of the same automaton only.
std::vector<uint32_t> language_partition(const Automaton& a);

struct IncrementStep {
  StateMap ef;               // forward equivalence a -> b
  StateMap eb;               // backward equivalence a -> b
  std::vector<StateId> q_f;  // states of a covered by ef
  std::vector<StateId> q_b;  // remaining states of a (covered by eb)
  std::vector<StateId> head;       // of b
  std::vector<StateId> increment;  // head increment of b
  std::vector<StateId> tail;       // of b
};

// Checks that ef and eb cover every state of a and builds the partition of b
// into head, head increment and tail. nullopt when b is not incrementally
// larger than a.
std::optional<IncrementStep> is_incrementally_larger(const Automaton& a,
                                                     const Automaton& b);

struct GrowDecomposition {
  std::vector<StateId> head;
  std::vector<std::vector<StateId>> increments;  // I_0 .. I_{k-1}
  std::vector<StateId> tail_end;
  // increment_iso[l] maps I_0 to I_l; increment_iso[0] is the identity.
  std::vector<StateMap> increment_iso;
  uint32_t diameter = 0;  // largest forward jump from head or I_0

  size_t num_increments() const { return increments.size(); }

  // -1 head, -2 tail end, l >= 0 increment index
  std::vector<int32_t> part_of;

  int32_t part(StateId q) const { return part_of[q]; }
};

struct DecomposeResult {
  std::optional<GrowDecomposition> grow;       // of the last automaton
  std::optional<GrowDecomposition> grow_prev;  // of the second-to-last
  StateMap head_iso;  // prev head -> last head (backward equivalence)
  StateMap tail_iso;  // prev tail end -> last tail end (forward equivalence)
  // prev increment I_x -> last increment I_x, per index
  std::vector<StateMap> same_index_iso;
  StateMap step_ef;  // full forward equivalence of the last pair
  StateMap step_eb;  // full backward equivalence of the last pair
  size_t failed_step = SIZE_MAX;  // index of the offending pair when !grow
};

// Decomposes the last automaton of a sequence of >= 3 canonical minimal
// automata. Every consecutive pair must be incrementally larger and the head
// increments must propagate backward, otherwise failed_step names the pair.
DecomposeResult decompose(const std::vector<Automaton>& seq);

// Case analysis of the four transition conditions between increments alpha
// and beta of the last automaton.
bool communication_equivalent(const Automaton& last,
                              const GrowDecomposition& grow, size_t alpha,
                              size_t beta);

// Head-part stability between the two last automata of the sequence.
bool communication_stable(const Automaton& prev, const Automaton& last,
                          const DecomposeResult& dec);

// Communication equivalence of the head increments of the two last automata
// (the cross-automaton form): the increment added last must behave like the
// one added before it, with jumps matched index for index.
bool head_increment_equivalent(const Automaton& prev, const Automaton& last,
                               const DecomposeResult& dec);

// Stable text dump of a decomposition (part assignment per state).
std::string dump_decomposition(const GrowDecomposition& grow);

}  // namespace rmc
