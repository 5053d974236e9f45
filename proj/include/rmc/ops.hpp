// ops.hpp -- core operations on finite-word automata: determinization,
// canonical minimization, booleans, emptiness, products, projection.

#pragma once

#include <functional>
#include <optional>

#include "rmc/automaton.hpp"
#include "rmc/errors.hpp"

namespace rmc {

enum class BoolOp { Union, Intersection, Difference };

// Hook applied to every subset generated during determinization; used by the
// dominance heuristic to drop dominated member states.
using SubsetReducer = std::function<void(std::vector<StateId>&)>;

// Subset construction. Only reachable subsets are materialized and the empty
// subset is never created, so the result is a partial DFA.
Automaton determinize(const Automaton& a, const SubsetReducer& reduce = {});

// Canonical minimal partial DFA: unreachable and dead states removed,
// Myhill-Nerode classes merged by Hopcroft's procedure, states renumbered in
// BFS order with symbols visited in alphabet order. Language-equal
// deterministic inputs yield graph-identical outputs.
Automaton minimize(const Automaton& a);

// determinize + minimize, accepting nondeterministic finite-word input.
Automaton canonical_min(const Automaton& a);

// Restriction to reachable states that accept a nonempty language.
Automaton prune(const Automaton& a);

Automaton boolean(BoolOp op, const Automaton& a, const Automaton& b);

// Complete with a sink, flip acceptance, minimize.
Automaton complement(const Automaton& a);

struct Emptiness {
  bool empty;
  std::optional<Word> word;    // finite-word witness
  std::optional<Lasso> lasso;  // Buchi witness
};

Emptiness is_empty(const Automaton& a);

// Compares canonical minimal forms for exact graph equality. Dispatches on
// kind: Hopcroft for finite words, Loeding for weak deterministic Buchi.
bool language_equal(const Automaton& a, const Automaton& b);

// Exact graph equality of two automata (states, initial, accepting,
// transitions); meaningful on canonical forms.
bool graph_equal(const Automaton& a, const Automaton& b);

// Accepts { u x v | u in L(a), v in L(b), |u| = |v| }, over the track
// concatenation of the two alphabets. Result is a pruned product, generally
// nondeterministic.
Automaton synchronous_product(const Automaton& a, const Automaton& b);

// Symbol relabeling dropping the given track (0-based). Result generally
// nondeterministic; callers re-determinize.
Automaton project(const Automaton& a, int track);

// The unique bijection between two deterministic canonically numbered
// automata whose labeled graphs are identical up to renumbering, or nullopt.
std::optional<StateMap> find_isomorphism(const Automaton& a,
                                         const Automaton& b);

// NFA membership by direct simulation of the transition relation.
bool accepts(const Automaton& a, const Word& w);

// Reachability of each state from the initial set.
std::vector<bool> reachable_states(const Automaton& a);

// States whose accepted language is nonempty (kind-aware).
std::vector<bool> live_states(const Automaton& a);

// Disjoint union, canonicalized per kind. Throws NotWeak when a weak union
// cannot be determinized back into weak deterministic form.
Automaton union_canonical(const Automaton& a, const Automaton& b);

// Universal automaton for the given alphabet (Sigma* or Sigma^omega).
Automaton universal(const Alphabet& alphabet, Kind kind);

// Automaton accepting nothing.
Automaton empty_automaton(const Alphabet& alphabet, Kind kind);

}  // namespace rmc
