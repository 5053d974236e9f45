// weak.hpp -- weak Buchi automata: SCC analysis, weakness tests, breakpoint
// determinization, Loeding canonical minimization, flip-complementation.

#pragma once

#include <optional>

#include "rmc/automaton.hpp"
#include "rmc/errors.hpp"

namespace rmc {

// Strongly connected components with the induced partial order and
// per-component acceptance summary. Components are numbered in reverse
// topological order: transitions never go from a component to a strictly
// higher-numbered one.
struct SccDecomposition {
  std::vector<uint32_t> component;  // per state
  uint32_t num_components = 0;
  std::vector<bool> has_cycle;        // size > 1 or a self-loop
  std::vector<bool> all_accepting;    // per component
  std::vector<bool> any_accepting;    // per component
};

SccDecomposition scc_decompose(const Automaton& a);

// Every SCC uniformly accepting or uniformly nonaccepting.
bool is_weak(const Automaton& a);

// No reachable SCC contains both an accepting and a nonaccepting cycle,
// decided by removing accepting states inside each SCC and searching for a
// remaining cycle.
bool is_inherently_weak(const Automaton& a);

// Marks each SCC accepting iff it contains an accepting cycle. Sound on
// inherently weak deterministic automata.
Automaton weaken(const Automaton& a);

struct DeterminizeWeakResult {
  // When inherently_weak, a weak deterministic Buchi automaton for the same
  // omega-language. Otherwise the raw breakpoint automaton; its acceptance
  // marks are the non-breakpoint states and the co-Buchi reading applies, so
  // downstream checks must give up rather than trust the Buchi marks.
  Automaton automaton;
  bool inherently_weak;
};

// Breakpoint (subset + obligation set) determinization of a weak automaton.
DeterminizeWeakResult determinize_weak(const Automaton& a);

// Canonical minimal weak deterministic Buchi automaton: Loeding's reduction
// (acceptance normalized per SCC by the canonical coloring, then
// Hopcroft-style refinement), canonical BFS numbering as in minimize().
Automaton minimize_weak(const Automaton& a);

// Complete with a nonaccepting sink, flip acceptance, re-minimize.
Automaton complement_weak(const Automaton& a);

struct OmegaSubset {
  bool holds;
  std::optional<Lasso> counterexample;
};

// L(a) subset of L(b) for weak deterministic inputs, via intersection with
// the complement; the counterexample lasso is shortest-stem-then-shortest-loop.
OmegaSubset omega_language_subset(const Automaton& a, const Automaton& b);

// Kind dispatch: canonical_min for finite words, breakpoint determinization
// plus Loeding minimization for weak Buchi. Throws NotWeak when the weak
// determinization is not inherently weak.
Automaton canonical_form(const Automaton& a);

// Membership of the ultimately periodic word stem loop^omega, by direct
// simulation of the transition relation (works on nondeterministic input).
bool accepts_lasso(const Automaton& a, const Lasso& l);

}  // namespace rmc
