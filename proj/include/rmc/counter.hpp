// counter.hpp -- counter-word automata: transitions carry vectors of natural
// increments that annotate accepted words with valuations. Used by the
// preciseness checks.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rmc/automaton.hpp"
#include "rmc/errors.hpp"
#include "rmc/transducer.hpp"

namespace rmc {

using CounterVec = std::vector<uint32_t>;

struct CounterTrans {
  StateId from;
  SymbolId sym;
  StateId to;
  CounterVec inc;

  friend bool operator==(const CounterTrans& a, const CounterTrans& b) {
    return a.from == b.from && a.sym == b.sym && a.to == b.to && a.inc == b.inc;
  }
  friend bool operator<(const CounterTrans& a, const CounterTrans& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.sym != b.sym) return a.sym < b.sym;
    if (a.to != b.to) return a.to < b.to;
    return a.inc < b.inc;
  }
};

class CounterAutomaton {
 public:
  CounterAutomaton(int dimension, Alphabet base, Kind kind, uint32_t num_states,
                   std::vector<StateId> initial, std::vector<bool> accepting,
                   std::vector<CounterTrans> trans);

  int dimension() const { return dimension_; }
  Kind kind() const { return kind_; }
  const Alphabet& base() const { return base_; }
  uint32_t num_states() const { return num_states_; }
  const std::vector<StateId>& initial() const { return initial_; }
  bool accepting(StateId q) const { return accepting_[q]; }
  const std::vector<bool>& accepting() const { return accepting_; }
  const std::vector<CounterTrans>& transitions() const { return trans_; }

 private:
  int dimension_;
  Alphabet base_;
  Kind kind_;
  uint32_t num_states_;
  std::vector<StateId> initial_;
  std::vector<bool> accepting_;
  std::vector<CounterTrans> trans_;
};

// Smallest d bounding every increment entry.
uint32_t max_increment(const CounterAutomaton& ac);

// Plain automaton obtained by dropping the increment vectors.
Automaton counterless(const CounterAutomaton& ac);

// The counter automaton viewed as a plain automaton over base x [0,d]^n.
// d must be at least max_increment(ac); passing a common d makes extended
// automata of different counter automata comparable.
Automaton extended(const CounterAutomaton& ac, uint32_t d);

// Inverse of extended(): the last n tracks are read back as increments.
CounterAutomaton from_extended(const Automaton& a, int n);

// Every transition carries the one-dimensional increment (0).
CounterAutomaton counter_zero(const Automaton& a);

// Product pairing transitions on the base symbol; increment vectors are
// concatenated (a1's counters first). Dimension n1+n2.
CounterAutomaton counter_intersection(const CounterAutomaton& a1,
                                      const CounterAutomaton& a2);

// Counter transducer composition: inner applied first, outer second, middle
// letters matched; inner's counters come first in the result.
CounterAutomaton counter_composition(const CounterAutomaton& outer,
                                     const CounterAutomaton& inner);

// Image of the counter automaton under a plain transducer; dimension
// unchanged.
CounterAutomaton counter_image(const Transducer& t, const CounterAutomaton& ac);

// Drops counter i (0-based) from every increment vector.
CounterAutomaton counter_project(const CounterAutomaton& ac, int i);

// Iterated projection; indices refer to the original dimensions.
CounterAutomaton counter_project_set(const CounterAutomaton& ac,
                                     std::vector<int> indices);

// The O(M) counter machine: a counter automaton over the given base with
// dimension n whose extended language contains, for every word, exactly the
// increment sequences that keep counters ci and cj M-synchronized and end
// with v(ci) > v(cj), plus the runs where the two counters always move
// together (accepted through the initial state). 3M states.
CounterAutomaton universal_synchronized(const Alphabet& base, Kind kind, int n,
                                        uint32_t d, int ci, int cj, uint32_t M);

// Extended intersection of ac with one synchronization machine per j in
// others, keeping only runs with c_i > c_j under the M bound. The result's
// language and counter language are subsets of the exact restriction; run-
// boundedness is preserved.
CounterAutomaton restrict_greater(const CounterAutomaton& ac, int i,
                                  const std::vector<int>& others, uint32_t M);

// Union on the extended automata, relabeled back.
CounterAutomaton counter_union_extended(const CounterAutomaton& a1,
                                        const CounterAutomaton& a2);

struct ExtendedEqual {
  bool holds;
  std::string reason;  // set when !holds
};

// Sufficient criterion: equal extended languages imply equal counter
// languages. A gap is only Inconclusive, never a refutation.
ExtendedEqual extended_equal(const CounterAutomaton& a1,
                             const CounterAutomaton& a2);

// Every transition inside an all-accepting SCC carries the zero vector, so
// every accepting run has a finite valuation.
bool is_run_bounded(const CounterAutomaton& ac);

// Canonical minimization of the extended automaton, relabeled back. Both
// the extended and the counter language are preserved exactly (the counter
// language is a function of the extended one); only run multiplicity
// changes. Weak automata that lose inherent weakness under determinization
// are returned unminimized.
CounterAutomaton minimize_extended(const CounterAutomaton& ac);

}  // namespace rmc
