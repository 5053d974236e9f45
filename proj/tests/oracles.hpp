// oracles.hpp -- brute-force reference implementations the library is tested
// against. Everything here works directly on the transition relation and
// never calls the code paths it checks.

#pragma once

#include <random>
#include <set>
#include <vector>

#include "rmc/automaton.hpp"
#include "rmc/counter.hpp"
#include "rmc/transducer.hpp"

namespace rmc::test {

using Rng = std::mt19937_64;

std::vector<Word> all_words(size_t alphabet_size, size_t max_len);

// Accepted words of length <= max_len by direct subset simulation.
std::set<Word> enumerate_language(const Automaton& a, size_t max_len);

// Moore partition-refinement minimizer (reference for Hopcroft).
Automaton moore_minimize(const Automaton& dfa);

// u v^omega membership for a deterministic Buchi automaton by running the
// stem and detecting the (state, position) cycle.
bool lasso_member_det(const Automaton& a, const Word& u, const Word& v);

Word join_pair(const Alphabet& pair_alpha, const Word& w1, const Word& w2);
std::pair<Word, Word> split_pair(const Alphabet& pair_alpha, const Word& w);

// The relation of a transducer restricted to words of length <= max_len.
std::set<std::pair<Word, Word>> enumerate_relation(const Transducer& t,
                                                   size_t max_len);

std::set<std::pair<Word, Word>> compose_relations(
    const std::set<std::pair<Word, Word>>& first,
    const std::set<std::pair<Word, Word>>& second);

std::set<Word> image_of(const std::set<std::pair<Word, Word>>& rel,
                        const std::set<Word>& words);

// All (word, valuation) pairs realized by accepting runs on words of length
// <= max_len (finite-word counter automata).
std::set<std::pair<Word, CounterVec>> counter_samples(
    const CounterAutomaton& ac, size_t max_len);

struct LassoSample {
  Word stem;
  Word loop;
  CounterVec val;
  friend bool operator<(const LassoSample& a, const LassoSample& b) {
    if (a.stem != b.stem) return a.stem < b.stem;
    if (a.loop != b.loop) return a.loop < b.loop;
    return a.val < b.val;
  }
};

// Accepting lassos with |stem| + |loop| <= bound whose loop carries only
// zero increments (run-bounded weak counter automata).
std::set<LassoSample> counter_lasso_samples(const CounterAutomaton& ac,
                                            size_t bound);

// Random generators; all tests seed explicitly so failures replay.
Automaton random_automaton(Rng& rng, uint32_t max_states,
                           size_t alphabet_size, Kind kind);
Automaton random_weak_automaton(Rng& rng, uint32_t max_states,
                                size_t alphabet_size);
Transducer random_transducer(Rng& rng, uint32_t max_states, size_t base_size);
CounterAutomaton random_counter_automaton(Rng& rng, uint32_t max_states,
                                          size_t alphabet_size, int dimension,
                                          uint32_t max_inc);

}  // namespace rmc::test
