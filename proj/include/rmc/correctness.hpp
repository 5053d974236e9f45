// correctness.hpp -- safety and preciseness criteria for the two regular
// reachability problems. Safety criteria can fail with a replayable witness;
// the preciseness criteria are sufficient only and report Holds or
// Inconclusive, never a refutation.

#pragma once

#include <optional>
#include <string>

#include "rmc/extrapolate.hpp"
#include "rmc/transducer.hpp"

namespace rmc {

enum class Verdict { Holds, Fails, Inconclusive };

enum class InconclusiveReason {
  None,
  NotInherentlyWeak,
  ExtendedLanguageGap,
  SynchronizationLoss,
};

struct CheckReport {
  Verdict verdict = Verdict::Inconclusive;
  InconclusiveReason reason = InconclusiveReason::None;
  std::optional<Word> witness_word;
  std::optional<Lasso> witness_lasso;
  double seconds = 0.0;
  uint32_t peak_states = 0;
  uint32_t sync_bound = 0;  // M, preciseness only
  std::string detail;

  // Line-oriented serialization (verdict, witness, sizes, M, timing).
  std::string to_text(const Alphabet* alphabet = nullptr) const;
};

// Holds iff L(t_star o t_star) is included in L(t_star).
CheckReport check_safety_closure(const Transducer& t_star,
                                 bool use_dominance = false);

// Holds iff L(t(a_star)) is included in L(a_star).
CheckReport check_safety_reach(const Transducer& t, const Automaton& a_star,
                               bool use_dominance = false);

// Counter pipeline for the transducer problem: the counted extrapolation
// composed with itself, intersected with a third copy, synchronized with
// c1 > {c2,c3} under bound M, projected, unioned with the zero layer, and
// compared to the counted extrapolation by extended language.
CheckReport check_preciseness_closure(const Extrapolation& ext, uint32_t M);

// Reach variant: counter image by t^k instead of the composition; k is the
// constant number of applications separating successive samples.
CheckReport check_preciseness_reach(const Transducer& t,
                                    const Extrapolation& ext, uint32_t M,
                                    uint64_t k);

}  // namespace rmc
