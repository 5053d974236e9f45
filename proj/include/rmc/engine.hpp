// engine.hpp -- the semi-algorithm driver: build T0, generate samples,
// detect incremental growth, extrapolate, check safety and preciseness,
// widen the sampling prefix on failure.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rmc/correctness.hpp"
#include "rmc/extrapolate.hpp"
#include "rmc/transducer.hpp"

namespace rmc {

struct RunConfig {
  enum class Mode { Closure, Reach };
  Mode mode = Mode::Closure;
  SamplingStrategy sampling = SamplingStrategy::linear(1);
  uint64_t max_samples = 24;
  uint64_t max_states = 250000;
  double max_seconds = 600.0;
  uint32_t sync_bound_multiplier = 2;
  bool dominance = false;
  bool nonreflexive_composition = true;
  std::string emit_dot_dir;  // empty: no dumps
};

struct IterationTrace {
  uint64_t k = 0;         // sample index (1-based)
  uint64_t exponent = 0;  // s_k
  uint32_t states = 0;    // size of the minimized sample
  uint32_t peak_states = 0;
  bool growing = false;
  bool stable = false;
  bool equivalent = false;  // head increment communication equivalent
  std::string note;
};

struct EngineResult {
  enum class Outcome { ExactClosure, SafeOverApproximation, GaveUp };
  Outcome outcome = Outcome::GaveUp;
  std::optional<Automaton> result;  // transducer automaton or reach set
  std::string gave_up_reason;
  std::vector<IterationTrace> trace;
  std::vector<CheckReport> reports;
  uint32_t peak_states = 0;
  uint32_t result_states = 0;

  std::string trace_text() const;
};

// mode Reach requires `a`; the transducer is made reflexive internally.
EngineResult run(const Transducer& t, const std::optional<Automaton>& a,
                 const RunConfig& cfg);

}  // namespace rmc
