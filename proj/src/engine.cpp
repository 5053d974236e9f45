#include "rmc/engine.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rmc/increments.hpp"
#include "rmc/io.hpp"
#include "rmc/log.hpp"
#include "rmc/ops.hpp"
#include "rmc/weak.hpp"

namespace rmc {

namespace {

using Clock = std::chrono::steady_clock;

struct SampleChain {
  // current sample as a transducer (closure mode) or reach set
  std::optional<Transducer> closure;
  std::optional<Automaton> reach;
  uint32_t peak = 0;

  uint32_t states() const {
    return closure ? closure->num_states() : reach->num_states();
  }
  const Automaton& automaton() const {
    return closure ? closure->automaton() : *reach;
  }
};

}  // namespace

std::string EngineResult::trace_text() const {
  std::ostringstream out;
  for (const IterationTrace& it : trace) {
    out << "sample " << it.k << " exponent " << it.exponent << " states "
        << it.states << " peak " << it.peak_states;
    if (it.growing) out << " growing";
    if (it.stable) out << " stable";
    if (it.equivalent) out << " equivalent";
    if (!it.note.empty()) out << " note " << it.note;
    out << '\n';
  }
  return out.str();
}

EngineResult run(const Transducer& t, const std::optional<Automaton>& a,
                 const RunConfig& cfg) {
  EngineResult res;
  const auto started = Clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(Clock::now() - started).count();
  };
  auto give_up = [&](const std::string& why) {
    res.outcome = EngineResult::Outcome::GaveUp;
    res.gave_up_reason = why;
    return res;
  };

  if ((cfg.mode == RunConfig::Mode::Reach) != a.has_value())
    throw std::invalid_argument("initial set is required exactly in reach mode");
  if (cfg.sampling.type == SamplingStrategy::Type::Exponential &&
      cfg.sampling.base < 2)
    throw std::invalid_argument("exponential sampling needs base >= 2");

  // canonical reflexive transducer
  Transducer t_min(t.kind() == Kind::FiniteWord
                       ? canonical_min(t.automaton())
                       : canonical_form(t.automaton()));
  Transducer t0 = reflexive(t_min);
  RMC_LOG_INFO("T0 has " << t0.num_states() << " states");
  std::optional<Automaton> init;
  if (a) {
    init = a->kind() == Kind::FiniteWord ? canonical_min(*a)
                                         : canonical_form(*a);
  }

  auto track_peak = [&](uint32_t p) { res.peak_states = std::max(res.peak_states, p); };

  // step transducers for advancing the chain
  // linear a: next = sample o (T0^a); exponential a: next = extend a-1 times
  // by the running plain power
  Transducer step0 = t0;   // T0^a for linear mode
  Transducer stepp = t_min;  // T^a for linear mode
  if (cfg.sampling.type == SamplingStrategy::Type::Linear &&
      cfg.sampling.base > 1) {
    PowerResult p0 = power(t0, t_min, cfg.sampling.base,
                           cfg.nonreflexive_composition);
    step0 = p0.transducer;
    track_peak(p0.peak_states);
    PowerResult pp = power(t_min, t_min, cfg.sampling.base, false);
    stepp = pp.transducer;
    track_peak(pp.peak_states);
  }

  SampleChain chain;
  Transducer cur0 = step0;   // T0^{s_1}
  Transducer curp = stepp;   // T^{s_1}
  if (cfg.sampling.type == SamplingStrategy::Type::Exponential) {
    PowerResult p0 =
        power(t0, t_min, cfg.sampling.base, cfg.nonreflexive_composition);
    cur0 = p0.transducer;
    track_peak(p0.peak_states);
    PowerResult pp = power(t_min, t_min, cfg.sampling.base, false);
    curp = pp.transducer;
    track_peak(pp.peak_states);
  }
  if (cfg.mode == RunConfig::Mode::Closure) {
    chain.closure = cur0;
  } else {
    ImageResult img = image(cur0, *init);
    if (!img.weak_ok) return give_up("image not inherently weak");
    track_peak(img.peak_states);
    chain.reach = img.automaton;
  }

  // The sampling sequence under consideration. On a check failure the
  // sequence is extended by the next sample rather than slid, so the
  // decomposition accumulates increments (and with them the jump structure
  // the extrapolation needs). When growth breaks, the run restarts at the
  // offending sample.
  std::vector<Automaton> window;
  window.push_back(chain.automaton());
  constexpr size_t kMaxWindow = 10;

  uint32_t sync_mult = cfg.sync_bound_multiplier;

  auto emit_dot_maybe = [&](const Automaton& m, uint64_t k) {
    if (cfg.emit_dot_dir.empty()) return;
    std::filesystem::create_directories(cfg.emit_dot_dir);
    std::ofstream out(cfg.emit_dot_dir + "/sample-" + std::to_string(k) +
                      ".dot");
    out << to_dot(m);
  };

  for (uint64_t k = 1;; ++k) {
    uint64_t exponent = cfg.sampling.point(k);
    IterationTrace it;
    it.k = k;
    it.exponent = exponent;
    it.states = chain.states();
    it.peak_states = res.peak_states;
    emit_dot_maybe(chain.automaton(), k);

    if (chain.states() > cfg.max_states) {
      res.trace.push_back(it);
      return give_up("state cap exceeded");
    }
    if (elapsed() > cfg.max_seconds) {
      res.trace.push_back(it);
      return give_up("time cap exceeded");
    }

    if (window.size() >= 2 &&
        graph_equal(window.back(), window[window.size() - 2])) {
      // the sequence reached a fixpoint: the sample is a genuine power (or
      // image), so it is the exact limit; safety holds by the congruence
      it.note = "fixpoint";
      res.outcome = EngineResult::Outcome::ExactClosure;
      res.result = window.back();
      res.result_states = window.back().num_states();
      res.trace.push_back(it);
      return res;
    }

    while (window.size() >= 3) {
      DecomposeResult dec = decompose(window);
      if (!dec.grow) {
        // restart the run after the offending pair
        it.note = "not-growing-at-" + std::to_string(dec.failed_step);
        window.erase(window.begin(),
                     window.begin() +
                         static_cast<std::ptrdiff_t>(dec.failed_step + 1));
        continue;
      }
      {
        it.growing = true;
        it.stable =
            communication_stable(window[window.size() - 2], window.back(), dec);
        it.equivalent = head_increment_equivalent(window[window.size() - 2],
                                                  window.back(), dec);
        if (it.stable && it.equivalent) {
          Extrapolation ext = make_extrapolation(window.back(), *dec.grow);
          if (!ext.weak_ok) {
            it.note = "extrapolation-not-weak";
            CheckReport rep;
            rep.verdict = Verdict::Inconclusive;
            rep.reason = InconclusiveReason::NotInherentlyWeak;
            rep.detail = "extrapolation not weak-determinizable";
            res.reports.push_back(rep);
          } else {
            RMC_LOG_INFO("extrapolating at sample " << k << " ("
                          << ext.plain_min.num_states() << " states)");
            CheckReport safety =
                cfg.mode == RunConfig::Mode::Closure
                    ? check_safety_closure(Transducer(ext.plain_min),
                                           cfg.dominance)
                    : check_safety_reach(t0, ext.plain_min, cfg.dominance);
            track_peak(safety.peak_states);
            res.reports.push_back(safety);
            if (safety.verdict == Verdict::Holds) {
              bool preciseness_applicable =
                  cfg.mode == RunConfig::Mode::Closure ||
                  cfg.sampling.type == SamplingStrategy::Type::Linear;
              CheckReport precise;
              if (preciseness_applicable) {
                uint32_t d = max_increment(ext.counted);
                uint32_t M = std::max<uint32_t>(1, sync_mult * d);
                precise =
                    cfg.mode == RunConfig::Mode::Closure
                        ? check_preciseness_closure(ext, M)
                        : check_preciseness_reach(t0, ext, M,
                                                  cfg.sampling.base);
                if (precise.verdict == Verdict::Inconclusive &&
                    precise.reason !=
                        InconclusiveReason::NotInherentlyWeak &&
                    precise.detail.find("cap") == std::string::npos) {
                  // synchronization loss is the cheapest failure to rule
                  // out: double the bound once before widening the prefix
                  RMC_LOG_INFO("preciseness inconclusive at M=" << M
                                << ", retrying with doubled bound");
                  uint32_t M2 = std::max<uint32_t>(1, 2 * sync_mult * d);
                  CheckReport retry =
                      cfg.mode == RunConfig::Mode::Closure
                          ? check_preciseness_closure(ext, M2)
                          : check_preciseness_reach(t0, ext, M2,
                                                    cfg.sampling.base);
                  res.reports.push_back(precise);
                  precise = retry;
                }
                res.reports.push_back(precise);
              } else {
                precise.verdict = Verdict::Inconclusive;
                precise.reason = InconclusiveReason::None;
                precise.detail =
                    "no constant application count for this sampling";
                res.reports.push_back(precise);
              }
              if (precise.verdict == Verdict::Holds) {
                res.outcome = EngineResult::Outcome::ExactClosure;
                res.result = ext.plain_min;
                res.result_states = ext.plain_min.num_states();
                res.trace.push_back(it);
                return res;
              }
              if (cfg.mode == RunConfig::Mode::Reach) {
                // paper-sanctioned fallback: keep the safe candidate and
                // report the over-approximation if nothing better shows up
                res.result = ext.plain_min;
                res.result_states = ext.plain_min.num_states();
                it.note = "safe-overapproximation-candidate";
              } else {
                // surfaced for diagnosis; the outcome stays GaveUp unless
                // preciseness is eventually established
                res.result = ext.plain_min;
                it.note = "preciseness-not-established";
              }
            } else {
              it.note = safety.verdict == Verdict::Fails
                            ? "safety-failed"
                            : "safety-inconclusive";
            }
          }
        }
      }
      break;
    }
    res.trace.push_back(it);

    if (k >= cfg.max_samples) {
      if (cfg.mode == RunConfig::Mode::Reach && res.result) {
        res.outcome = EngineResult::Outcome::SafeOverApproximation;
        res.result_states = res.result->num_states();
        return res;
      }
      return give_up("sample cap exceeded");
    }

    // advance the chain to s_{k+1}
    if (cfg.mode == RunConfig::Mode::Closure) {
      if (cfg.sampling.type == SamplingStrategy::Type::Exponential) {
        for (uint64_t i = 1; i < cfg.sampling.base; ++i) {
          if (cfg.nonreflexive_composition) {
            ComposeResult c = compose(cur0, curp, cfg.dominance);
            track_peak(c.peak_states);
            if (!c.weak_ok) return give_up("composition not inherently weak");
            Automaton u = union_canonical(c.transducer.automaton(),
                                                  cur0.automaton());
            cur0 = Transducer(u);
          } else {
            ComposeResult c = compose(cur0, cur0, cfg.dominance);
            track_peak(c.peak_states);
            if (!c.weak_ok) return give_up("composition not inherently weak");
            cur0 = c.transducer;
          }
        }
        if (cfg.nonreflexive_composition) {
          Transducer prevp = curp;
          for (uint64_t i = 1; i < cfg.sampling.base; ++i) {
            ComposeResult c = compose(curp, prevp, cfg.dominance);
            track_peak(c.peak_states);
            if (!c.weak_ok) return give_up("composition not inherently weak");
            curp = c.transducer;
          }
        }
      } else {
        if (cfg.nonreflexive_composition) {
          ComposeResult c = compose(cur0, stepp, cfg.dominance);
          track_peak(c.peak_states);
          if (!c.weak_ok) return give_up("composition not inherently weak");
          cur0 = Transducer(union_canonical(c.transducer.automaton(),
                                                    cur0.automaton()));
        } else {
          ComposeResult c = compose(cur0, step0, cfg.dominance);
          track_peak(c.peak_states);
          if (!c.weak_ok) return give_up("composition not inherently weak");
          cur0 = c.transducer;
        }
      }
      chain.closure = cur0;
    } else {
      // reach mode: apply the step relation to the current set
      Transducer step = step0;
      if (cfg.sampling.type == SamplingStrategy::Type::Exponential) {
        // next set needs T0^{s_k (a-1)} applied; with base 2 that is T0^{s_k}
        uint64_t times = cfg.sampling.point(k + 1) - cfg.sampling.point(k);
        PowerResult p = power(t0, t_min, times, cfg.nonreflexive_composition);
        track_peak(p.peak_states);
        step = p.transducer;
      }
      ImageResult img = image(step, *chain.reach, cfg.dominance);
      track_peak(img.peak_states);
      if (!img.weak_ok) return give_up("image not inherently weak");
      chain.reach = img.automaton;
    }

    window.push_back(chain.automaton());
    if (window.size() > kMaxWindow) window.erase(window.begin());
  }
}

}  // namespace rmc
