#include "rmc/extrapolate.hpp"

#include <algorithm>

#include "rmc/ops.hpp"
#include "rmc/weak.hpp"

namespace rmc {

namespace {

struct JumpEdge {
  StateId from;
  SymbolId sym;
  StateId pattern_to;  // the I_0 correspondent of the landing state
  uint32_t index;      // increment index j >= 1 the original edge lands in
};

// Original transitions from head or I_0 whose destination is a later
// increment, in canonical (source, symbol, index) order.
std::vector<JumpEdge> collect_jumps(const Automaton& origin,
                                    const GrowDecomposition& grow) {
  std::vector<JumpEdge> jumps;
  for (const Trans& t : origin.transitions()) {
    int32_t from_part = grow.part(t.from);
    if (from_part != -1 && from_part != 0) continue;
    int32_t to_part = grow.part(t.to);
    if (to_part < 1) continue;
    auto pattern =
        grow.increment_iso[static_cast<size_t>(to_part)].backward(t.to);
    if (!pattern) throw TooFewIncrements();  // broken isomorphism
    jumps.push_back({t.from, t.sym, *pattern, static_cast<uint32_t>(to_part)});
  }
  std::sort(jumps.begin(), jumps.end(), [](const JumpEdge& a, const JumpEdge& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.sym != b.sym) return a.sym < b.sym;
    return a.index < b.index;
  });
  return jumps;
}

void require_increments(const GrowDecomposition& grow, size_t minimum) {
  if (grow.num_increments() < minimum) throw TooFewIncrements();
}

}  // namespace

CounterAutomaton extrapolate_finite_counter(const Automaton& origin,
                                            const GrowDecomposition& grow,
                                            std::vector<AddedEdge>* log) {
  if (origin.kind() != Kind::FiniteWord)
    throw std::invalid_argument("finite extrapolation on a Buchi automaton");
  require_increments(grow, 2);
  std::vector<CounterTrans> trans;
  for (const Trans& t : origin.transitions())
    trans.push_back({t.from, t.sym, t.to, {0}});
  for (const JumpEdge& j : collect_jumps(origin, grow)) {
    for (uint32_t l = 0; l < j.index; ++l) {
      StateId target = *grow.increment_iso[l].forward(j.pattern_to);
      uint32_t count = j.index - l;
      trans.push_back({j.from, j.sym, target, {count}});
      if (log) log->push_back({j.from, j.sym, target, count});
    }
  }
  return CounterAutomaton(1, origin.alphabet(), origin.kind(),
                          origin.num_states(), origin.initial(),
                          origin.accepting(), std::move(trans));
}

Automaton extrapolate_finite(const Automaton& origin,
                             const GrowDecomposition& grow) {
  return counterless(extrapolate_finite_counter(origin, grow));
}

CounterAutomaton extrapolate_weak_counter(const Automaton& origin,
                                          const GrowDecomposition& grow,
                                          std::vector<AddedEdge>* log) {
  if (origin.kind() != Kind::WeakBuchi)
    throw std::invalid_argument("weak extrapolation on a finite-word automaton");
  require_increments(grow, 2);
  const std::vector<StateId>& head_inc = grow.increments[0];
  uint32_t n = origin.num_states();
  std::vector<StateId> copy_of(origin.num_states(), UINT32_MAX);
  for (StateId q : head_inc) copy_of[q] = n++;

  std::vector<bool> acc(n, false);
  for (StateId q = 0; q < origin.num_states(); ++q) acc[q] = origin.accepting(q);
  // copy states stay nonaccepting

  std::vector<CounterTrans> trans;
  for (const Trans& t : origin.transitions())
    trans.push_back({t.from, t.sym, t.to, {0}});
  // the copy inherits I_0's internal transitions and its outgoing
  // transitions into later increments and the tail end
  for (const Trans& t : origin.transitions()) {
    if (copy_of[t.from] == UINT32_MAX) continue;
    StateId to = copy_of[t.to] != UINT32_MAX ? copy_of[t.to] : t.to;
    trans.push_back({copy_of[t.from], t.sym, to, {0}});
  }
  for (const JumpEdge& j : collect_jumps(origin, grow)) {
    StateId copy_target = copy_of[*grow.increment_iso[0].forward(j.pattern_to)];
    // from the original state: into increments 1..j-1, and into the copy
    for (uint32_t l = 1; l < j.index; ++l) {
      StateId target = *grow.increment_iso[l].forward(j.pattern_to);
      trans.push_back({j.from, j.sym, target, {j.index - l}});
      if (log) log->push_back({j.from, j.sym, target, j.index - l});
    }
    trans.push_back({j.from, j.sym, copy_target, {j.index}});
    if (log) log->push_back({j.from, j.sym, copy_target, j.index});
    // from the copy of an I_0 source: the same edges
    if (copy_of[j.from] != UINT32_MAX) {
      StateId from_c = copy_of[j.from];
      for (uint32_t l = 1; l < j.index; ++l) {
        StateId target = *grow.increment_iso[l].forward(j.pattern_to);
        trans.push_back({from_c, j.sym, target, {j.index - l}});
        if (log) log->push_back({from_c, j.sym, target, j.index - l});
      }
      trans.push_back({from_c, j.sym, copy_target, {j.index}});
      if (log) log->push_back({from_c, j.sym, copy_target, j.index});
    }
  }
  return CounterAutomaton(1, origin.alphabet(), origin.kind(), n,
                          origin.initial(), std::move(acc), std::move(trans));
}

Automaton extrapolate_weak(const Automaton& origin,
                           const GrowDecomposition& grow) {
  return counterless(extrapolate_weak_counter(origin, grow));
}

Extrapolation make_extrapolation(const Automaton& origin,
                                 const GrowDecomposition& grow) {
  Extrapolation ext{origin, grow,
                    origin.kind() == Kind::FiniteWord
                        ? extrapolate_finite_counter(origin, grow, nullptr)
                        : extrapolate_weak_counter(origin, grow, nullptr),
                    Automaton(), Automaton(), true,
                    counter_zero(origin), {}};
  // rebuild with the provenance log
  ext.added.clear();
  ext.counted = origin.kind() == Kind::FiniteWord
                    ? extrapolate_finite_counter(origin, grow, &ext.added)
                    : extrapolate_weak_counter(origin, grow, &ext.added);
  ext.plain_raw = counterless(ext.counted);
  if (origin.kind() == Kind::FiniteWord) {
    ext.plain_min = canonical_min(ext.plain_raw);
  } else {
    try {
      ext.plain_min = canonical_form(ext.plain_raw);
    } catch (const NotWeak&) {
      ext.weak_ok = false;
      DeterminizeWeakResult det = determinize_weak(ext.plain_raw);
      ext.plain_min = det.automaton;
    }
  }
  return ext;
}

}  // namespace rmc
