#include "rmc/insertion.hpp"

#include <algorithm>

#include "rmc/errors.hpp"

namespace rmc {

// The inserted automaton has increment positions 0..extra-1 holding the new
// copies and position extra+l holding the original increment I_l. Head
// transitions keep their increment *index* (communication stability), so a
// head edge into old I_j is rewired to the position-j increment. Original
// increment states keep their transitions: their targets' positions shift
// with them. New copies follow I_0's outgoing pattern with their own
// position offset.
Automaton explicit_insertion(const Automaton& origin,
                             const GrowDecomposition& grow, uint32_t extra) {
  if (grow.num_increments() < 1) throw TooFewIncrements();
  const std::vector<StateId>& pattern = grow.increments[0];
  const uint32_t k = static_cast<uint32_t>(grow.num_increments());

  uint32_t n = origin.num_states();
  // copy_state[m][p] = state of the m-th new copy for pattern state p
  std::vector<std::vector<StateId>> copy_state(extra);
  std::vector<StateId> copy_index(origin.num_states(), UINT32_MAX);
  for (uint32_t i = 0; i < pattern.size(); ++i)
    copy_index[pattern[i]] = i;
  for (uint32_t m = 0; m < extra; ++m) {
    copy_state[m].resize(pattern.size());
    for (size_t i = 0; i < pattern.size(); ++i) copy_state[m][i] = n++;
  }

  std::vector<bool> acc(n, false);
  for (StateId q = 0; q < origin.num_states(); ++q) acc[q] = origin.accepting(q);
  for (uint32_t m = 0; m < extra; ++m)
    for (size_t i = 0; i < pattern.size(); ++i)
      acc[copy_state[m][i]] = origin.accepting(pattern[i]);

  // the state sitting at increment position pos for pattern state p
  auto at_position = [&](uint32_t pos, StateId pattern_state) -> StateId {
    if (pos < extra) return copy_state[pos][copy_index[pattern_state]];
    return *grow.increment_iso[pos - extra].forward(pattern_state);
  };

  std::vector<Trans> trans;
  for (const Trans& t : origin.transitions()) {
    int32_t from_part = grow.part(t.from);
    int32_t to_part = grow.part(t.to);
    if (from_part == -1 && to_part >= 0) {
      // head edge: stays at the same increment index
      StateId pat = *grow.increment_iso[static_cast<size_t>(to_part)].backward(t.to);
      trans.push_back({t.from, t.sym,
                       at_position(static_cast<uint32_t>(to_part), pat)});
    } else {
      trans.push_back(t);
    }
  }
  // copies at position m follow the I_0 pattern shifted by their position
  for (uint32_t m = 0; m < extra; ++m) {
    for (const Trans& t : origin.transitions()) {
      if (copy_index[t.from] == UINT32_MAX) continue;
      StateId from = copy_state[m][copy_index[t.from]];
      int32_t to_part = grow.part(t.to);
      if (to_part == 0) {
        trans.push_back({from, t.sym, copy_state[m][copy_index[t.to]]});
      } else if (to_part > 0) {
        uint32_t gamma = static_cast<uint32_t>(to_part);
        StateId pat = *grow.increment_iso[gamma].backward(t.to);
        uint32_t target_pos = m + gamma;
        if (target_pos >= extra + k) throw TooFewIncrements();
        trans.push_back({from, t.sym, at_position(target_pos, pat)});
      } else if (to_part == -2) {
        trans.push_back({from, t.sym, t.to});  // shared tail-end state
      } else {
        // I_0 never points back into the head
        throw std::logic_error("increment transition into the head");
      }
    }
  }

  // initial states: a head or tail initial stays put; an initial inside an
  // increment keeps its position index, landing in a copy when extra > 0
  std::vector<StateId> init;
  for (StateId q : origin.initial()) {
    int32_t p = grow.part(q);
    if (p < 0) {
      init.push_back(q);
    } else {
      StateId pat = *grow.increment_iso[static_cast<size_t>(p)].backward(q);
      init.push_back(at_position(static_cast<uint32_t>(p), pat));
    }
  }
  return Automaton(origin.alphabet(), origin.kind(), n, std::move(init),
                   std::move(acc), std::move(trans));
}

}  // namespace rmc
