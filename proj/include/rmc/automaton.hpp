// automaton.hpp -- finite-word and weak Buchi automata over flat alphabets

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rmc/alphabet.hpp"

namespace rmc {

using StateId = uint32_t;

enum class Kind { FiniteWord, WeakBuchi };

struct Trans {
  StateId from;
  SymbolId sym;
  StateId to;

  friend bool operator==(const Trans& a, const Trans& b) {
    return a.from == b.from && a.sym == b.sym && a.to == b.to;
  }
  friend bool operator<(const Trans& a, const Trans& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.sym != b.sym) return a.sym < b.sym;
    return a.to < b.to;
  }
};

using Word = std::vector<SymbolId>;

// An ultimately periodic word u v^omega.
struct Lasso {
  Word stem;
  Word loop;
};

// Immutable automaton with dense state ids and a partial transition
// relation. All operations in the library are pure functions producing new
// values, so automata can be shared freely across threads.
class Automaton {
 public:
  Automaton() = default;

  Automaton(Alphabet alphabet, Kind kind, uint32_t num_states,
            std::vector<StateId> initial, std::vector<bool> accepting,
            std::vector<Trans> trans)
      : alphabet_(std::move(alphabet)),
        kind_(kind),
        num_states_(num_states),
        initial_(std::move(initial)),
        accepting_(std::move(accepting)),
        trans_(std::move(trans)) {
    std::sort(initial_.begin(), initial_.end());
    initial_.erase(std::unique(initial_.begin(), initial_.end()),
                   initial_.end());
    std::sort(trans_.begin(), trans_.end());
    trans_.erase(std::unique(trans_.begin(), trans_.end()), trans_.end());
    validate();
    index();
  }

  const Alphabet& alphabet() const { return alphabet_; }
  Kind kind() const { return kind_; }
  uint32_t num_states() const { return num_states_; }
  const std::vector<StateId>& initial() const { return initial_; }
  bool accepting(StateId q) const { return accepting_[q]; }
  const std::vector<bool>& accepting() const { return accepting_; }
  const std::vector<Trans>& transitions() const { return trans_; }

  bool deterministic() const { return deterministic_; }

  // Transitions leaving q, sorted by symbol.
  const Trans* begin_from(StateId q) const { return trans_.data() + row_[q]; }
  const Trans* end_from(StateId q) const { return trans_.data() + row_[q + 1]; }

  // Deterministic successor, or nullopt if undefined.
  std::optional<StateId> step(StateId q, SymbolId a) const {
    const Trans* lo = begin_from(q);
    const Trans* hi = end_from(q);
    const Trans* it =
        std::lower_bound(lo, hi, a, [](const Trans& t, SymbolId s) {
          return t.sym < s;
        });
    if (it != hi && it->sym == a) return it->to;
    return std::nullopt;
  }

  // All successors of q on a.
  std::vector<StateId> post(StateId q, SymbolId a) const {
    std::vector<StateId> out;
    const Trans* hi = end_from(q);
    for (const Trans* it = begin_from(q); it != hi; ++it)
      if (it->sym == a) out.push_back(it->to);
    return out;
  }

  size_t num_transitions() const { return trans_.size(); }

 private:
  void validate() {
    if (accepting_.size() != num_states_)
      throw std::invalid_argument("accepting vector size mismatch");
    for (StateId q : initial_)
      if (q >= num_states_) throw std::invalid_argument("bad initial state");
    for (const Trans& t : trans_) {
      if (t.from >= num_states_ || t.to >= num_states_)
        throw std::invalid_argument("transition references unknown state");
      if (t.sym >= alphabet_.size())
        throw std::invalid_argument("transition references unknown symbol");
    }
    deterministic_ = initial_.size() <= 1;
    for (size_t i = 0; deterministic_ && i + 1 < trans_.size(); ++i)
      if (trans_[i].from == trans_[i + 1].from &&
          trans_[i].sym == trans_[i + 1].sym)
        deterministic_ = false;
  }

  void index() {
    row_.assign(num_states_ + 1, 0);
    for (const Trans& t : trans_) row_[t.from + 1]++;
    for (size_t q = 0; q < num_states_; ++q) row_[q + 1] += row_[q];
  }

  Alphabet alphabet_;
  Kind kind_ = Kind::FiniteWord;
  uint32_t num_states_ = 0;
  std::vector<StateId> initial_;
  std::vector<bool> accepting_;
  std::vector<Trans> trans_;
  std::vector<size_t> row_;
  bool deterministic_ = true;
};

// Mutable construction helper.
struct AutomatonBuilder {
  Alphabet alphabet;
  Kind kind = Kind::FiniteWord;
  uint32_t num_states = 0;
  std::vector<StateId> initial;
  std::vector<bool> accepting;
  std::vector<Trans> trans;

  AutomatonBuilder(Alphabet a, Kind k) : alphabet(std::move(a)), kind(k) {}

  StateId add_state(bool acc = false) {
    accepting.push_back(acc);
    return num_states++;
  }

  void add_trans(StateId from, SymbolId sym, StateId to) {
    trans.push_back({from, sym, to});
  }

  Automaton build() {
    return Automaton(alphabet, kind, num_states, initial, accepting, trans);
  }
};

// Partial injective mapping between the states of two automata.
class StateMap {
 public:
  void add(StateId a, StateId b) { pairs_.push_back({a, b}); }

  std::optional<StateId> forward(StateId a) const {
    for (auto& p : pairs_)
      if (p.first == a) return p.second;
    return std::nullopt;
  }

  std::optional<StateId> backward(StateId b) const {
    for (auto& p : pairs_)
      if (p.second == b) return p.first;
    return std::nullopt;
  }

  size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  const std::vector<std::pair<StateId, StateId>>& pairs() const {
    return pairs_;
  }

  void sort() { std::sort(pairs_.begin(), pairs_.end()); }

  // True when no state appears on either side twice.
  bool injective() const {
    std::vector<StateId> l, r;
    for (auto& p : pairs_) l.push_back(p.first), r.push_back(p.second);
    std::sort(l.begin(), l.end());
    std::sort(r.begin(), r.end());
    return std::adjacent_find(l.begin(), l.end()) == l.end() &&
           std::adjacent_find(r.begin(), r.end()) == r.end();
  }

  StateMap composed_with(const StateMap& then) const {
    StateMap out;
    for (auto& p : pairs_)
      if (auto q = then.forward(p.second)) out.add(p.first, *q);
    return out;
  }

  StateMap inverted() const {
    StateMap out;
    for (auto& p : pairs_) out.add(p.second, p.first);
    return out;
  }

 private:
  std::vector<std::pair<StateId, StateId>> pairs_;
};

}  // namespace rmc
