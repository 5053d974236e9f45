#include "rmc/builders.hpp"

#include <map>

#include "rmc/ops.hpp"

namespace rmc {

Transducer token_ring() {
  Alphabet alpha = Alphabet::power({"N", "T"}, 2);
  const SymbolId NN = alpha.make({0, 0});
  const SymbolId TN = alpha.make({1, 0});
  const SymbolId NT = alpha.make({0, 1});
  AutomatonBuilder b(alpha, Kind::FiniteWord);
  // (N,N)* (T,N) (N,T) (N,N)*
  StateId p0 = b.add_state();
  StateId p1 = b.add_state();
  StateId p2 = b.add_state(true);
  b.add_trans(p0, NN, p0);
  b.add_trans(p0, TN, p1);
  b.add_trans(p1, NT, p2);
  b.add_trans(p2, NN, p2);
  // (N,T) (N,N)* (T,N): the token wraps around the ring
  StateId q0 = b.add_state();
  StateId q1 = b.add_state();
  StateId q2 = b.add_state(true);
  b.add_trans(q0, NT, q1);
  b.add_trans(q1, NN, q1);
  b.add_trans(q1, TN, q2);
  b.initial.push_back(p0);
  b.initial.push_back(q0);
  return Transducer(canonical_min(b.build()));
}

Automaton initial_token_ring() {
  Alphabet alpha(std::vector<std::string>{"N", "T"});
  AutomatonBuilder b(alpha, Kind::FiniteWord);
  StateId s0 = b.add_state();
  StateId s1 = b.add_state(true);
  b.add_trans(s0, alpha.make({1}), s1);  // T
  b.add_trans(s1, alpha.make({0}), s1);  // N*
  b.initial.push_back(s0);
  return Automaton(canonical_min(b.build()));
}

// LSB-first addition of the constant c: a state carries the value still to
// be added. Reading the bit pair (b, b') requires b' = (b + r) mod 2 and
// moves to r' = (b + r) div 2 (floor division, so negative constants
// converge to 0 or -1). Unsigned encodings accept at r = 0; sign-extended
// ones accept when the carry left over equals sign(x) - sign(x'), which
// depends on the final bit pair, so acceptance is tracked per transition.
Transducer affine_relation(int64_t c, Signedness sign) {
  Alphabet alpha = Alphabet::power({"0", "1"}, 2);
  std::map<std::pair<int64_t, bool>, StateId> ids;
  std::vector<std::pair<int64_t, bool>> states;
  AutomatonBuilder b(alpha, Kind::FiniteWord);
  auto intern = [&](int64_t r, bool acc) {
    auto [it, fresh] = ids.try_emplace({r, acc}, 0);
    if (fresh) {
      it->second = b.add_state(acc);
      states.push_back({r, acc});
    }
    return it->second;
  };
  b.initial.push_back(intern(c, c == 0));
  for (StateId s = 0; s < states.size(); ++s) {
    auto [r, acc] = states[s];
    for (uint32_t bit = 0; bit <= 1; ++bit) {
      int64_t sum = static_cast<int64_t>(bit) + r;
      uint32_t out = static_cast<uint32_t>(((sum % 2) + 2) % 2);
      int64_t next = (sum - static_cast<int64_t>(out)) / 2;  // floor
      bool next_acc;
      if (sign == Signedness::Unsigned) {
        next_acc = next == 0;
      } else {
        // leftover carry must equal sign(x) - sign(x')
        next_acc = next == static_cast<int64_t>(bit) -
                               static_cast<int64_t>(out);
      }
      b.add_trans(s, alpha.make({bit, out}), intern(next, next_acc));
    }
  }
  return Transducer(canonical_min(b.build()));
}

Word encode_value(uint64_t x, uint32_t bits) {
  Word w;
  for (uint32_t i = 0; i < bits; ++i) w.push_back((x >> i) & 1);
  return w;
}

Word encode_pair(uint64_t x, uint64_t y, uint32_t bits,
                 const Alphabet& pair_alphabet) {
  Word w;
  for (uint32_t i = 0; i < bits; ++i)
    w.push_back(pair_alphabet.make({static_cast<uint32_t>((x >> i) & 1),
                                    static_cast<uint32_t>((y >> i) & 1)}));
  return w;
}

}  // namespace rmc
