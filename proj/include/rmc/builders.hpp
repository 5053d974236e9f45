// builders.hpp -- the documented example systems: token ring transition
// relation, its initial set, and binary affine relations (x, x+c).

#pragma once

#include "rmc/transducer.hpp"

namespace rmc {

// Token passing on a ring over {N, T}: the relation
// (N,N)*(T,N)(N,T)(N,N)* union (N,T)(N,N)*(T,N), canonical minimal.
Transducer token_ring();

// T N*: the first process holds the token.
Automaton initial_token_ring();

enum class Signedness {
  Unsigned,        // plain binary, leading zeros allowed
  TwosComplement,  // sign bit repeated, leading 0s/1s allowed
};

// Transducer for (x, x+c) over LSB-first binary words of equal length.
Transducer affine_relation(int64_t c,
                           Signedness sign = Signedness::Unsigned);

// Encoding helpers matching the builders (LSB first).
Word encode_pair(uint64_t x, uint64_t y, uint32_t bits,
                 const Alphabet& pair_alphabet);
Word encode_value(uint64_t x, uint32_t bits);

}  // namespace rmc
