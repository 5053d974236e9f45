// sweep.hpp -- bulk membership kernels used by the semantic verification:
// each has an OpenMP-parallel implementation and a serial reference kept for
// testing. Results are order-independent bit tables, so the parallel and
// serial paths are bit-identical.

#pragma once

#include <cstdint>
#include <vector>

#include "rmc/automaton.hpp"
#include "rmc/transducer.hpp"

namespace rmc::sweep {

// Number of words over an alphabet of the given size with length <= max_len.
size_t word_space_size(size_t alphabet_size, size_t max_len);

// Word at the given index in length-then-lexicographic order.
Word word_at(size_t index, size_t alphabet_size, size_t max_len);

// Acceptance bit per word of length <= max_len, indexed as in word_at.
std::vector<uint8_t> bounded_accept_mask_serial(const Automaton& a,
                                                size_t max_len);
std::vector<uint8_t> bounded_accept_mask(const Automaton& a, size_t max_len);

// table[x * 2^bits + y] = 1 iff the pair word encoding (x, y) LSB-first over
// `bits` bits is accepted by the transducer.
std::vector<uint8_t> relation_table_serial(const Transducer& t, uint32_t bits);
std::vector<uint8_t> relation_table(const Transducer& t, uint32_t bits);

}  // namespace rmc::sweep
