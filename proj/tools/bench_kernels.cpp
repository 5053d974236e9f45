// bench_kernels -- compares the serial reference implementations of the
// membership sweep kernels against the OpenMP versions.

#include <chrono>
#include <iostream>

#include "rmc/builders.hpp"
#include "rmc/engine.hpp"
#include "rmc/sweep.hpp"

using namespace rmc;

namespace {

template <typename F>
double time_it(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  uint32_t bits = argc > 1 ? static_cast<uint32_t>(std::stoul(argv[1])) : 9;
  size_t max_len = argc > 2 ? std::stoul(argv[2]) : 8;

  // a moderately sized transducer: the 5th power of the reflexive successor
  Transducer t0 = reflexive(affine_relation(1));
  Transducer big = power(t0, affine_relation(1), 5, true).transducer;
  std::cout << "relation table: " << big.num_states() << "-state transducer, "
            << (1u << bits) << "^2 pairs of " << bits << "-bit words\n";

  std::vector<uint8_t> serial, parallel;
  double ts = time_it([&] { serial = sweep::relation_table_serial(big, bits); });
  double tp = time_it([&] { parallel = sweep::relation_table(big, bits); });
  std::cout << "  serial   " << ts << " s\n";
  std::cout << "  openmp   " << tp << " s (speedup " << ts / tp << ")\n";
  std::cout << "  equal    " << (serial == parallel ? "yes" : "NO") << '\n';

  Transducer ring = token_ring();
  std::cout << "bounded accept mask: token ring, words up to length "
            << max_len << '\n';
  ts = time_it(
      [&] { serial = sweep::bounded_accept_mask_serial(ring.automaton(), max_len); });
  tp = time_it(
      [&] { parallel = sweep::bounded_accept_mask(ring.automaton(), max_len); });
  std::cout << "  serial   " << ts << " s\n";
  std::cout << "  openmp   " << tp << " s (speedup " << ts / tp << ")\n";
  std::cout << "  equal    " << (serial == parallel ? "yes" : "NO") << '\n';
  return serial == parallel ? 0 : 1;
}
