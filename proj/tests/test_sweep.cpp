#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rmc/builders.hpp"
#include "rmc/ops.hpp"
#include "rmc/sweep.hpp"

using namespace rmc;
using namespace rmc::test;

TEST_CASE("word indexing is a bijection in enumeration order") {
  size_t total = sweep::word_space_size(3, 4);
  CHECK(total == 1 + 3 + 9 + 27 + 81);
  std::set<Word> seen;
  size_t last_len = 0;
  for (size_t i = 0; i < total; ++i) {
    Word w = sweep::word_at(i, 3, 4);
    CHECK(w.size() >= last_len);
    last_len = w.size();
    CHECK(seen.insert(w).second);
  }
  CHECK_THROWS(sweep::word_at(total, 3, 4));
}

TEST_CASE("parallel and serial accept masks are bit-identical") {
  Rng rng(99);
  for (int round = 0; round < 25; ++round) {
    Automaton a = random_automaton(rng, 6, 3, Kind::FiniteWord);
    auto serial = sweep::bounded_accept_mask_serial(a, 6);
    auto parallel = sweep::bounded_accept_mask(a, 6);
    CHECK(serial == parallel);
    // and both agree with the membership oracle
    auto lang = enumerate_language(a, 6);
    for (size_t i = 0; i < serial.size(); ++i) {
      Word w = sweep::word_at(i, a.alphabet().size(), 6);
      CHECK(static_cast<bool>(serial[i]) == (lang.count(w) == 1));
    }
  }
}

TEST_CASE("parallel and serial relation tables are bit-identical") {
  Transducer t0 = reflexive(affine_relation(1));
  auto serial = sweep::relation_table_serial(t0, 5);
  auto parallel = sweep::relation_table(t0, 5);
  CHECK(serial == parallel);
  // semantic spot check: successor-or-equal within 5 bits
  uint64_t n = 32;
  for (uint64_t x = 0; x < n; ++x)
    for (uint64_t y = 0; y < n; ++y) {
      bool want = y == x || y == x + 1;
      CHECK(static_cast<bool>(serial[x * n + y]) == want);
    }
}

TEST_CASE("relation table encodes LSB first") {
  Transducer t0 = reflexive(affine_relation(1));
  Word w = encode_pair(2, 3, 3, t0.alphabet());
  REQUIRE(w.size() == 3);
  // x=2 -> bits 0,1,0 ; y=3 -> bits 1,1,0
  CHECK(t0.alphabet().track(w[0], 0) == 0);
  CHECK(t0.alphabet().track(w[0], 1) == 1);
  CHECK(t0.alphabet().track(w[1], 0) == 1);
  CHECK(t0.alphabet().track(w[1], 1) == 1);
  CHECK(t0.alphabet().track(w[2], 0) == 0);
  CHECK(t0.alphabet().track(w[2], 1) == 0);
  CHECK(accepts(t0.automaton(), w));
}
