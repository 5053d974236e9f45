#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rmc/builders.hpp"
#include "rmc/increments.hpp"
#include "rmc/ops.hpp"
#include "rmc/transducer.hpp"
#include "rmc/weak.hpp"

using namespace rmc;
using namespace rmc::test;

namespace {

Alphabet ab() { return Alphabet(std::vector<std::string>{"a", "b"}); }

// minimal DFA of a^n b
Automaton chain(uint32_t n) {
  AutomatonBuilder b(ab(), Kind::FiniteWord);
  StateId prev = b.add_state();
  b.initial.push_back(prev);
  for (uint32_t i = 0; i < n; ++i) {
    StateId next = b.add_state();
    b.add_trans(prev, 0, next);
    prev = next;
  }
  StateId fin = b.add_state(true);
  b.add_trans(prev, 1, fin);
  return canonical_min(b.build());
}

// set of words (length <= cap) reaching state q in a deterministic automaton
std::set<Word> backward_words(const Automaton& a, StateId q, size_t cap) {
  std::set<Word> out;
  for (const Word& w : all_words(a.alphabet().size(), cap)) {
    if (a.initial().empty()) break;
    StateId cur = a.initial()[0];
    bool alive = true;
    for (SymbolId s : w) {
      auto n = a.step(cur, s);
      if (!n) {
        alive = false;
        break;
      }
      cur = *n;
    }
    if (alive && cur == q) out.insert(w);
  }
  return out;
}

std::set<Word> forward_words(const Automaton& a, StateId q, size_t cap) {
  std::set<Word> out;
  for (const Word& w : all_words(a.alphabet().size(), cap)) {
    StateId cur = q;
    bool alive = true;
    for (SymbolId s : w) {
      auto n = a.step(cur, s);
      if (!n) {
        alive = false;
        break;
      }
      cur = *n;
    }
    if (alive && a.accepting(cur)) out.insert(w);
  }
  return out;
}

}  // namespace

TEST_CASE("forward and backward equivalence of an automaton with itself") {
  Automaton a = chain(3);
  StateMap ef = forward_equivalence(a, a);
  StateMap eb = backward_equivalence(a, a);
  CHECK(ef.size() == a.num_states());
  CHECK(eb.size() == a.num_states());
  for (auto& [x, y] : ef.pairs()) CHECK(x == y);
  for (auto& [x, y] : eb.pairs()) CHECK(x == y);
}

TEST_CASE("equivalences demand canonical inputs") {
  AutomatonBuilder b(ab(), Kind::FiniteWord);
  StateId q0 = b.add_state(true);
  StateId dead = b.add_state(false);  // not coaccessible
  b.add_trans(q0, 0, dead);
  b.initial.push_back(q0);
  Automaton not_canonical = b.build();
  CHECK_THROWS_AS(forward_equivalence(not_canonical, not_canonical),
                  NotCanonical);
}

TEST_CASE("property: E_f pairs accept identical bounded languages") {
  Rng rng(17);
  for (int round = 0; round < 40; ++round) {
    Automaton a = canonical_min(random_automaton(rng, 5, 2, Kind::FiniteWord));
    Automaton b = canonical_min(random_automaton(rng, 5, 2, Kind::FiniteWord));
    StateMap ef = forward_equivalence(a, b);
    for (auto& [qa, qb] : ef.pairs())
      CHECK(forward_words(a, qa, 6) == forward_words(b, qb, 6));
    CHECK(ef.injective());
  }
}

TEST_CASE("property: E_b pairs are reached by identical bounded word sets") {
  Rng rng(18);
  for (int round = 0; round < 40; ++round) {
    Automaton a = canonical_min(random_automaton(rng, 5, 2, Kind::FiniteWord));
    Automaton b = canonical_min(random_automaton(rng, 5, 2, Kind::FiniteWord));
    StateMap eb = backward_equivalence(a, b);
    for (auto& [qa, qb] : eb.pairs()) {
      CHECK(backward_words(a, qa, 6) == backward_words(b, qb, 6));
      CHECK(a.accepting(qa) == b.accepting(qb));
    }
    CHECK(eb.injective());
  }
}

TEST_CASE("backward equivalence explores exactly the shared prefix region") {
  // a: a b c; b: a b d -- shared prefix of length 2
  Alphabet abcd(std::vector<std::string>{"a", "b", "c", "d"});
  auto path = [&](std::vector<SymbolId> syms) {
    AutomatonBuilder bb(abcd, Kind::FiniteWord);
    StateId cur = bb.add_state();
    bb.initial.push_back(cur);
    for (SymbolId s : syms) {
      StateId nxt = bb.add_state(false);
      bb.add_trans(cur, s, nxt);
      cur = nxt;
    }
    bb.accepting[cur] = true;
    return canonical_min(bb.build());
  };
  Automaton a = path({0, 1, 2});
  Automaton b = path({0, 1, 3});
  StateMap eb = backward_equivalence(a, b);
  // initial pair plus the two prefix states; the final states differ by the
  // words reaching them
  CHECK(eb.size() == 3);
  for (auto& [x, y] : eb.pairs()) CHECK(x == y);
}

TEST_CASE("is_incrementally_larger on the a^n b chain") {
  Automaton a2 = chain(2);
  Automaton a3 = chain(3);
  auto step = is_incrementally_larger(a2, a3);
  REQUIRE(step.has_value());
  CHECK(step->increment.size() == 1);
  CHECK(step->head.empty());
  // identical automata: empty increment
  auto same = is_incrementally_larger(a2, a2);
  REQUIRE(same.has_value());
  CHECK(same->increment.empty());
}

TEST_CASE("(x,x+1): doubled powers grow incrementally, successive do not") {
  Transducer t = affine_relation(1);
  Transducer t0 = reflexive(t);
  Automaton p4 = power(t0, t, 4, true).transducer.automaton();
  Automaton p8 = power(t0, t, 8, true).transducer.automaton();
  Automaton p16 = power(t0, t, 16, true).transducer.automaton();
  Automaton p2 = power(t0, t, 2, true).transducer.automaton();
  CHECK(is_incrementally_larger(p4, p8).has_value());
  CHECK(is_incrementally_larger(p8, p16).has_value());
  // the early sampling window is not yet an incrementally growing
  // sequence: the head increments do not propagate backward
  DecomposeResult early = decompose({p2, p4, p8});
  CHECK(!early.grow.has_value());
  CHECK(early.failed_step == 1);
  DecomposeResult dec = decompose({p4, p8, p16});
  REQUIRE(dec.grow.has_value());
  CHECK(dec.grow->num_increments() == 2);
  CHECK(dec.grow->increments[0].size() == 3);
  CHECK(dec.grow->diameter == 1);
}

TEST_CASE("decompose of a constant sequence has no increments") {
  Automaton a = chain(2);
  DecomposeResult dec = decompose({a, a, a});
  REQUIRE(dec.grow.has_value());
  for (auto& inc : dec.grow->increments) CHECK(inc.empty());
  CHECK(dec.grow->head.size() + dec.grow->tail_end.size() == a.num_states());
  CHECK(dec.grow->diameter == 0);
}

TEST_CASE("decompose of the a^n b family finds 1-state increments") {
  std::vector<Automaton> seq{chain(1), chain(2), chain(3), chain(4)};
  DecomposeResult dec = decompose(seq);
  REQUIRE(dec.grow.has_value());
  CHECK(dec.grow->num_increments() == 3);
  for (auto& inc : dec.grow->increments) CHECK(inc.size() == 1);
  CHECK(communication_stable(seq[2], seq[3], dec));
  CHECK(head_increment_equivalent(seq[2], seq[3], dec));
  // every part assignment is a partition
  const GrowDecomposition& g = *dec.grow;
  size_t total = g.head.size() + g.tail_end.size();
  for (auto& inc : g.increments) total += inc.size();
  CHECK(total == seq[3].num_states());
}

TEST_CASE("decompose rejects non-growing sequences with the step index") {
  Automaton a = chain(2);
  Automaton b = canonical_min(boolean(
      BoolOp::Union, chain(3),
      universal(ab(), Kind::FiniteWord)));  // unrelated language
  DecomposeResult dec = decompose({a, chain(3), b});
  CHECK(!dec.grow.has_value());
  CHECK(dec.failed_step == 1);
}

TEST_CASE("SCCs never straddle decomposition parts") {
  Transducer t0 = reflexive(token_ring());
  Automaton a1 = image(t0, initial_token_ring()).automaton;
  Automaton a2 = image(t0, a1).automaton;
  Automaton a3 = image(t0, a2).automaton;
  DecomposeResult dec = decompose({a1, a2, a3});
  REQUIRE(dec.grow.has_value());
  SccDecomposition scc = scc_decompose(a3);
  for (const Trans& t : a3.transitions()) {
    if (scc.component[t.from] != scc.component[t.to]) continue;
    CHECK(dec.grow->part(t.from) == dec.grow->part(t.to));
  }
}

TEST_CASE("communication equivalence case analysis on a hand-built shape") {
  // chain with three 1-state increments; c-transitions from increments 0
  // and 1 to a tail state, but not from increment 2
  Alphabet abc(std::vector<std::string>{"a", "b", "c"});
  AutomatonBuilder b(abc, Kind::FiniteWord);
  StateId h = b.add_state();        // 0 head
  StateId i0 = b.add_state();       // 1
  StateId i1 = b.add_state();       // 2
  StateId i2 = b.add_state();       // 3
  StateId t = b.add_state();        // 4 tail
  StateId f = b.add_state(true);    // 5 tail end
  b.add_trans(h, 0, i0);
  b.add_trans(i0, 0, i1);
  b.add_trans(i1, 0, i2);
  b.add_trans(i2, 0, t);
  b.add_trans(t, 1, f);
  b.add_trans(i0, 2, f);
  b.add_trans(i1, 2, f);
  b.initial.push_back(h);
  Automaton a = b.build();
  GrowDecomposition grow;
  grow.head = {h};
  grow.increments = {{i0}, {i1}, {i2}};
  grow.tail_end = {t, f};
  for (int l = 0; l < 3; ++l) {
    StateMap iso;
    iso.add(i0, static_cast<StateId>(i0 + l));
    grow.increment_iso.push_back(iso);
  }
  grow.part_of.assign(a.num_states(), -2);
  grow.part_of[h] = -1;
  grow.part_of[i0] = 0;
  grow.part_of[i1] = 1;
  grow.part_of[i2] = 2;
  CHECK(communication_equivalent(a, grow, 0, 0));
  CHECK(communication_equivalent(a, grow, 0, 1));
  CHECK(!communication_equivalent(a, grow, 0, 2));  // c undefined from i2
}

TEST_CASE("decomposition dump is stable") {
  std::vector<Automaton> seq{chain(1), chain(2), chain(3)};
  DecomposeResult dec = decompose(seq);
  REQUIRE(dec.grow.has_value());
  std::string dump = dump_decomposition(*dec.grow);
  CHECK(dump.find("increment 0") != std::string::npos);
  CHECK(dump.find("tail-end") != std::string::npos);
  CHECK(dump.find("diameter") != std::string::npos);
  CHECK(dump == dump_decomposition(*dec.grow));
}
