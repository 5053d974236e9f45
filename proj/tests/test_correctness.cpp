#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rmc/builders.hpp"
#include "rmc/correctness.hpp"
#include "rmc/increments.hpp"
#include "rmc/insertion.hpp"
#include "rmc/ops.hpp"
#include "rmc/weak.hpp"

using namespace rmc;
using namespace rmc::test;

namespace {

Alphabet ab() { return Alphabet(std::vector<std::string>{"a", "b"}); }

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

Extrapolation token_ring_reach_extrapolation() {
  Transducer t0 = reflexive(token_ring());
  std::vector<Automaton> seq{initial_token_ring()};
  for (int k = 0; k < 3; ++k) seq.push_back(image(t0, seq.back()).automaton);
  seq.erase(seq.begin());
  DecomposeResult dec = decompose(seq);
  REQUIRE(dec.grow.has_value());
  return make_extrapolation(seq.back(), *dec.grow);
}

Extrapolation successor_closure_extrapolation() {
  Transducer t = affine_relation(1);
  Transducer t0 = reflexive(t);
  std::vector<Automaton> w;
  for (int k = 2; k <= 4; ++k)
    w.push_back(power(t0, t, 1ull << k, true).transducer.automaton());
  DecomposeResult dec = decompose(w);
  REQUIRE(dec.grow.has_value());
  return make_extrapolation(w.back(), *dec.grow);
}

}  // namespace

TEST_CASE("safety of the identity transducer holds") {
  Transducer id = identity({"a", "b"}, Kind::FiniteWord);
  CheckReport r = check_safety_closure(id);
  CHECK(r.verdict == Verdict::Holds);
}

TEST_CASE("safety closure holds for the successor extrapolation") {
  Extrapolation ext = successor_closure_extrapolation();
  CheckReport r = check_safety_closure(Transducer(ext.plain_min));
  CHECK(r.verdict == Verdict::Holds);
}

TEST_CASE("a truncated extrapolation fails safety with a replayable witness") {
  Extrapolation ext = successor_closure_extrapolation();
  // drop one of the added jump edges from the raw graph, then minimize
  REQUIRE(!ext.added.empty());
  const AddedEdge& cut = ext.added.front();
  std::vector<Trans> trans;
  for (const Trans& t : ext.plain_raw.transitions())
    if (!(t.from == cut.from && t.sym == cut.sym && t.to == cut.to))
      trans.push_back(t);
  Automaton mutated =
      canonical_min(Automaton(ext.plain_raw.alphabet(), Kind::FiniteWord,
                              ext.plain_raw.num_states(),
                              ext.plain_raw.initial(),
                              ext.plain_raw.accepting(), trans));
  Transducer t_star(mutated);
  CheckReport r = check_safety_closure(t_star);
  CHECK(r.verdict == Verdict::Fails);
  REQUIRE(r.witness_word.has_value());
  // replay: the witness is accepted by the composition but not by t_star
  Automaton comp = compose_product(t_star, t_star);
  CHECK(accepts(comp, *r.witness_word));
  CHECK(!accepts(t_star.automaton(), *r.witness_word));
}

TEST_CASE("safety reach: universal target always holds, mutations fail") {
  Transducer t0 = reflexive(token_ring());
  Automaton sigma = universal(initial_token_ring().alphabet(),
                              Kind::FiniteWord);
  CHECK(check_safety_reach(t0, sigma).verdict == Verdict::Holds);

  // N* T N* absorbs the token ring relation
  AutomatonBuilder b(sigma.alphabet(), Kind::FiniteWord);
  StateId s0 = b.add_state();
  StateId s1 = b.add_state(true);
  b.add_trans(s0, 0, s0);
  b.add_trans(s0, 1, s1);
  b.add_trans(s1, 0, s1);
  b.initial.push_back(s0);
  Automaton closure = canonical_min(b.build());
  CHECK(check_safety_reach(t0, closure).verdict == Verdict::Holds);

  // removing a reachable configuration breaks it: T N* alone
  CheckReport r = check_safety_reach(t0, initial_token_ring());
  CHECK(r.verdict == Verdict::Fails);
  REQUIRE(r.witness_word.has_value());
  Automaton img = image_product(t0, initial_token_ring());
  CHECK(accepts(img, *r.witness_word));
  CHECK(!accepts(initial_token_ring(), *r.witness_word));
}

TEST_CASE("preciseness closure holds for the successor extrapolation") {
  Extrapolation ext = successor_closure_extrapolation();
  uint32_t d = max_increment(ext.counted);
  REQUIRE(d >= 1);
  CheckReport r = check_preciseness_closure(ext, 2 * d);
  CHECK(r.verdict == Verdict::Holds);
  CHECK(r.sync_bound == 2 * d);
}

TEST_CASE("preciseness reach holds for the token ring extrapolation") {
  Extrapolation ext = token_ring_reach_extrapolation();
  Transducer t0 = reflexive(token_ring());
  uint32_t d = std::max<uint32_t>(1, max_increment(ext.counted));
  CheckReport r = check_preciseness_reach(t0, ext, 2 * d, 1);
  CHECK(r.verdict == Verdict::Holds);
}

TEST_CASE("an over-approximated extrapolation is never declared precise") {
  Extrapolation ext = token_ring_reach_extrapolation();
  // spuriously extend the counted automaton: a fresh accepting word TT...
  // reachable with one simulated increment
  CounterAutomaton& c = ext.counted;
  std::vector<CounterTrans> trans = c.transitions();
  uint32_t n = c.num_states();
  // initial -T-> fresh -T-> fresh2(accepting), carrying counter 1
  SymbolId tsym = 1;
  trans.push_back({c.initial()[0], tsym, n, {1}});
  trans.push_back({n, tsym, n + 1, {0}});
  std::vector<bool> acc = c.accepting();
  acc.push_back(false);
  acc.push_back(true);
  ext.counted = CounterAutomaton(1, c.base(), c.kind(), n + 2, c.initial(),
                                 acc, trans);
  ext.plain_raw = counterless(ext.counted);
  ext.plain_min = canonical_min(ext.plain_raw);
  Transducer t0 = reflexive(token_ring());
  CheckReport r = check_preciseness_reach(t0, ext, 2, 1);
  CHECK(r.verdict != Verdict::Holds);
  CHECK(r.verdict == Verdict::Inconclusive);  // sufficient-only: never Fails
}

TEST_CASE("weak-mode safety reports NotInherentlyWeak on nondeterministic input") {
  // a weak nondeterministic transducer whose language is not WDBA
  Alphabet alpha = Alphabet::power({"a", "b"}, 2);
  AutomatonBuilder b(alpha, Kind::WeakBuchi);
  StateId q0 = b.add_state(false);
  StateId q1 = b.add_state(true);
  for (SymbolId s = 0; s < alpha.size(); ++s) b.add_trans(q0, s, q0);
  b.add_trans(q0, alpha.make({1, 1}), q1);
  b.add_trans(q1, alpha.make({1, 1}), q1);
  b.initial.push_back(q0);
  Transducer t(b.build());
  CheckReport r = check_safety_closure(t);
  CHECK(r.verdict == Verdict::Inconclusive);
  CHECK(r.reason == InconclusiveReason::NotInherentlyWeak);
}

TEST_CASE("preciseness pipeline stays run-bounded in weak mode") {
  // weak chain family a^n b^omega
  auto wchain = [&](uint32_t n) {
    AutomatonBuilder b(ab(), Kind::WeakBuchi);
    StateId prev = b.add_state();
    b.initial.push_back(prev);
    for (uint32_t i = 0; i < n; ++i) {
      StateId next = b.add_state();
      b.add_trans(prev, 0, next);
      prev = next;
    }
    StateId fin = b.add_state(true);
    b.add_trans(prev, 1, fin);
    b.add_trans(fin, 1, fin);
    return canonical_form(b.build());
  };
  std::vector<Automaton> seq{wchain(1), wchain(2), wchain(3), wchain(4)};
  DecomposeResult dec = decompose(seq);
  REQUIRE(dec.grow.has_value());
  Extrapolation ext = make_extrapolation(seq.back(), *dec.grow);
  CHECK(ext.weak_ok);
  CHECK(is_run_bounded(ext.counted));
}

TEST_CASE("check reports serialize to the line format") {
  CheckReport r;
  r.verdict = Verdict::Fails;
  r.witness_word = Word{1, 0};
  r.sync_bound = 4;
  std::string text = r.to_text();
  CHECK(text.find("verdict fails") != std::string::npos);
  CHECK(text.find("witness 1 0") != std::string::npos);
  CHECK(text.find("sync-bound 4") != std::string::npos);
  CHECK(text.find("seconds") != std::string::npos);
  CheckReport inc;
  inc.verdict = Verdict::Inconclusive;
  inc.reason = InconclusiveReason::NotInherentlyWeak;
  CHECK(inc.to_text().find("inconclusive not-inherently-weak") !=
        std::string::npos);
}

TEST_CASE("fused preciseness product agrees with the staged reference path") {
  // small instance; the reference path uses counter_composition +
  // counter_intersection + restrict_greater + projection + union
  Extrapolation ext = token_ring_reach_extrapolation();
  uint32_t M = 2;
  Transducer t0 = reflexive(token_ring());
  // staged
  CounterAutomaton img = counter_image(t0, ext.counted);
  CounterAutomaton two = counter_intersection(ext.counted, img);
  CounterAutomaton synced = restrict_greater(two, 0, {1}, M);
  CounterAutomaton projected = counter_project(synced, 1);
  CounterAutomaton lhs = counter_union_extended(projected, ext.zero_layer);
  ExtendedEqual staged = extended_equal(lhs, ext.counted);
  // pipeline
  CheckReport fused = check_preciseness_reach(t0, ext, M, 1);
  CHECK((fused.verdict == Verdict::Holds) == staged.holds);
}

TEST_CASE("chain closure: deliberately broken counted automaton not precise") {
  Extrapolation ext = successor_closure_extrapolation();
  uint32_t d = max_increment(ext.counted);
  // underreport one added edge's simulated increments: the word then claims
  // membership in A^{e_0}, which the zero layer refutes
  const AddedEdge& cut = ext.added.front();
  std::vector<CounterTrans> trans;
  for (const CounterTrans& t : ext.counted.transitions()) {
    if (t.from == cut.from && t.sym == cut.sym && t.to == cut.to &&
        t.inc[0] == cut.simulated)
      trans.push_back({t.from, t.sym, t.to, {0}});
    else
      trans.push_back(t);
  }
  ext.counted = CounterAutomaton(1, ext.counted.base(), ext.counted.kind(),
                                 ext.counted.num_states(),
                                 ext.counted.initial(),
                                 ext.counted.accepting(), trans);
  CheckReport r = check_preciseness_closure(ext, 2 * d);
  CHECK(r.verdict != Verdict::Holds);
}
