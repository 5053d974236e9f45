#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rmc/builders.hpp"
#include "rmc/ops.hpp"
#include "rmc/weak.hpp"

using namespace rmc;
using namespace rmc::test;

namespace {

Alphabet ab() { return Alphabet(std::vector<std::string>{"a", "b"}); }

Automaton tn_star() {
  // T N*
  Alphabet alpha(std::vector<std::string>{"N", "T"});
  AutomatonBuilder b(alpha, Kind::FiniteWord);
  StateId s0 = b.add_state();
  StateId s1 = b.add_state(true);
  b.add_trans(s0, 1, s1);
  b.add_trans(s1, 0, s1);
  b.initial.push_back(s0);
  return b.build();
}

Automaton nstar_t_nstar() {
  Alphabet alpha(std::vector<std::string>{"N", "T"});
  AutomatonBuilder b(alpha, Kind::FiniteWord);
  StateId s0 = b.add_state();
  StateId s1 = b.add_state(true);
  b.add_trans(s0, 0, s0);
  b.add_trans(s0, 1, s1);
  b.add_trans(s1, 0, s1);
  b.initial.push_back(s0);
  return b.build();
}

}  // namespace

TEST_CASE("determinize is idempotent on DFAs and preserves the language") {
  Automaton a = tn_star();
  Automaton d = determinize(a);
  CHECK(d.deterministic());
  CHECK(enumerate_language(a, 6) == enumerate_language(d, 6));
  CHECK(minimize(d).num_states() <= a.num_states());
}

TEST_CASE("NFA for (a|b)*a determinizes to a 2-state minimal DFA") {
  AutomatonBuilder b(ab(), Kind::FiniteWord);
  StateId q0 = b.add_state();
  StateId q1 = b.add_state(true);
  b.add_trans(q0, 0, q0);
  b.add_trans(q0, 1, q0);
  b.add_trans(q0, 0, q1);
  b.initial.push_back(q0);
  Automaton nfa = b.build();
  Automaton dfa = minimize(determinize(nfa));
  CHECK(dfa.num_states() == 2);
  CHECK(enumerate_language(nfa, 7) == enumerate_language(dfa, 7));
}

TEST_CASE("determinize of an empty-language automaton accepts nothing") {
  AutomatonBuilder b(ab(), Kind::FiniteWord);
  StateId q0 = b.add_state();
  b.add_trans(q0, 0, q0);
  b.initial.push_back(q0);
  Automaton d = determinize(b.build());
  CHECK(is_empty(d).empty);
}

TEST_CASE("minimal partial DFA sizes match the reported token ring pieces") {
  CHECK(minimize(tn_star()).num_states() == 2);
  CHECK(minimize(nstar_t_nstar()).num_states() == 2);
  // idempotence
  Automaton m = minimize(tn_star());
  CHECK(graph_equal(minimize(m), m));
}

TEST_CASE("boolean operations") {
  Automaton a = tn_star();
  Automaton b = nstar_t_nstar();
  SUBCASE("union with the empty automaton") {
    Automaton empty = empty_automaton(a.alphabet(), Kind::FiniteWord);
    CHECK(language_equal(boolean(BoolOp::Union, a, empty), a));
  }
  SUBCASE("intersection of TN* with N*TN* is TN*") {
    CHECK(language_equal(boolean(BoolOp::Intersection, a, b), a));
    auto words = enumerate_language(boolean(BoolOp::Intersection, a, b), 8);
    CHECK(words == enumerate_language(a, 8));
  }
  SUBCASE("difference with itself is empty") {
    CHECK(is_empty(boolean(BoolOp::Difference, a, a)).empty);
  }
}

TEST_CASE("complement") {
  Automaton a = tn_star();
  SUBCASE("involution") {
    CHECK(language_equal(complement(complement(a)), a));
  }
  SUBCASE("complement of Sigma* is empty") {
    CHECK(is_empty(complement(universal(a.alphabet(), Kind::FiniteWord))).empty);
  }
  SUBCASE("complement of TN* contains eps, N, TT") {
    Automaton c = complement(a);
    CHECK(accepts(c, {}));
    CHECK(accepts(c, {0}));
    CHECK(accepts(c, {1, 1}));
    CHECK(!accepts(c, {1}));
  }
}

TEST_CASE("emptiness with witnesses") {
  Automaton a = tn_star();
  Emptiness e = is_empty(a);
  CHECK(!e.empty);
  REQUIRE(e.word.has_value());
  CHECK(*e.word == Word{1});  // "T"
  AutomatonBuilder b(ab(), Kind::FiniteWord);
  b.add_state();
  b.initial.push_back(0);
  CHECK(is_empty(b.build()).empty);
}

TEST_CASE("weak Buchi emptiness needs a reachable accepting cycle") {
  AutomatonBuilder b(ab(), Kind::WeakBuchi);
  StateId q0 = b.add_state(false);
  StateId q1 = b.add_state(true);
  b.add_trans(q0, 0, q0);
  b.add_trans(q1, 0, q1);
  b.initial.push_back(q0);  // accepting SCC unreachable
  CHECK(is_empty(b.build()).empty);
}

TEST_CASE("language_equal distinguishes TN* from N*T") {
  Alphabet alpha(std::vector<std::string>{"N", "T"});
  AutomatonBuilder b(alpha, Kind::FiniteWord);
  StateId s0 = b.add_state();
  StateId s1 = b.add_state(true);
  b.add_trans(s0, 0, s0);
  b.add_trans(s0, 1, s1);
  b.initial.push_back(s0);
  CHECK(!language_equal(tn_star(), b.build()));
  CHECK(language_equal(tn_star(), minimize(tn_star())));
}

TEST_CASE("synchronous product") {
  SUBCASE("two singletons") {
    AutomatonBuilder b1(ab(), Kind::FiniteWord);
    StateId p0 = b1.add_state();
    StateId p1 = b1.add_state(true);
    b1.add_trans(p0, 0, p1);  // {a}... extended below to ab
    StateId p2 = b1.add_state(true);
    b1.accepting[p1] = false;
    b1.add_trans(p1, 1, p2);  // {ab}
    b1.initial.push_back(p0);
    Alphabet cd(std::vector<std::string>{"c", "d"});
    AutomatonBuilder b2(cd, Kind::FiniteWord);
    StateId q0 = b2.add_state();
    StateId q1 = b2.add_state();
    StateId q2 = b2.add_state(true);
    b2.add_trans(q0, 0, q1);
    b2.add_trans(q1, 1, q2);  // {cd}
    b2.initial.push_back(q0);
    Automaton prod = synchronous_product(b1.build(), b2.build());
    auto lang = enumerate_language(prod, 4);
    REQUIRE(lang.size() == 1);
    Word w = *lang.begin();
    REQUIRE(w.size() == 2);
    CHECK(prod.alphabet().display(w[0]) == "a/c");
    CHECK(prod.alphabet().display(w[1]) == "b/d");
  }
  SUBCASE("length-3 slice sizes multiply") {
    Rng rng(7);
    Automaton a = random_automaton(rng, 4, 2, Kind::FiniteWord);
    Automaton b = random_automaton(rng, 4, 2, Kind::FiniteWord);
    size_t na = 0, nb = 0;
    for (const Word& w : enumerate_language(a, 3))
      na += w.size() == 3;
    for (const Word& w : enumerate_language(b, 3))
      nb += w.size() == 3;
    size_t np = 0;
    for (const Word& w : enumerate_language(synchronous_product(a, b), 3))
      np += w.size() == 3;
    CHECK(np == na * nb);
  }
}

TEST_CASE("projection drops a track") {
  Alphabet alpha = Alphabet::power({"a", "b"}, 2);
  AutomatonBuilder b(alpha, Kind::FiniteWord);
  StateId q0 = b.add_state();
  StateId q1 = b.add_state(true);
  b.add_trans(q0, alpha.make({0, 1}), q1);  // (a,b)
  b.initial.push_back(q0);
  Automaton p = project(b.build(), 1);
  CHECK(p.alphabet().arity() == 1);
  CHECK(accepts(p, {0}));
  CHECK(!accepts(p, {1}));
  CHECK_THROWS_AS(project(p, 0), BadTrackIndex);
}

TEST_CASE("find_isomorphism") {
  Automaton a = minimize(tn_star());
  auto self = find_isomorphism(a, a);
  REQUIRE(self.has_value());
  for (auto& [x, y] : self->pairs()) CHECK(x == y);
  Automaton b = minimize(nstar_t_nstar());
  CHECK(!find_isomorphism(a, b).has_value());
}

TEST_CASE("property: operations agree with the enumeration oracle") {
  Rng rng(2024);
  for (int round = 0; round < 120; ++round) {
    Automaton a = random_automaton(rng, 6, 3, Kind::FiniteWord);
    Automaton b = random_automaton(rng, 6, 3, Kind::FiniteWord);
    auto la = enumerate_language(a, 8);
    auto lb = enumerate_language(b, 8);

    CHECK(enumerate_language(determinize(a), 8) == la);
    Automaton ma = canonical_min(a);
    CHECK(enumerate_language(ma, 8) == la);

    std::set<Word> u = la, i, d;
    u.insert(lb.begin(), lb.end());
    for (const Word& w : la) {
      if (lb.count(w)) i.insert(w);
      if (!lb.count(w)) d.insert(w);
    }
    CHECK(enumerate_language(boolean(BoolOp::Union, a, b), 8) == u);
    CHECK(enumerate_language(boolean(BoolOp::Intersection, a, b), 8) == i);
    CHECK(enumerate_language(boolean(BoolOp::Difference, a, b), 8) == d);

    // a word is accepted by exactly one of a and complement(a)
    Automaton ca = complement(a);
    for (const Word& w : all_words(3, 5))
      CHECK(accepts(a, w) != accepts(ca, w));

    // emptiness and witness
    Emptiness e = is_empty(a);
    CHECK(e.empty == la.empty());
    if (!e.empty) CHECK(accepts(a, *e.word));
  }
}

TEST_CASE("property: minimize is canonical and matches the Moore oracle") {
  Rng rng(99);
  for (int round = 0; round < 120; ++round) {
    Automaton a = random_automaton(rng, 6, 3, Kind::FiniteWord);
    Automaton m1 = canonical_min(a);
    // a syntactically different automaton for the same language
    Automaton noisy = boolean(BoolOp::Union, a, a);
    Automaton m2 = canonical_min(noisy);
    CHECK(graph_equal(m1, m2));
    Automaton moore = moore_minimize(determinize(a));
    CHECK(moore.num_states() == m1.num_states());
    CHECK(enumerate_language(moore, 8) == enumerate_language(m1, 8));
    if (find_isomorphism(m1, canonical_min(moore)).has_value())
      CHECK(language_equal(m1, moore));
  }
}

TEST_CASE("find_isomorphism implies language equality") {
  Rng rng(5);
  for (int round = 0; round < 60; ++round) {
    Automaton a = canonical_min(random_automaton(rng, 5, 2, Kind::FiniteWord));
    Automaton b = canonical_min(random_automaton(rng, 5, 2, Kind::FiniteWord));
    auto iso = find_isomorphism(a, b);
    if (iso) CHECK(language_equal(a, b));
  }
}
