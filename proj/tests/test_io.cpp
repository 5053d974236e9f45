#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "rmc/builders.hpp"
#include "rmc/io.hpp"
#include "rmc/ops.hpp"

using namespace rmc;
using namespace rmc::test;

TEST_CASE("token ring files round-trip bit-exactly") {
  Automaton ring = token_ring().automaton();
  std::string text = to_text(ring);
  std::istringstream in(text);
  Model parsed = parse_model(in);
  REQUIRE(std::holds_alternative<Automaton>(parsed));
  CHECK(graph_equal(std::get<Automaton>(parsed), ring));
  CHECK(to_text(std::get<Automaton>(parsed)) == text);
}

TEST_CASE("counter automata round-trip with their increments") {
  Rng rng(7);
  CounterAutomaton ac = random_counter_automaton(rng, 5, 2, 2, 3);
  std::string text = to_text(ac);
  std::istringstream in(text);
  Model parsed = parse_model(in);
  REQUIRE(std::holds_alternative<CounterAutomaton>(parsed));
  const CounterAutomaton& back = std::get<CounterAutomaton>(parsed);
  CHECK(back.dimension() == 2);
  CHECK(back.transitions() == ac.transitions());
  CHECK(to_text(back) == text);
}

TEST_CASE("parse errors carry line numbers") {
  auto expect_error = [](const std::string& text, int line) {
    std::istringstream in(text);
    try {
      parse_model(in);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line_number == line);
    }
  };
  expect_error("kind dfa\narity 2\nalphabet a b\nstates 1\ninitial 0\n"
               "accepting 0\ntrans 0 a 0\n", 7);  // wrong symbol arity
  expect_error("kind dfa\nmystery directive\n", 2);
  expect_error("kind dfa\narity 1\nalphabet a\nstates 1\ninitial 0\n"
               "accepting 3\n", 6);  // accepting out of range
  expect_error("kind nfa\narity 1\nalphabet a\ntrans 0 a 0\n", 4);  // states missing
}

TEST_CASE("dfa kind enforces determinism") {
  std::string text =
      "kind dfa\narity 1\nalphabet a\nstates 2\ninitial 0\naccepting 1\n"
      "trans 0 a 0\ntrans 0 a 1\n";
  std::istringstream in(text);
  CHECK_THROWS_AS(parse_model(in), ParseError);
}

TEST_CASE("comments and blank lines are skipped") {
  std::string text =
      "# a comment line\nkind nfa\narity 1\n\nalphabet a b # trailing\n"
      "states 1\ninitial 0\naccepting 0\ntrans 0 b 0\n";
  std::istringstream in(text);
  Model parsed = parse_model(in);
  CHECK(std::holds_alternative<Automaton>(parsed));
  CHECK(accepts(std::get<Automaton>(parsed), {1}));
}

TEST_CASE("DOT export mentions every state and transition label") {
  Automaton ring = token_ring().automaton();
  std::string dot = to_dot(ring);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("T/N") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
  for (StateId q = 0; q < ring.num_states(); ++q)
    CHECK(dot.find("q" + std::to_string(q)) != std::string::npos);
  // counter DOT carries increments
  Rng rng(3);
  CounterAutomaton ac = random_counter_automaton(rng, 3, 2, 1, 2);
  if (!ac.transitions().empty())
    CHECK(to_dot(ac).find("+") != std::string::npos);
}

TEST_CASE("DOT decomposition coloring marks parts") {
  GrowDecomposition grow;
  grow.head = {0};
  grow.increments = {{1}};
  grow.tail_end = {2};
  StateMap id;
  id.add(1, 1);
  grow.increment_iso = {id};
  grow.part_of = {-1, 0, -2};
  Alphabet ab(std::vector<std::string>{"a"});
  AutomatonBuilder b(ab, Kind::FiniteWord);
  b.add_state();
  b.add_state();
  b.add_state(true);
  b.add_trans(0, 0, 1);
  b.add_trans(1, 0, 2);
  b.initial.push_back(0);
  std::string dot = to_dot(b.build(), &grow);
  CHECK(dot.find("fillcolor") != std::string::npos);
}

TEST_CASE("emitted canonical forms parse back to the same canonical form") {
  Rng rng(2027);
  for (int round = 0; round < 30; ++round) {
    Automaton a = canonical_min(random_automaton(rng, 6, 3, Kind::FiniteWord));
    std::istringstream in(to_text(a));
    Model parsed = parse_model(in);
    CHECK(graph_equal(std::get<Automaton>(parsed), a));
  }
}

TEST_CASE("weak-buchi kind round-trips") {
  Rng rng(11);
  Automaton w = random_weak_automaton(rng, 5, 2);
  std::string text = to_text(w);
  CHECK(text.find("kind weak-buchi") != std::string::npos);
  std::istringstream in(text);
  Model parsed = parse_model(in);
  const Automaton& back = std::get<Automaton>(parsed);
  CHECK(back.kind() == Kind::WeakBuchi);
  CHECK(graph_equal(back, w));
}
