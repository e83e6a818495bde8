#include "doctest.h"

#include <algorithm>

#include "core/dot.hpp"
#include "core/errors.hpp"
#include "core/fsm_format.hpp"
#include "support/testers.hpp"

using namespace moddiag;
using moddiag::test::load_fixture;

namespace {

int count_occurrences(const std::string& text, const std::string& needle) {
  int n = 0;
  for (size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++n;
  return n;
}

void expect_parse_error(const std::string& text, const std::string& message) {
  try {
    parse_fsm(text);
    FAIL_CHECK("expected a parse error: ", message);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()) == message);
  }
}

}  // namespace

TEST_SUITE("fsm_format") {
  TEST_CASE("fixture files parse into the expected structure") {
    auto na = load_fixture("g1");
    CHECK(na.name == "g1");
    const auto& a = na.automaton;
    CHECK(a.alphabet.names() == std::vector<std::string>{"c", "a", "f", "b"});
    CHECK(a.alphabet.at(0).observable);
    CHECK_FALSE(a.alphabet.at(1).observable);
    CHECK(a.alphabet.at(2).fault);
    CHECK(a.state_names == std::vector<std::string>{"0", "1", "2", "3"});
    CHECK(a.initial == 0);
    CHECK(a.transitions.size() == 6);
  }

  TEST_CASE("serialize emits the canonical document") {
    auto na = load_fixture("g2");
    CHECK(serialize_fsm(na) ==
          "name: g2\n"
          "events:\n"
          "  c o\n"
          "  b u\n"
          "  e o\n"
          "states:\n"
          "  0 init\n"
          "  1\n"
          "  2\n"
          "trans:\n"
          "  0 c 0\n"
          "  0 b 1\n"
          "  1 e 2\n"
          "  2 c 2\n");
  }

  TEST_CASE("parse then serialize is idempotent") {
    for (const char* stem : {"g1", "g2", "gd", "ga", "gb"}) {
      auto na = load_fixture(stem);
      auto canonical = serialize_fsm(na);
      auto again = parse_fsm(canonical);
      CAPTURE(stem);
      CHECK(serialize_fsm(again) == canonical);
      CHECK(again.automaton.state_names == na.automaton.state_names);
      CHECK(again.automaton.alphabet == na.automaton.alphabet);
      CHECK(again.automaton.transitions == na.automaton.transitions);
    }
  }

  TEST_CASE("marked states and fault flags round-trip") {
    std::string text =
        "name: t\n"
        "events:\n"
        "  o o\n"
        "  f u f\n"
        "states:\n"
        "  s0 init\n"
        "  s1 marked\n"
        "trans:\n"
        "  s0 f s1\n";
    auto na = parse_fsm(text);
    CHECK(na.automaton.marked == std::vector<bool>{false, true});
    CHECK(na.automaton.alphabet.at(1).fault);
    CHECK(serialize_fsm(na) == text);
  }

  TEST_CASE("full-line comments and blank lines are ignored") {
    auto na = parse_fsm(
        "# leading comment\n"
        "name: t\n"
        "\n"
        "events:\n"
        "  a o\n"
        "   # indented comment\n"
        "states:\n"
        "  0 init\n"
        "trans:\n");
    CHECK(na.automaton.alphabet.names() == std::vector<std::string>{"a"});
    CHECK(na.automaton.transitions.empty());
  }

  TEST_CASE("errors carry the offending line number") {
    expect_parse_error(
        "name: t\nevents:\n  a o\n  a u\nstates:\n  0 init\ntrans:\n",
        "line 4: duplicate event 'a'");
    expect_parse_error(
        "name: t\nevents:\n  a o\nstates:\n  0 init\n  1 init\ntrans:\n",
        "line 6: second 'init' state '1' (first at line 5)");
    expect_parse_error(
        "name: t\nevents:\n  a o\nstates:\n  0 init\ntrans:\n  0 b 0\n",
        "line 7: unknown event 'b'");
    expect_parse_error(
        "name: t\nevents:\n  a o\nstates:\n  0 init\ntrans:\n  0 a\n",
        "line 7: expected '<src> <event> <dst>'");
    expect_parse_error(
        "name: t\nevents:\n  a x\nstates:\n  0 init\ntrans:\n",
        "line 3: unknown event flag 'x'");
    expect_parse_error(
        "name: t\nevents:\n  a o f\nstates:\n  0 init\ntrans:\n",
        "line 3: event 'a' declared both observable and fault");
    expect_parse_error(
        "name: t\nevents:\n  a|b o\nstates:\n  0 init\ntrans:\n",
        "line 3: event name 'a|b' contains reserved characters");
    expect_parse_error("events:\n", "line 1: missing 'name:' before 'events:'");
    expect_parse_error("x\n", "line 1: expected 'name: <id>'");
    expect_parse_error("name: t\nstates:\n", "line 2: 'states:' out of order");
    expect_parse_error("name: t\nevents:\nstates:\n  0\ntrans:\n",
                       "line 5: no state carries 'init'");
    expect_parse_error("name: t\nevents:\n  a o\nstates:\n  0 init\n",
                       "line 5: missing section (events:/states:/trans:)");
  }

  TEST_CASE("semantic validation failures surface as parse errors") {
    expect_parse_error(
        "name: t\nevents:\n  a o\nstates:\n  0 init\ntrans:\n  0 a 0\n  0 a 0\n",
        "line 8: duplicate transition (0,a)");
  }
}

TEST_SUITE("dot") {
  TEST_CASE("automaton rendering: one node per state, one edge per transition") {
    auto g2 = load_fixture("g2").automaton;
    auto dot = to_dot(g2, "g2");
    CHECK(count_occurrences(dot, "shape=circle") == 3);
    CHECK(count_occurrences(dot, "->") == 4);
    CHECK(count_occurrences(dot, "style=bold") == 1);  // the initial state
    CHECK(dot.find("digraph \"g2\"") == 0);
  }

  TEST_CASE("marked states get a double border") {
    Automaton a;
    a.alphabet.add({"x", true, false});
    a.add_state("s", true);
    a.initial = 0;
    auto dot = to_dot(a);
    CHECK(count_occurrences(dot, "doublecircle") == 1);
  }

  TEST_CASE("verifier rendering highlights the indeterminate loops") {
    auto fla = fault_split(load_fixture("g1").automaton);
    auto v = build_verifier(fla, {"c"});
    auto dot = to_dot(v, fla.automaton.alphabet.names());
    CHECK(count_occurrences(dot, "shape=box") == 10);
    CHECK(count_occurrences(dot, "fillcolor=lightpink") == 2);
    CHECK(dot.find("\"1N;3F\"") != std::string::npos);
    CHECK(dot.find("\"3F;0N\"") != std::string::npos);
  }
}
