#include "doctest.h"

#include <set>

#include "core/compose.hpp"
#include "core/errors.hpp"
#include "core/verifier.hpp"
#include "support/testers.hpp"

using namespace moddiag;
using moddiag::test::load_fixture;

namespace {

int label_rank(FaultLabel l) { return l == FaultLabel::F ? 1 : 0; }

// Labels never fall back from F to N, accounting for stored orientation.
void check_monotone(const Verifier& v) {
  for (const auto& t : v.transitions) {
    int fl = label_rank(v.left_label(t.from));
    int fr = label_rank(v.right_label(t.from));
    int tl = label_rank(v.left_label(t.to));
    int tr = label_rank(v.right_label(t.to));
    if (t.swapped) std::swap(tl, tr);
    CHECK(tl >= fl);
    CHECK(tr >= fr);
  }
}

}  // namespace

TEST_SUITE("fault_split") {
  TEST_CASE("fault events label states reached through them") {
    auto g1 = load_fixture("g1").automaton;
    auto fla = fault_split(g1);
    REQUIRE(fla.automaton.state_count() == 4);
    CHECK(fla.automaton.state_names == std::vector<std::string>{"0", "1", "2", "3"});
    CHECK(fla.label == std::vector<FaultLabel>{FaultLabel::N, FaultLabel::N, FaultLabel::F,
                                               FaultLabel::F});
    CHECK(fla.display(2) == "2F");
    CHECK(fla.display(1) == "1N");
    CHECK(fla.has_faulty());
  }

  TEST_CASE("an explicit fault list overrides the alphabet flags") {
    auto g1 = load_fixture("g1").automaton;
    auto none = fault_split(g1, std::vector<std::string>{});
    CHECK_FALSE(none.has_faulty());
    CHECK(none.label ==
          std::vector<FaultLabel>{FaultLabel::N, FaultLabel::N, FaultLabel::N, FaultLabel::N});

    auto same = fault_split(g1, std::vector<std::string>{"f"});
    CHECK(same.label == fault_split(g1).label);

    CHECK_THROWS_AS(fault_split(g1, std::vector<std::string>{"zz"}), ModelError);
  }

  TEST_CASE("states reachable before and after a fault are unfolded") {
    Automaton a;
    a.alphabet.add({"f", false, true});
    a.alphabet.add({"a", false, false});
    a.alphabet.add({"b", false, false});
    a.add_state("0");
    a.add_state("1");
    a.initial = 0;
    a.add_transition("0", "f", "1");
    a.add_transition("0", "a", "1");
    a.add_transition("1", "b", "1");

    auto fla = fault_split(a);
    REQUIRE(fla.automaton.state_count() == 3);
    CHECK(fla.automaton.state_names == std::vector<std::string>{"0", "1,F", "1,N"});
    CHECK(fla.label ==
          std::vector<FaultLabel>{FaultLabel::N, FaultLabel::F, FaultLabel::N});
    CHECK(fla.base_name == std::vector<std::string>{"0", "1", "1"});
    CHECK(fla.display(1) == "1F");
    CHECK(fla.display(2) == "1N");
    // each copy keeps its own b loop
    const auto& g = fla.automaton;
    CHECK(g.next(1, g.alphabet.index_of("b")) == 1);
    CHECK(g.next(2, g.alphabet.index_of("b")) == 2);
  }

  TEST_CASE("marked states act as the fault specification when no event is flagged") {
    Automaton a;
    a.alphabet.add({"a", true, false});
    a.alphabet.add({"b", true, false});
    a.add_state("0");
    a.add_state("1", true);
    a.add_state("2");
    a.initial = 0;
    a.add_transition(0, 0, 1);
    a.add_transition(1, 1, 2);

    auto fla = fault_split(a);
    CHECK(fla.label ==
          std::vector<FaultLabel>{FaultLabel::N, FaultLabel::F, FaultLabel::F});
    CHECK(fla.automaton.state_names == std::vector<std::string>{"0", "1", "2"});
  }

  TEST_CASE("no fault specification at all is an error") {
    Automaton a;
    a.alphabet.add({"a", true, false});
    a.add_state("0");
    a.initial = 0;
    CHECK_THROWS_AS(fault_split(a), ModelError);
  }

  TEST_CASE("labels are monotone along transitions") {
    std::mt19937 rng(41);
    moddiag::test::RandomModelOpts opts;
    for (int i = 0; i < 30; ++i) {
      auto fla = moddiag::test::random_automaton(rng, opts);
      auto split = fault_split(fla);
      for (const auto& t : split.automaton.transitions) {
        CHECK(label_rank(split.label[t.to]) >= label_rank(split.label[t.from]));
      }
    }
  }
}

TEST_SUITE("verifier") {
  TEST_CASE("pair-state space of the first example module") {
    auto fla = fault_split(load_fixture("g1").automaton);
    auto v = build_verifier(fla, {"c"});

    // discovery order is fixed by the state/event declaration order
    CHECK(v.state_names() == std::vector<std::string>{"0N;0N", "1N;0N", "2F;0N", "1N;1N",
                                                      "1N;2F", "2F;2F", "3F;0N", "1N;3F",
                                                      "3F;2F", "3F;3F"});
    CHECK(v.states.size() == 10);
    check_monotone(v);
  }

  TEST_CASE("mask events move both runs, private events move one") {
    auto fla = fault_split(load_fixture("g1").automaton);
    auto v = build_verifier(fla, {"c"});
    for (const auto& t : v.transitions) {
      bool is_mask = fla.automaton.alphabet.at(t.event).name == "c";
      CHECK(is_mask == (t.moved == Moved::Both));
    }
  }

  TEST_CASE("mask must name observable events of the alphabet") {
    auto fla = fault_split(load_fixture("g1").automaton);
    CHECK_THROWS_AS(build_verifier(fla, {"zz"}), ModelError);
    CHECK_THROWS_AS(build_verifier(fla, {"a"}), ModelError);  // a is unobservable
  }

  TEST_CASE("witness of the first example: confused pair fbc* / ac*") {
    auto fla = fault_split(load_fixture("g1").automaton);
    auto v = build_verifier(fla, {"c"});
    auto w = find_indeterminate_cycle(v);
    REQUIRE(w.has_value());
    CHECK(w->stem == std::vector<std::string>{"a", "f", "b"});
    CHECK(w->cycle == std::vector<std::string>{"c"});
    CHECK(w->cycle_states == std::vector<std::string>{"1N;3F"});
    CHECK(w->faulty == "fbc*");
    CHECK(w->nonfaulty == "ac*");
    CHECK(w->horizon == 4);
  }

  TEST_CASE("both indeterminate loops of the example are reported for display") {
    auto fla = fault_split(load_fixture("g1").automaton);
    auto v = build_verifier(fla, {"c"});
    auto idx = indeterminate_states(v, fla.automaton.alphabet.names());
    std::vector<std::string> names;
    for (int s : idx) names.push_back(v.state_name(s));
    CHECK(names == std::vector<std::string>{"3F;0N", "1N;3F"});
  }

  TEST_CASE("the composed example has eleven pair-states and no witness") {
    auto g = parallel_compose(load_fixture("g1").automaton, load_fixture("g2").automaton);
    auto fla = fault_split(g);
    auto v = build_verifier(fla, {"c", "e"});
    CHECK(v.state_names() ==
          std::vector<std::string>{"0,0N;0,0N", "1,0N;0,0N", "2,0F;0,0N", "1,0N;1,0N",
                                   "1,0N;2,0F", "2,0F;2,0F", "3,1F;0,0N", "1,0N;3,1F",
                                   "3,1F;2,0F", "3,1F;3,1F", "3,2F;3,2F"});
    CHECK_FALSE(find_indeterminate_cycle(v).has_value());
    check_monotone(v);
  }

  TEST_CASE("progress events gate which cycles count") {
    auto fla = fault_split(load_fixture("g1").automaton);
    auto v = build_verifier(fla, {"c"});
    CHECK(find_indeterminate_cycle(v, {"c"}).has_value());
    CHECK_FALSE(find_indeterminate_cycle(v, {"b"}).has_value());
    CHECK_FALSE(find_indeterminate_cycle(v, {}).has_value());
  }

  TEST_CASE("no faulty states means no witness") {
    auto g1 = load_fixture("g1").automaton;
    auto fla = fault_split(g1, std::vector<std::string>{});
    auto v = build_verifier(fla, {"c"});
    CHECK_FALSE(find_indeterminate_cycle(v).has_value());
  }

  TEST_CASE("all events observable and no fault reachable: the diagonal") {
    Automaton a;
    a.alphabet.add({"a", true, false});
    a.alphabet.add({"b", true, false});
    a.add_state("0");
    a.add_state("1");
    a.add_state("2", true);  // marking supplies the F labels
    a.initial = 0;
    a.add_transition(0, 0, 1);
    a.add_transition(1, 1, 2);
    auto fla = fault_split(a);
    auto v = build_verifier(fla, {"a", "b"});
    CHECK(v.state_names() == std::vector<std::string>{"0N;0N", "1N;1N", "2F;2F"});
    CHECK_FALSE(find_indeterminate_cycle(v).has_value());
  }

  TEST_CASE("monotone labels on random automata") {
    std::mt19937 rng(99);
    moddiag::test::RandomModelOpts opts;
    opts.max_states = 4;
    for (int i = 0; i < 30; ++i) {
      auto fla = fault_split(moddiag::test::random_automaton(rng, opts));
      auto v = build_verifier(fla, fla.automaton.alphabet.observable_names());
      CAPTURE(i);
      check_monotone(v);
    }
  }
}
