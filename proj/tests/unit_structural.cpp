#include "doctest.h"

#include "core/errors.hpp"
#include "core/structural.hpp"
#include "support/testers.hpp"

using namespace moddiag;
using moddiag::test::load_fixture;

namespace {

StructuralReport analyze_fixtures(const std::string& faulty, const std::string& candidate,
                                  bool strict = false) {
  auto f = load_fixture(faulty);
  auto c = load_fixture(candidate);
  return analyze_pair(f.name, f.automaton, c.name, c.automaton, strict);
}

}  // namespace

TEST_SUITE("markers") {
  TEST_CASE("the two-shared-events marker counts to its marked state") {
    auto g1 = load_fixture("g1").automaton;
    auto g2 = load_fixture("g2").automaton;
    auto mk = build_l1_marker(g1.alphabet, g2.alphabet);
    const auto& a = mk.automaton;
    CHECK(mk.role == MarkerRole::L1Marker);
    REQUIRE(a.state_count() == 3);
    CHECK(a.marked == std::vector<bool>{false, false, true});
    CHECK(a.transitions.size() == 12);  // complete over c,a,f,b

    int c = a.alphabet.index_of("c"), b = a.alphabet.index_of("b");
    int x = a.alphabet.index_of("a"), f = a.alphabet.index_of("f");
    CHECK(a.next(0, c) == 1);  // shared events advance
    CHECK(a.next(0, b) == 1);
    CHECK(a.next(0, x) == 0);  // private events loop
    CHECK(a.next(0, f) == 0);
    CHECK(a.next(1, c) == 2);
    CHECK(a.next(2, c) == 2);  // absorbing
  }

  TEST_CASE("the bracket marker wants shared, private observable, shared") {
    auto g1 = load_fixture("g1").automaton;
    auto g2 = load_fixture("g2").automaton;
    auto mk = build_l2_marker(g1.alphabet, g2.alphabet);
    const auto& a = mk.automaton;
    CHECK(mk.role == MarkerRole::L2Marker);
    REQUIRE(a.state_count() == 4);
    CHECK(a.alphabet.names() == std::vector<std::string>{"c", "b", "e"});
    CHECK(a.marked == std::vector<bool>{false, false, false, true});

    int c = a.alphabet.index_of("c"), b = a.alphabet.index_of("b");
    int e = a.alphabet.index_of("e");
    CHECK(a.next(0, c) == 1);
    CHECK(a.next(0, b) == 1);
    CHECK(a.next(0, e) == 0);
    CHECK(a.next(1, e) == 2);  // only a candidate-private observable advances here
    CHECK(a.next(1, c) == 1);
    CHECK(a.next(2, c) == 3);
    CHECK(a.next(2, b) == 3);
    CHECK(a.next(2, e) == 2);
  }

  TEST_CASE("disjoint alphabets leave the marker stuck at zero") {
    auto g1 = load_fixture("g1").automaton;
    auto gdis = load_fixture("gdis").automaton;
    auto mk = build_l1_marker(g1.alphabet, gdis.alphabet);
    for (int e = 0; e < mk.automaton.alphabet.size(); ++e)
      CHECK(mk.automaton.next(0, e) == 0);
  }

  TEST_CASE("attribute conflicts between the alphabets are rejected") {
    Alphabet a, b;
    a.add({"c", true, false});
    b.add({"c", false, false});
    CHECK_THROWS_AS(build_l1_marker(a, b), ModelError);
  }
}

TEST_SUITE("trigger_events") {
  TEST_CASE("the example pair: b opens, c confirms") {
    auto fla = fault_split(load_fixture("g1").automaton);
    auto tr = trigger_events(fla, load_fixture("g2").automaton.alphabet);
    CHECK(tr.trigger == std::vector<std::string>{"b"});
    CHECK(tr.confirm == std::vector<std::string>{"c"});
    CHECK(tr.marked_any);
  }

  TEST_CASE("a single post-fault shared event never reaches the goal") {
    auto fla = fault_split(load_fixture("g3").automaton);
    auto tr = trigger_events(fla, load_fixture("g4").automaton.alphabet);
    CHECK(tr.trigger == std::vector<std::string>{"b"});
    CHECK(tr.confirm.empty());
    CHECK_FALSE(tr.marked_any);
  }

  TEST_CASE("multiple triggers come back in declaration order") {
    auto fla = fault_split(load_fixture("g5").automaton);
    auto tr = trigger_events(fla, load_fixture("g6").automaton.alphabet);
    CHECK(tr.trigger == std::vector<std::string>{"b", "g"});
    CHECK(tr.confirm == std::vector<std::string>{"c"});
    CHECK(tr.marked_any);
  }

  TEST_CASE("a module with no reachable fault yields nothing") {
    auto fla = fault_split(load_fixture("g1").automaton, std::vector<std::string>{});
    auto tr = trigger_events(fla, load_fixture("g2").automaton.alphabet);
    CHECK(tr.trigger.empty());
    CHECK(tr.confirm.empty());
    CHECK_FALSE(tr.marked_any);
  }
}

TEST_SUITE("support_check") {
  TEST_CASE("the example candidate supplies b, then e, then c") {
    auto g1 = load_fixture("g1").automaton;
    auto g2 = load_fixture("g2").automaton;
    auto sup = support_check(g2, g1.alphabet, {"b"}, {"c"});
    CHECK(sup.ok);
    CHECK(sup.reason.empty());
    CHECK(sup.path == std::vector<std::string>{"b", "e", "c"});
    CHECK(sup.cycle.empty());
  }

  TEST_CASE("no private observable means the bracket never closes") {
    auto g1 = load_fixture("g1").automaton;
    auto twin = load_fixture("g1twin").automaton;
    auto sup = support_check(twin, g1.alphabet, {"b"}, {"c"});
    CHECK_FALSE(sup.ok);
    CHECK(sup.reason == "dead-support");
    CHECK(sup.path == std::vector<std::string>{"a", "b"});
  }

  TEST_CASE("a dead end inside the bracket is dead support") {
    auto g1 = load_fixture("g1").automaton;
    auto g8 = load_fixture("g8").automaton;
    auto sup = support_check(g8, g1.alphabet, {"b"}, {"c"});
    CHECK_FALSE(sup.ok);
    CHECK(sup.reason == "dead-support");
    CHECK(sup.path == std::vector<std::string>{"b"});
  }

  TEST_CASE("shared-only looping between open and close is a silent cycle") {
    auto g1 = load_fixture("g1").automaton;
    auto gs = load_fixture("gsilent").automaton;
    auto sup = support_check(gs, g1.alphabet, {"b"}, {"c"});
    CHECK_FALSE(sup.ok);
    CHECK(sup.reason == "silent-cycle");
    CHECK(sup.path == std::vector<std::string>{"b"});
    CHECK(sup.cycle == std::vector<std::string>{"c"});
  }

  TEST_CASE("an empty trigger set is reported as such") {
    auto g1 = load_fixture("g1").automaton;
    auto g2 = load_fixture("g2").automaton;
    auto sup = support_check(g2, g1.alphabet, {}, {});
    CHECK_FALSE(sup.ok);
    CHECK(sup.reason == "no-trigger");
  }
}

TEST_SUITE("analyze_pair") {
  TEST_CASE("the worked example is recommended") {
    auto rep = analyze_fixtures("g1", "g2");
    CHECK(rep.faulty_module == "g1");
    CHECK(rep.candidate_module == "g2");
    CHECK(rep.common == std::vector<std::string>{"c", "b"});
    CHECK(rep.trigger == std::vector<std::string>{"b"});
    CHECK(rep.confirm == std::vector<std::string>{"c"});
    CHECK(rep.marked_any);
    CHECK(rep.support_ok);
    CHECK(rep.support_path == std::vector<std::string>{"b", "e", "c"});
    CHECK(rep.recommend);
    CHECK(rep.notes.empty());
    CHECK_FALSE(rep.strict_ok);  // the non-faulty side only ever repeats c
  }

  TEST_CASE("strict mode demands support for the non-faulty side too") {
    auto rep = analyze_fixtures("g1", "g2", true);
    CHECK_FALSE(rep.recommend);
    CHECK(rep.support_ok);  // one-sided analysis is unchanged
    // the non-faulty divergence a.c* yields trigger {c}, confirm {c}; after
    // b.e.c the candidate sits in an opened bracket it can never complete
    CHECK(rep.notes == std::vector<std::string>{
              "strict: non-faulty side not supported (dead-support)"});
  }

  TEST_CASE("rejections carry their reason") {
    auto twin = analyze_fixtures("g1", "g1twin");
    CHECK_FALSE(twin.recommend);
    CHECK(twin.notes ==
          std::vector<std::string>{"candidate support fails (dead-support)"});

    auto dis = analyze_fixtures("g1", "gdis");
    CHECK_FALSE(dis.recommend);
    CHECK(dis.common.empty());
    CHECK(dis.notes == std::vector<std::string>{"no shared events"});

    auto silent = analyze_fixtures("g1", "gsilent");
    CHECK_FALSE(silent.recommend);
    CHECK(silent.notes ==
          std::vector<std::string>{"candidate support fails (silent-cycle on {c})"});

    auto short_run = analyze_fixtures("g3", "g4");
    CHECK_FALSE(short_run.recommend);
    CHECK(short_run.notes == std::vector<std::string>{
              "faulty side never shows two shared events after the fault"});
  }

  TEST_CASE("a faulty side without faults is rejected up front") {
    auto rep = analyze_fixtures("g2", "g1twin");
    CHECK_FALSE(rep.recommend);
    CHECK(rep.notes == std::vector<std::string>{"faulty side has no fault specification"});
  }

  TEST_CASE("the full curated table") {
    struct Row {
      const char* faulty;
      const char* candidate;
      bool recommend;
    };
    const Row rows[] = {
        {"g1", "g2", true},      {"g1", "g1twin", false}, {"g1", "gdis", false},
        {"g1", "gsilent", false}, {"g1", "gd", true},     {"g3", "g4", false},
        {"g5", "g6", true},      {"g7", "g2", true},      {"g1", "g8", false},
        {"ga", "gb", true},
    };
    for (const auto& row : rows) {
      CAPTURE(row.faulty);
      CAPTURE(row.candidate);
      CHECK(analyze_fixtures(row.faulty, row.candidate).recommend == row.recommend);
    }
  }
}
