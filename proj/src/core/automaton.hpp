// automaton.hpp -- deterministic partial-transition automata and basic ops
#pragma once

#include <string>
#include <vector>

#include "event.hpp"

namespace moddiag {

struct Transition {
  int from = -1;
  int event = -1;
  int to = -1;

  friend bool operator==(const Transition& a, const Transition& b) {
    return a.from == b.from && a.event == b.event && a.to == b.to;
  }
};

struct ValidationReport {
  std::vector<std::string> violations;  // hard errors
  std::vector<std::string> warnings;    // deadlock / unreachable states
  bool ok() const { return violations.empty(); }
};

/// G = (X, Sigma, delta, x0, Xm). delta is partial and deterministic.
/// States and transitions keep declaration order; all library operations
/// traverse them in that order.
///
/// The struct itself is permissive -- you can build something broken and ask
/// validate() what is wrong with it. Operations that need a sane automaton
/// first call compile(), which indexes the transition table and throws
/// ModelError when validate() reports violations.
class Automaton {
 public:
  Alphabet alphabet;
  std::vector<std::string> state_names;
  std::vector<bool> marked;
  int initial = -1;
  std::vector<Transition> transitions;

  int state_count() const { return static_cast<int>(state_names.size()); }

  int add_state(const std::string& name, bool is_marked = false);
  void add_transition(int from, int event, int to);
  /// By-name convenience for tests and builders; throws ModelError on unknown
  /// names.
  void add_transition(const std::string& from, const std::string& event, const std::string& to);

  int find_state(const std::string& name) const;  // -1 if absent

  ValidationReport validate() const;

  /// Builds the delta lookup table. Throws ModelError listing the violations
  /// when the automaton is not valid.
  void compile();
  bool compiled() const { return !delta_.empty() || state_count() == 0; }

  /// Successor of s on event e, -1 when undefined. Requires compile().
  int next(int s, int e) const { return delta_[static_cast<size_t>(s) * alphabet.size() + e]; }

  std::vector<int> defined_events(int s) const;  // events enabled at s, in alphabet order

 private:
  void build_delta();  // fills delta_ without validating

  std::vector<int> delta_;
};

/// Sub-automaton reachable from the initial state. Keeps original names,
/// relative state order and transition declaration order.
Automaton accessible(const Automaton& a);

/// All strings of length <= max_len in the (prefix-closed) language of `a`,
/// in length order, ties broken by alphabet declaration order.
std::vector<std::vector<std::string>> enumerate_strings(const Automaton& a, int max_len);

/// States with no outgoing transition, in state order.
std::vector<int> deadlock_states(const Automaton& a);

/// Reachability-canonical form: states renumbered by BFS discovery order
/// (events walked in alphabet order). Two automata over the same alphabet are
/// isomorphic up to state renaming iff their canonical forms compare equal.
Automaton canonical_form(const Automaton& a);

bool same_shape(const Automaton& a, const Automaton& b);  // compares canonical forms

}  // namespace moddiag
