// verifier.hpp -- twin-plant verifier and indeterminate-cycle search
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fault.hpp"

namespace moddiag {

/// Which run of the pair a transition advances.
enum class Moved { Left, Right, Both };

struct VerifierTransition {
  int from = -1;
  int event = -1;
  Moved moved = Moved::Both;
  bool swapped = false;  // successor was stored with sides flipped
  int to = -1;
};

/// Quotient twin plant: states are unordered pairs of labelled states, stored
/// in the orientation they were first discovered in. Events in the mask move
/// both runs synchronously, all other events move exactly one run. Labels are
/// monotone along transitions (never F back to N), so a pair-state's mix of
/// labels is a property of the state.
struct Verifier {
  FaultLabeledAutomaton source;
  std::vector<std::string> mask;

  struct Pair {
    int left = -1;
    int right = -1;
  };
  std::vector<Pair> states;  // discovery order; states[0] is the initial pair
  std::vector<VerifierTransition> transitions;
  std::vector<std::vector<int>> out;  // per state, transition indices in generation order

  FaultLabel left_label(int s) const { return source.label[states[s].left]; }
  FaultLabel right_label(int s) const { return source.label[states[s].right]; }
  bool mixed(int s) const { return left_label(s) != right_label(s); }

  /// Display name, e.g. "1N;3F".
  std::string state_name(int s) const {
    return source.display(states[s].left) + ";" + source.display(states[s].right);
  }
  std::vector<std::string> state_names() const;
};

/// Builds the verifier of `fla` under the observation mask (event names; each
/// must be an observable event of the alphabet). Successors of each state are
/// generated in alphabet order, mask events first as a synchronous move, then
/// left-run and right-run moves for the rest.
Verifier build_verifier(const FaultLabeledAutomaton& fla, const std::vector<std::string>& mask);

/// A diagnosability counterexample read off the verifier.
struct Witness {
  std::vector<std::string> stem;          // events from the initial pair to the cycle
  std::vector<std::string> cycle;         // events around the cycle
  std::vector<std::string> cycle_states;  // pair-state names along the cycle
  std::string faulty;                     // confused pair, e.g. "fbc*" vs "ac*"
  std::string nonfaulty;
  int horizon = 0;  // |stem| + |cycle|

  friend bool operator==(const Witness& a, const Witness& b) {
    return a.stem == b.stem && a.cycle == b.cycle && a.cycle_states == b.cycle_states &&
           a.faulty == b.faulty && a.nonfaulty == b.nonfaulty && a.horizon == b.horizon;
  }
};

/// Searches for an indeterminate cycle: a reachable cycle of mixed-label
/// pair-states that advances the faulty run through at least one event from
/// `progress` (defaults to the whole alphabet). Detection runs over the
/// strongly connected components of the mixed-state subgraph.
///
/// The returned witness is canonical: among qualifying components the one
/// whose access path has the fewest observable events wins; ties compare the
/// stem and then the cycle lexicographically by event declaration order.
/// This keeps reports stable across runs.
std::optional<Witness> find_indeterminate_cycle(const Verifier& v);
std::optional<Witness> find_indeterminate_cycle(const Verifier& v,
                                                const std::vector<std::string>& progress);

/// All pair-states lying on some indeterminate cycle (for DOT highlighting).
std::vector<int> indeterminate_states(const Verifier& v,
                                      const std::vector<std::string>& progress);

}  // namespace moddiag
