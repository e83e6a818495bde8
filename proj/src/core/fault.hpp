// fault.hpp -- normal/faulty labelling of automata
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "automaton.hpp"

namespace moddiag {

enum class FaultLabel { N, F };

inline char label_char(FaultLabel l) { return l == FaultLabel::F ? 'F' : 'N'; }

/// Automaton whose states carry a normal/faulty label. When the source
/// automaton had states reachable both before and after a fault, those states
/// were unfolded into an N and an F copy ("x,N" / "x,F"); base_state maps each
/// state back to the source.
struct FaultLabeledAutomaton {
  Automaton automaton;
  std::vector<FaultLabel> label;
  std::vector<int> base_state;
  std::vector<std::string> base_name;  // source state names, for display

  bool has_faulty() const {
    for (auto l : label)
      if (l == FaultLabel::F) return true;
    return false;
  }

  /// Display name used by the verifier and reports: base name + label letter,
  /// e.g. "3F". Unambiguous even for unfolded pairs.
  std::string display(int s) const { return base_name[s] + label_char(label[s]); }
};

/// Splits `a` into N/F-labelled states. A state is F when every path reaching
/// it contains a fault event, N when no path does; states reachable both ways
/// are unfolded. Labels are monotone: no transition leads from F back to N.
///
/// fault_events overrides which events count as faults (they must exist in
/// the alphabet); pass an explicit empty list for "no faults", which labels
/// everything N. Without an override the alphabet's fault-flagged events are
/// used; if there are none but marked states exist, the marked states act as
/// a state-based fault specification (F = marked or reachable from marked,
/// no unfolding). Throws ModelError when no fault specification exists.
FaultLabeledAutomaton fault_split(const Automaton& a,
                                  std::optional<std::vector<std::string>> fault_events = std::nullopt);

}  // namespace moddiag
