// structural.hpp -- marker automata and the structural candidate filter
//
// The filter answers, without composing verifiers: could observing a second
// module's events disambiguate a module's faults? It marks faulty-side
// behaviour that shows a shared event, then a private observable of the
// candidate, then a closing shared event -- and checks the candidate can
// actually supply that bracket.
#pragma once

#include <string>
#include <vector>

#include "automaton.hpp"
#include "fault.hpp"

namespace moddiag {

enum class MarkerRole { L1Marker, L2Marker };

struct MarkerAutomaton {
  Automaton automaton;
  MarkerRole role = MarkerRole::L1Marker;
};

/// 3-state marker over sigma1: counts two occurrences of events shared with
/// sigma2; state 2 (marked) means "at least two shared events seen".
MarkerAutomaton build_l1_marker(const Alphabet& sigma1, const Alphabet& sigma2);

/// 4-state marker over sigma2: shared event, then a candidate-private
/// observable, then another shared event; state 3 is marked.
MarkerAutomaton build_l2_marker(const Alphabet& sigma1, const Alphabet& sigma2);

struct TriggerResult {
  std::vector<std::string> trigger;  // shared events opening the bracket (marker 0 -> 1)
  std::vector<std::string> confirm;  // shared events closing it (marker 1 -> 2)
  bool marked_any = false;           // some faulty-side string drives the marker to its goal
};

/// Runs the faulty-side test language of `faulty` (suffixes from each fault
/// transition onward; the shared pre-fault prefix is excluded) through the
/// L1 marker for the candidate's alphabet. Events are reported in sigma1
/// order. A module with no reachable fault yields empty sets.
TriggerResult trigger_events(const FaultLabeledAutomaton& faulty, const Alphabet& candidate_alphabet);

struct SupportResult {
  bool ok = false;
  std::vector<std::string> path;   // accepting path when ok, else path to the violation
  std::vector<std::string> cycle;  // present when the violation is a silent cycle
  std::string reason;              // "", "no-trigger", "dead-support", "silent-cycle"
};

/// Can the candidate walk trigger -> private observable -> confirm/trigger?
/// ok requires every bracket opened to be closable (co-reachability of the
/// goal) and no way to loop forever between open and close.
SupportResult support_check(const Automaton& candidate, const Alphabet& sigma1,
                            const std::vector<std::string>& trigger,
                            const std::vector<std::string>& confirm);

struct StructuralReport {
  std::string faulty_module;
  std::string candidate_module;
  std::vector<std::string> common;
  std::vector<std::string> trigger;
  std::vector<std::string> confirm;
  bool marked_any = false;
  bool support_ok = false;  // marked_any and the support check both hold
  std::vector<std::string> support_path;
  bool strict_ok = false;  // two-sided variant (non-faulty behaviour must be supported too)
  bool recommend = false;
  std::vector<std::string> notes;

  friend bool operator==(const StructuralReport& a, const StructuralReport& b) {
    return a.faulty_module == b.faulty_module && a.candidate_module == b.candidate_module &&
           a.common == b.common && a.trigger == b.trigger && a.confirm == b.confirm &&
           a.marked_any == b.marked_any && a.support_ok == b.support_ok &&
           a.support_path == b.support_path && a.strict_ok == b.strict_ok &&
           a.recommend == b.recommend && a.notes == b.notes;
  }
};

/// Full filter for one (faulty, candidate) pair. recommend holds when the
/// faulty side reaches the marker goal and the candidate supports the
/// bracket; with strict=true the non-faulty side must pass the same test.
StructuralReport analyze_pair(const std::string& faulty_name, const Automaton& faulty,
                              const std::string& candidate_name, const Automaton& candidate,
                              bool strict = false);

/// Same, against a pre-labelled faulty side (used when the faulty side is a
/// block composition labelled by one module's faults).
StructuralReport analyze_pair(const std::string& faulty_name, const FaultLabeledAutomaton& faulty,
                              const std::string& candidate_name, const Automaton& candidate,
                              bool strict = false);

}  // namespace moddiag
