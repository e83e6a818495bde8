// checks.hpp -- local / modular / virtual diagnosability verdicts
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "partition.hpp"
#include "system.hpp"
#include "verifier.hpp"

namespace moddiag {

enum class Scope { Local, Modular, Virtual };

std::string scope_name(Scope s);

/// Outcome of one diagnosability question, always tied to a fault module.
struct Verdict {
  Scope scope = Scope::Local;
  std::string module;              // fault module the verdict is about
  std::vector<std::string> block;  // modules whose observations are available
  std::vector<std::string> mask;   // resulting observation mask
  bool diagnosable = true;
  std::optional<Witness> witness;  // present when not diagnosable
  int verifier_states = 0;
  std::vector<std::string> warnings;

  friend bool operator==(const Verdict& a, const Verdict& b) {
    return a.scope == b.scope && a.module == b.module && a.block == b.block && a.mask == b.mask &&
           a.diagnosable == b.diagnosable && a.witness == b.witness &&
           a.verifier_states == b.verifier_states && a.warnings == b.warnings;
  }
};

/// Diagnosability of the module in isolation: own faults, own observables.
/// Modules without any fault specification are vacuously diagnosable and say
/// so in the warnings.
Verdict check_local(const Automaton& module, const std::string& name = "");

/// Definition-level check per fault-carrying module i over the full
/// composition: fault events of module i, observation mask limited to the
/// module's own observables. One verdict per fault module, in module order.
/// `jobs` <= 0 reads MODDIAG_JOBS.
std::vector<Verdict> check_modular(const ModularSystem& sys, int jobs = 0);

/// Same, but each fault module observes the union of observables across its
/// partition block ("virtual module"). The discrete partition reproduces
/// check_modular exactly. Throws ModelError on an invalid partition.
std::vector<Verdict> check_virtual(const ModularSystem& sys, const Partition& partition,
                                   int jobs = 0);

/// Definition-style reference: explores pairs of runs with equal projections
/// and asks whether some confused pair keeps extending the faulty run beyond
/// K/2 events after its fault. Intended as an independent oracle for the
/// verifier; exact for K >= 4*|X|^2 + 2 by the usual pumping argument.
bool oracle_diagnosable(const FaultLabeledAutomaton& fla, const std::vector<std::string>& mask,
                        int bound);

}  // namespace moddiag
