// synthesis.hpp -- searching for virtual-module partitions
#pragma once

#include <string>
#include <vector>

#include "checks.hpp"
#include "partition.hpp"
#include "structural.hpp"
#include "system.hpp"

namespace moddiag {

struct RankedCandidate {
  std::string module;
  StructuralReport report;
};

/// Orders the modules outside `block` as merge candidates for the block's
/// fault module: recommended ones first, then fewer shared events, then
/// module order. The faulty side is the block's composition labelled by the
/// fault module's fault events.
std::vector<RankedCandidate> rank_candidates(const ModularSystem& sys,
                                             const std::vector<std::string>& block,
                                             const std::string& fault_module, int jobs = 0);

/// Convenience overload: block = the fault module alone.
std::vector<RankedCandidate> rank_candidates(const ModularSystem& sys,
                                             const std::string& fault_module, int jobs = 0);

struct SynthesisResult {
  bool success = false;
  std::string strategy;  // "greedy" or "exhaustive"
  Partition partition;   // canonical; on failure, the last partition tried
  std::vector<Verdict> verdicts;
  std::vector<StructuralReport> reports;  // structural analyses performed, in order
  int candidates_examined = 0;            // partitions submitted to check_virtual
  std::vector<std::string> notes;
};

/// Grows blocks from the discrete partition: while some fault module fails
/// its check, merge its block with the best structurally-ranked candidate and
/// retry. Deterministic; terminates because partitions only get coarser.
SynthesisResult synthesize_greedy(const ModularSystem& sys, int jobs = 0);

/// Tries every partition of the modules, fewest merges first (block count
/// descending, restricted-growth order within a count), and returns the first
/// that passes check_virtual everywhere. Refuses systems with more than
/// max_modules modules.
SynthesisResult synthesize_exhaustive(const ModularSystem& sys, int max_modules = 8, int jobs = 0);

}  // namespace moddiag
