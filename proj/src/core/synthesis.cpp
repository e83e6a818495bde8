#include "synthesis.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "errors.hpp"
#include "jobs.hpp"

namespace moddiag {

std::vector<RankedCandidate> rank_candidates(const ModularSystem& sys,
                                             const std::vector<std::string>& block,
                                             const std::string& fault_module, int jobs) {
  int fi = sys.index_of(fault_module);
  if (fi < 0) throw ModelError("unknown module '" + fault_module + "'");
  std::set<std::string> in_block(block.begin(), block.end());
  if (!in_block.count(fault_module)) throw ModelError("fault module must belong to the block");

  Automaton faulty_side = sys.compose(block);
  FaultLabeledAutomaton fla = fault_split(faulty_side, sys.module(fi).alphabet.fault_names());

  std::vector<int> outside;
  for (int i = 0; i < sys.size(); ++i)
    if (!in_block.count(sys.name(i))) outside.push_back(i);

  auto analyzed = ordered_parallel<RankedCandidate>(
      static_cast<int>(outside.size()), job_count(jobs), [&](int k) {
        int i = outside[k];
        RankedCandidate rc;
        rc.module = sys.name(i);
        rc.report = analyze_pair(fault_module, fla, sys.name(i), sys.module(i));
        return rc;
      });

  // recommend first, then fewer shared events, then module order
  std::stable_sort(analyzed.begin(), analyzed.end(),
                   [&](const RankedCandidate& a, const RankedCandidate& b) {
                     if (a.report.recommend != b.report.recommend) return a.report.recommend;
                     return a.report.common.size() < b.report.common.size();
                   });
  return analyzed;
}

std::vector<RankedCandidate> rank_candidates(const ModularSystem& sys,
                                             const std::string& fault_module, int jobs) {
  return rank_candidates(sys, {fault_module}, fault_module, jobs);
}

namespace {

bool all_pass(const std::vector<Verdict>& verdicts) {
  for (const auto& v : verdicts)
    if (!v.diagnosable) return false;
  return true;
}

}  // namespace

SynthesisResult synthesize_greedy(const ModularSystem& sys, int jobs) {
  if (sys.size() == 0) throw ModelError("empty system");
  SynthesisResult res;
  res.strategy = "greedy";
  Partition partition = Partition::discrete(sys);

  while (true) {
    res.verdicts = check_virtual(sys, partition, jobs);
    res.candidates_examined++;
    if (all_pass(res.verdicts)) {
      res.success = true;
      break;
    }
    // first failing fault module, in module order (check_virtual reports them
    // in that order already)
    std::string failing;
    for (const auto& v : res.verdicts)
      if (!v.diagnosable) {
        failing = v.module;
        break;
      }
    int bi = partition.block_of(failing);
    std::vector<std::string> block = partition.blocks[bi];

    auto ranked = rank_candidates(sys, block, failing, jobs);
    for (const auto& rc : ranked) res.reports.push_back(rc.report);
    if (ranked.empty()) {
      res.notes.push_back("module '" + failing + "' still fails and no candidates remain");
      break;
    }
    const std::string& pick = ranked.front().module;
    if (!ranked.front().report.recommend)
      res.notes.push_back("no recommended candidate for '" + failing + "'; merging '" + pick +
                          "' anyway");
    // merge the candidate's whole block into ours
    int ci = partition.block_of(pick);
    if (partition.blocks[ci].size() > 1)
      res.notes.push_back("candidate '" + pick + "' brings its block " +
                          Partition{{partition.blocks[ci]}}.to_string() + " along");
    std::vector<std::string> merged = block;
    merged.insert(merged.end(), partition.blocks[ci].begin(), partition.blocks[ci].end());
    Partition next;
    for (int b = 0; b < static_cast<int>(partition.blocks.size()); ++b) {
      if (b == bi)
        next.blocks.push_back(merged);
      else if (b != ci)
        next.blocks.push_back(partition.blocks[b]);
    }
    partition = next.canonical(sys);
  }
  res.partition = partition.canonical(sys);
  return res;
}

namespace {

// Restricted growth strings enumerate set partitions canonically: entry i
// gets a block id <= 1 + max of the previous ids.
void rgs_enumerate(int n, const std::function<bool(const std::vector<int>&)>& consume) {
  std::vector<int> rgs(n, 0);
  std::function<bool(int, int)> rec = [&](int i, int max_id) -> bool {
    if (i == n) return consume(rgs);
    for (int b = 0; b <= max_id + 1; ++b) {
      rgs[i] = b;
      if (!rec(i + 1, std::max(max_id, b))) return false;
    }
    return true;
  };
  rec(0, -1);
}

}  // namespace

SynthesisResult synthesize_exhaustive(const ModularSystem& sys, int max_modules, int jobs) {
  if (sys.size() == 0) throw ModelError("empty system");
  if (sys.size() > max_modules)
    throw ModelError("system has " + std::to_string(sys.size()) +
                     " modules; exhaustive search is capped at " + std::to_string(max_modules));
  SynthesisResult res;
  res.strategy = "exhaustive";

  int n = sys.size();
  // bucket the restricted-growth strings by block count so we can try the
  // finest partitions (fewest merges) first
  std::vector<std::vector<std::vector<int>>> by_blocks(n + 1);
  rgs_enumerate(n, [&](const std::vector<int>& rgs) {
    int blocks = n == 0 ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
    by_blocks[blocks].push_back(rgs);
    return true;
  });

  auto to_partition = [&](const std::vector<int>& rgs) {
    int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    Partition p;
    p.blocks.assign(blocks, {});
    for (int i = 0; i < n; ++i) p.blocks[rgs[i]].push_back(sys.name(i));
    return p;
  };

  for (int blocks = n; blocks >= 1; --blocks) {
    for (const auto& rgs : by_blocks[blocks]) {
      Partition p = to_partition(rgs);
      auto verdicts = check_virtual(sys, p, jobs);
      res.candidates_examined++;
      if (all_pass(verdicts)) {
        res.success = true;
        res.partition = p.canonical(sys);
        res.verdicts = std::move(verdicts);
        return res;
      }
      if (res.verdicts.empty() || blocks == 1) {
        // keep the most recent failure for reporting
        res.partition = p.canonical(sys);
        res.verdicts = std::move(verdicts);
      }
    }
  }
  res.notes.push_back("no partition passes; reporting the coarsest attempt");
  return res;
}

}  // namespace moddiag
