#include "checks.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

#include "errors.hpp"
#include "jobs.hpp"

namespace moddiag {

std::string scope_name(Scope s) {
  switch (s) {
    case Scope::Local: return "local";
    case Scope::Modular: return "modular";
    case Scope::Virtual: return "virtual";
  }
  return "?";
}

namespace {

void warn_deadlocks(const Automaton& a, std::vector<std::string>& warnings) {
  auto dead = deadlock_states(a);
  if (dead.empty()) return;
  std::string msg = "not live: deadlock at";
  for (int s : dead) msg += " '" + a.state_names[s] + "'";
  warnings.push_back(msg);
}

bool has_fault_definition(const Automaton& m) {
  for (const auto& e : m.alphabet.events())
    if (e.fault) return true;
  for (bool b : m.marked)
    if (b) return true;
  return false;
}

Verdict run_verifier(Scope scope, const std::string& module, std::vector<std::string> block,
                     const FaultLabeledAutomaton& fla, const std::vector<std::string>& mask,
                     const std::vector<std::string>& progress) {
  Verdict v;
  v.scope = scope;
  v.module = module;
  v.block = std::move(block);
  v.mask = mask;
  warn_deadlocks(fla.automaton, v.warnings);
  if (!fla.has_faulty()) {
    v.diagnosable = true;
    v.warnings.push_back("no reachable fault; verdict is vacuous");
    return v;
  }
  Verifier ver = build_verifier(fla, mask);
  v.verifier_states = static_cast<int>(ver.states.size());
  auto w = find_indeterminate_cycle(ver, progress);
  v.diagnosable = !w.has_value();
  v.witness = std::move(w);
  return v;
}

}  // namespace

Verdict check_local(const Automaton& module, const std::string& name) {
  Automaton m = module;
  m.compile();
  std::string label = name.empty() ? "module" : name;
  if (!has_fault_definition(m)) {
    Verdict v;
    v.scope = Scope::Local;
    v.module = label;
    v.block = {label};
    v.mask = m.alphabet.observable_names();
    v.diagnosable = true;
    v.warnings.push_back("no fault events; verdict is vacuous");
    warn_deadlocks(m, v.warnings);
    return v;
  }
  FaultLabeledAutomaton fla = fault_split(m);
  return run_verifier(Scope::Local, label, {label}, fla, m.alphabet.observable_names(),
                      m.alphabet.names());
}

namespace {

std::vector<Verdict> check_against_blocks(const ModularSystem& sys, const Partition& partition,
                                          Scope scope, int jobs) {
  auto rep = validate_partition(partition, sys);
  if (!rep.ok()) throw ModelError("invalid partition: " + rep.violations.front());
  Partition canon = partition.canonical(sys);

  Automaton composed = sys.compose_all();

  // fault modules in module order
  std::vector<int> fault_modules;
  for (int i = 0; i < sys.size(); ++i)
    if (!sys.module(i).alphabet.fault_names().empty()) fault_modules.push_back(i);

  auto one = [&](int k) {
    int i = fault_modules[k];
    const Automaton& m = sys.module(i);
    int b = canon.block_of(sys.name(i));
    // observables available to the block, in merged-alphabet order
    std::set<std::string> obs;
    for (const auto& member : canon.blocks[b]) {
      for (const auto& name : sys.module(sys.index_of(member)).alphabet.observable_names())
        obs.insert(name);
    }
    std::vector<std::string> mask;
    for (const auto& e : composed.alphabet.events())
      if (obs.count(e.name)) mask.push_back(e.name);

    FaultLabeledAutomaton fla = fault_split(composed, m.alphabet.fault_names());
    return run_verifier(scope, sys.name(i), canon.blocks[b], fla, mask, m.alphabet.names());
  };

  return ordered_parallel<Verdict>(static_cast<int>(fault_modules.size()), job_count(jobs), one);
}

}  // namespace

std::vector<Verdict> check_modular(const ModularSystem& sys, int jobs) {
  if (sys.size() == 0) throw ModelError("empty system");
  return check_against_blocks(sys, Partition::discrete(sys), Scope::Modular, jobs);
}

std::vector<Verdict> check_virtual(const ModularSystem& sys, const Partition& partition, int jobs) {
  if (sys.size() == 0) throw ModelError("empty system");
  return check_against_blocks(sys, partition, Scope::Virtual, jobs);
}

bool oracle_diagnosable(const FaultLabeledAutomaton& fla, const std::vector<std::string>& mask,
                        int bound) {
  if (bound < 1) throw ModelError("oracle bound must be >= 1");
  const Automaton& g = fla.automaton;
  std::vector<bool> in_mask(g.alphabet.size(), false);
  for (const auto& name : mask) {
    int e = g.alphabet.index_of(name);
    if (e < 0) throw ModelError("unknown event '" + name + "' in observation mask");
    in_mask[e] = true;
  }

  // Configurations (x, y, d): two runs with equal projections so far, the
  // first having taken d events since its fault (saturating at the threshold).
  // Not diagnosable iff some (F, N, threshold) configuration is reachable.
  const int threshold = bound / 2;
  auto faulty = [&](int s) { return fla.label[s] == FaultLabel::F; };

  std::set<std::tuple<int, int, int>> seen;
  std::deque<std::tuple<int, int, int>> queue;
  auto push = [&](int x, int y, int d) {
    if (d > threshold) d = threshold;
    if (seen.emplace(x, y, d).second) queue.emplace_back(x, y, d);
  };
  push(g.initial, g.initial, 0);
  while (!queue.empty()) {
    auto [x, y, d] = queue.front();
    queue.pop_front();
    if (faulty(x) && !faulty(y) && d >= threshold) return false;
    for (int e = 0; e < g.alphabet.size(); ++e) {
      int nx = g.next(x, e), ny = g.next(y, e);
      if (in_mask[e]) {
        if (nx >= 0 && ny >= 0) push(nx, ny, d + (faulty(x) ? 1 : 0));
      } else {
        if (nx >= 0) push(nx, y, d + (faulty(x) ? 1 : 0));
        if (ny >= 0) push(x, ny, d);
      }
    }
  }
  return true;
}

}  // namespace moddiag
