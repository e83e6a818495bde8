#include "fault.hpp"

#include <deque>
#include <map>
#include <set>

#include "errors.hpp"

namespace moddiag {

namespace {

// State-based specification: F = marked or reachable from a marked state.
FaultLabeledAutomaton split_by_marking(const Automaton& g) {
  FaultLabeledAutomaton out;
  out.automaton = g;
  out.label.assign(g.state_count(), FaultLabel::N);
  std::deque<int> queue;
  for (int s = 0; s < g.state_count(); ++s)
    if (g.marked[s]) {
      out.label[s] = FaultLabel::F;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int e = 0; e < g.alphabet.size(); ++e) {
      int t = g.next(s, e);
      if (t >= 0 && out.label[t] == FaultLabel::N) {
        out.label[t] = FaultLabel::F;
        queue.push_back(t);
      }
    }
  }
  for (int s = 0; s < g.state_count(); ++s) {
    out.base_state.push_back(s);
    out.base_name.push_back(g.state_names[s]);
  }
  return out;
}

}  // namespace

FaultLabeledAutomaton fault_split(const Automaton& a,
                                  std::optional<std::vector<std::string>> fault_events) {
  Automaton g = accessible(a);

  std::set<int> faults;
  if (fault_events) {
    for (const auto& name : *fault_events) {
      int e = g.alphabet.index_of(name);
      if (e < 0) throw ModelError("unknown fault event '" + name + "'");
      faults.insert(e);
    }
  } else {
    for (int e = 0; e < g.alphabet.size(); ++e)
      if (g.alphabet.at(e).fault) faults.insert(e);
    if (faults.empty()) {
      bool any_marked = false;
      for (bool m : g.marked) any_marked |= m;
      if (any_marked) return split_by_marking(g);
      throw ModelError("no fault specification: no fault events and no marked states");
    }
  }

  // (state, after-fault?) unfolding, restricted to the reachable part
  FaultLabeledAutomaton out;
  out.automaton.alphabet = g.alphabet;

  std::map<std::pair<int, bool>, int> id;
  std::deque<std::pair<int, bool>> queue;
  std::vector<std::pair<int, bool>> discovered;
  auto discover = [&](int base, bool f) {
    auto it = id.find({base, f});
    if (it != id.end()) return it->second;
    int s = static_cast<int>(discovered.size());
    id[{base, f}] = s;
    discovered.emplace_back(base, f);
    queue.emplace_back(base, f);
    return s;
  };

  discover(g.initial, false);
  std::vector<Transition> trans;
  while (!queue.empty()) {
    auto [base, f] = queue.front();
    queue.pop_front();
    int from = id[{base, f}];
    for (int e = 0; e < g.alphabet.size(); ++e) {
      int t = g.next(base, e);
      if (t < 0) continue;
      bool nf = f || faults.count(e) > 0;
      trans.push_back({from, e, discover(t, nf)});
    }
  }

  // names: bare base name when only one copy survived, "base,N"/"base,F" else
  std::map<int, int> copies;
  for (const auto& [base, f] : discovered) copies[base]++;
  for (const auto& [base, f] : discovered) {
    std::string name = g.state_names[base];
    if (copies[base] > 1) name += f ? ",F" : ",N";
    out.automaton.add_state(name, g.marked[base]);
    out.label.push_back(f ? FaultLabel::F : FaultLabel::N);
    out.base_state.push_back(base);
    out.base_name.push_back(g.state_names[base]);
  }
  out.automaton.initial = 0;
  out.automaton.transitions = std::move(trans);
  out.automaton.compile();
  return out;
}

}  // namespace moddiag
