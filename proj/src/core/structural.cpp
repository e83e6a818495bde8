#include "structural.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "errors.hpp"
#include "search.hpp"

namespace moddiag {

namespace {

// Builds a complete marker over `sigma` from per-state advance classes:
// advance[s](e) says whether event e moves state s forward, everything else
// self-loops. Last state absorbs.
Automaton build_marker(const Alphabet& sigma, int n_states,
                       const std::vector<std::function<bool(const Event&)>>& advance) {
  Automaton m;
  m.alphabet = sigma;
  for (int s = 0; s < n_states; ++s) m.add_state(std::to_string(s), s == n_states - 1);
  m.initial = 0;
  for (int s = 0; s < n_states; ++s) {
    for (int e = 0; e < sigma.size(); ++e) {
      bool fwd = s + 1 < n_states && advance[s](sigma.at(e));
      m.add_transition(s, e, fwd ? s + 1 : s);
    }
  }
  m.compile();
  return m;
}

}  // namespace

MarkerAutomaton build_l1_marker(const Alphabet& sigma1, const Alphabet& sigma2) {
  Alphabet::merged(sigma1, sigma2);  // attribute compatibility
  std::set<std::string> common;
  for (const auto& name : sigma1.common_names(sigma2)) common.insert(name);
  auto shared = [common](const Event& e) { return common.count(e.name) > 0; };
  MarkerAutomaton out;
  out.role = MarkerRole::L1Marker;
  out.automaton = build_marker(sigma1, 3, {shared, shared});
  return out;
}

MarkerAutomaton build_l2_marker(const Alphabet& sigma1, const Alphabet& sigma2) {
  Alphabet::merged(sigma1, sigma2);
  std::set<std::string> in_s1;
  for (const auto& name : sigma1.names()) in_s1.insert(name);
  auto shared = [in_s1](const Event& e) { return in_s1.count(e.name) > 0; };
  auto private_obs = [in_s1](const Event& e) { return e.observable && !in_s1.count(e.name); };
  MarkerAutomaton out;
  out.role = MarkerRole::L2Marker;
  out.automaton = build_marker(sigma2, 4, {shared, private_obs, shared});
  return out;
}

TriggerResult trigger_events(const FaultLabeledAutomaton& faulty,
                             const Alphabet& candidate_alphabet) {
  TriggerResult res;
  const Automaton& g = faulty.automaton;
  MarkerAutomaton marker = build_l1_marker(g.alphabet, candidate_alphabet);
  const Automaton& mk = marker.automaton;

  std::set<int> trigger, confirm;
  std::set<std::pair<int, int>> seen;
  std::deque<std::pair<int, int>> queue;
  auto step = [&](int from_marker, int event, int target_state) {
    int to_marker = mk.next(from_marker, event);
    if (from_marker == 0 && to_marker == 1) trigger.insert(event);
    if (from_marker == 1 && to_marker == 2) confirm.insert(event);
    if (mk.marked[to_marker]) res.marked_any = true;
    if (seen.emplace(target_state, to_marker).second) queue.emplace_back(target_state, to_marker);
  };

  // The test language: suffixes starting at each fault occurrence (the label
  // crossing), with the shared pre-fault prefix stripped.
  for (const auto& t : g.transitions)
    if (faulty.label[t.from] == FaultLabel::N && faulty.label[t.to] == FaultLabel::F)
      step(0, t.event, t.to);

  while (!queue.empty()) {
    auto [s, m] = queue.front();
    queue.pop_front();
    for (int e = 0; e < g.alphabet.size(); ++e) {
      int t = g.next(s, e);
      if (t >= 0) step(m, e, t);
    }
  }

  for (int e = 0; e < g.alphabet.size(); ++e) {
    if (trigger.count(e)) res.trigger.push_back(g.alphabet.at(e).name);
    if (confirm.count(e)) res.confirm.push_back(g.alphabet.at(e).name);
  }
  return res;
}

SupportResult support_check(const Automaton& candidate, const Alphabet& sigma1,
                            const std::vector<std::string>& trigger,
                            const std::vector<std::string>& confirm) {
  SupportResult res;
  if (trigger.empty()) {
    res.reason = "no-trigger";
    return res;
  }
  Automaton cand = accessible(candidate);
  const Alphabet& sigma2 = cand.alphabet;

  std::set<std::string> trig(trigger.begin(), trigger.end());
  std::set<std::string> close(confirm.begin(), confirm.end());
  close.insert(trigger.begin(), trigger.end());
  std::set<std::string> in_s1;
  for (const auto& name : sigma1.names()) in_s1.insert(name);

  // restricted bracket marker: trigger opens, a candidate-private observable
  // must show, confirm (or another trigger) closes
  auto opens = [&](const Event& e) { return trig.count(e.name) > 0; };
  auto private_obs = [&](const Event& e) { return e.observable && !in_s1.count(e.name); };
  auto closes = [&](const Event& e) { return close.count(e.name) > 0; };
  Automaton mk = build_marker(sigma2, 4, {opens, private_obs, closes});

  // product exploration, candidate drives
  struct Config {
    int g, m;
  };
  std::vector<Config> configs;
  std::map<std::pair<int, int>, int> id;
  std::deque<int> queue;
  auto discover = [&](int gs, int ms) {
    auto it = id.find({gs, ms});
    if (it != id.end()) return it->second;
    int c = static_cast<int>(configs.size());
    configs.push_back({gs, ms});
    id[{gs, ms}] = c;
    queue.push_back(c);
    return c;
  };
  struct Edge {
    int from, event, to;
  };
  std::vector<Edge> edges;
  std::vector<std::vector<int>> out_edges;

  discover(cand.initial, 0);
  out_edges.emplace_back();
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    auto [gs, ms] = configs[c];
    for (int e = 0; e < sigma2.size(); ++e) {
      int gt = cand.next(gs, e);
      if (gt < 0) continue;
      int mt = mk.next(ms, e);
      int to = discover(gt, mt);
      while (out_edges.size() < configs.size()) out_edges.emplace_back();
      int ei = static_cast<int>(edges.size());
      edges.push_back({c, e, to});
      out_edges[c].push_back(ei);
    }
  }
  while (out_edges.size() < configs.size()) out_edges.emplace_back();
  int n = static_cast<int>(configs.size());

  auto in_bracket = [&](int c) { return configs[c].m == 1 || configs[c].m == 2; };
  auto at_goal = [&](int c) { return configs[c].m == 3; };

  // co-reachability of the goal
  std::vector<std::vector<int>> rev(n);
  for (const auto& e : edges) rev[e.to].push_back(e.from);
  std::vector<bool> coreach(n, false);
  std::deque<int> rq;
  for (int c = 0; c < n; ++c)
    if (at_goal(c)) {
      coreach[c] = true;
      rq.push_back(c);
    }
  while (!rq.empty()) {
    int c = rq.front();
    rq.pop_front();
    for (int p : rev[c])
      if (!coreach[p]) {
        coreach[p] = true;
        rq.push_back(p);
      }
  }

  PathSearch access(n);
  access.run(0, [&](int node, auto visit) {
    for (int ei : out_edges[node]) visit(edges[ei].to, edges[ei].event, ei);
  });
  auto event_names = [&](const std::vector<int>& ids) {
    std::vector<std::string> out;
    for (int e : ids) out.push_back(sigma2.at(e).name);
    return out;
  };

  // (i) every opened bracket must be closable
  for (int c = 0; c < n; ++c) {
    if (in_bracket(c) && !coreach[c]) {
      res.reason = "dead-support";
      res.path = event_names(access.at(c).events);
      return res;
    }
  }

  // (ii) no way to cycle inside the bracket without closing it
  std::vector<bool> member(n);
  for (int c = 0; c < n; ++c) member[c] = in_bracket(c);
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) adj[e.from].push_back(e.to);
  SccResult scc = tarjan_scc(adj, member);
  std::vector<bool> cyclic(scc.count, false);
  for (const auto& e : edges)
    if (scc.comp[e.from] >= 0 && scc.comp[e.from] == scc.comp[e.to]) cyclic[scc.comp[e.from]] = true;
  int entry = -1;
  for (int c = 0; c < n; ++c) {
    int k = scc.comp[c];
    if (k < 0 || !cyclic[k]) continue;
    if (entry < 0 || std::tie(access.at(c).events, c) < std::tie(access.at(entry).events, entry))
      entry = c;
  }
  if (entry >= 0) {
    res.reason = "silent-cycle";
    res.path = event_names(access.at(entry).events);
    // shortest cycle back to the entry inside its component; node entry+n
    // stands for "returned to the entry"
    PathSearch cyc(2 * n);
    int comp = scc.comp[entry];
    cyc.run(entry, [&](int node, auto visit) {
      if (node >= n) return;
      for (int ei : out_edges[node]) {
        int to = edges[ei].to;
        if (scc.comp[to] != comp) continue;
        visit(to == entry ? to + n : to, edges[ei].event, ei);
      }
    });
    res.cycle = event_names(cyc.at(entry + n).events);
    return res;
  }

  // accepting witness: shortest path to the goal; a candidate that never
  // completes the bracket at all is no support either
  int goal = -1;
  for (int c = 0; c < n; ++c) {
    if (!at_goal(c) || !access.at(c).reached) continue;
    if (goal < 0 || std::tie(access.at(c).events, c) < std::tie(access.at(goal).events, goal))
      goal = c;
  }
  if (goal < 0) {
    res.reason = "dead-support";
    return res;
  }
  res.ok = true;
  res.path = event_names(access.at(goal).events);
  return res;
}

namespace {

// Non-faulty counterpart of the faulty test language: suffixes from each
// divergence, i.e. a non-fault transition leaving the can-still-fault region
// while staying N-labelled.
TriggerResult nonfaulty_trigger_events(const FaultLabeledAutomaton& fla,
                                       const Alphabet& candidate_alphabet) {
  TriggerResult res;
  const Automaton& g = fla.automaton;
  MarkerAutomaton marker = build_l1_marker(g.alphabet, candidate_alphabet);
  const Automaton& mk = marker.automaton;

  // states from which a fault (label crossing) is still reachable
  std::vector<bool> can_fault(g.state_count(), false);
  std::vector<std::vector<int>> rev(g.state_count());
  std::deque<int> rq;
  for (const auto& t : g.transitions) {
    rev[t.to].push_back(t.from);
    if (fla.label[t.from] == FaultLabel::N && fla.label[t.to] == FaultLabel::F &&
        !can_fault[t.from]) {
      can_fault[t.from] = true;
      rq.push_back(t.from);
    }
  }
  while (!rq.empty()) {
    int s = rq.front();
    rq.pop_front();
    for (int p : rev[s])
      if (!can_fault[p]) {
        can_fault[p] = true;
        rq.push_back(p);
      }
  }

  std::set<int> trigger, confirm;
  std::set<std::pair<int, int>> seen;
  std::deque<std::pair<int, int>> queue;
  auto step = [&](int from_marker, int event, int target_state) {
    int to_marker = mk.next(from_marker, event);
    if (from_marker == 0 && to_marker == 1) trigger.insert(event);
    if (from_marker == 1 && to_marker == 2) confirm.insert(event);
    if (mk.marked[to_marker]) res.marked_any = true;
    if (seen.emplace(target_state, to_marker).second) queue.emplace_back(target_state, to_marker);
  };

  for (const auto& t : g.transitions)
    if (fla.label[t.to] == FaultLabel::N && can_fault[t.from] && !can_fault[t.to])
      step(0, t.event, t.to);

  while (!queue.empty()) {
    auto [s, m] = queue.front();
    queue.pop_front();
    for (int e = 0; e < g.alphabet.size(); ++e) {
      int t = g.next(s, e);
      if (t >= 0) step(m, e, t);
    }
  }
  for (int e = 0; e < g.alphabet.size(); ++e) {
    if (trigger.count(e)) res.trigger.push_back(g.alphabet.at(e).name);
    if (confirm.count(e)) res.confirm.push_back(g.alphabet.at(e).name);
  }
  return res;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out = "{";
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i];
  }
  return out + "}";
}

}  // namespace

StructuralReport analyze_pair(const std::string& faulty_name, const FaultLabeledAutomaton& faulty,
                              const std::string& candidate_name, const Automaton& candidate,
                              bool strict) {
  StructuralReport rep;
  rep.faulty_module = faulty_name;
  rep.candidate_module = candidate_name;

  Automaton cand = accessible(candidate);
  rep.common = faulty.automaton.alphabet.common_names(cand.alphabet);

  if (!faulty.has_faulty()) {
    rep.notes.push_back("faulty side has no reachable fault");
    return rep;
  }
  if (rep.common.empty()) {
    rep.notes.push_back("no shared events");
    return rep;
  }

  TriggerResult tr = trigger_events(faulty, cand.alphabet);
  rep.trigger = tr.trigger;
  rep.confirm = tr.confirm;
  rep.marked_any = tr.marked_any;

  SupportResult sup = support_check(cand, faulty.automaton.alphabet, tr.trigger, tr.confirm);
  rep.support_ok = tr.marked_any && sup.ok;
  rep.support_path = sup.path;
  if (!tr.marked_any) {
    rep.notes.push_back("faulty side never shows two shared events after the fault");
  } else if (!sup.ok) {
    std::string note = "candidate support fails (" + sup.reason;
    if (!sup.cycle.empty()) note += " on " + join_names(sup.cycle);
    note += ")";
    rep.notes.push_back(note);
  }
  rep.recommend = rep.support_ok;

  // strict variant: the non-faulty behaviour must pass the same test
  TriggerResult ntr = nonfaulty_trigger_events(faulty, cand.alphabet);
  SupportResult nsup = support_check(cand, faulty.automaton.alphabet, ntr.trigger, ntr.confirm);
  bool nonfaulty_ok = ntr.marked_any && nsup.ok;
  rep.strict_ok = rep.support_ok && nonfaulty_ok;
  if (strict) {
    rep.recommend = rep.strict_ok;
    if (!nonfaulty_ok) {
      std::string note = "strict: non-faulty side not supported";
      if (!nsup.reason.empty()) note += " (" + nsup.reason;
      if (!nsup.cycle.empty()) note += " on " + join_names(nsup.cycle);
      if (!nsup.reason.empty()) note += ")";
      rep.notes.push_back(note);
    }
  }
  return rep;
}

StructuralReport analyze_pair(const std::string& faulty_name, const Automaton& faulty,
                              const std::string& candidate_name, const Automaton& candidate,
                              bool strict) {
  Automaton f = faulty;
  f.compile();
  if (f.alphabet.fault_names().empty() && std::none_of(f.marked.begin(), f.marked.end(),
                                                       [](bool b) { return b; })) {
    StructuralReport rep;
    rep.faulty_module = faulty_name;
    rep.candidate_module = candidate_name;
    Automaton cand = accessible(candidate);
    rep.common = f.alphabet.common_names(cand.alphabet);
    rep.notes.push_back("faulty side has no fault specification");
    return rep;
  }
  return analyze_pair(faulty_name, fault_split(f), candidate_name, candidate, strict);
}

}  // namespace moddiag
