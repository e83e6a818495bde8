#include "automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "errors.hpp"

namespace moddiag {

int Automaton::add_state(const std::string& name, bool is_marked) {
  state_names.push_back(name);
  marked.push_back(is_marked);
  if (initial < 0) initial = 0;
  delta_.clear();
  return state_count() - 1;
}

void Automaton::add_transition(int from, int event, int to) {
  transitions.push_back({from, event, to});
  delta_.clear();
}

void Automaton::add_transition(const std::string& from, const std::string& event,
                               const std::string& to) {
  int f = find_state(from);
  int t = find_state(to);
  int e = alphabet.index_of(event);
  if (f < 0) throw ModelError("unknown state '" + from + "'");
  if (t < 0) throw ModelError("unknown state '" + to + "'");
  if (e < 0) throw ModelError("unknown event '" + event + "'");
  add_transition(f, e, t);
}

int Automaton::find_state(const std::string& name) const {
  for (int i = 0; i < state_count(); ++i)
    if (state_names[i] == name) return i;
  return -1;
}

ValidationReport Automaton::validate() const {
  ValidationReport rep;
  auto bad = [&rep](std::string msg) { rep.violations.push_back(std::move(msg)); };

  std::set<std::string> seen;
  for (const auto& n : state_names) {
    if (n.empty()) bad("state name must be non-empty");
    if (!seen.insert(n).second) bad("duplicate state '" + n + "'");
  }
  if (state_count() == 0) bad("automaton has no states");
  if (state_count() > 0 && (initial < 0 || initial >= state_count()))
    bad("initial state out of range");
  if (static_cast<int>(marked.size()) != state_count())
    bad("marked flags do not cover the state set");

  std::map<std::pair<int, int>, int> first_target;
  for (const auto& t : transitions) {
    if (t.from < 0 || t.from >= state_count() || t.to < 0 || t.to >= state_count()) {
      bad("transition references an unknown state");
      continue;
    }
    if (t.event < 0 || t.event >= alphabet.size()) {
      bad("transition at state '" + state_names[t.from] + "' uses an undeclared event");
      continue;
    }
    auto key = std::make_pair(t.from, t.event);
    auto it = first_target.find(key);
    if (it == first_target.end()) {
      first_target[key] = t.to;
    } else if (it->second != t.to) {
      bad("nondeterministic at (" + state_names[t.from] + "," + alphabet.at(t.event).name + ")");
    } else {
      bad("duplicate transition (" + state_names[t.from] + "," + alphabet.at(t.event).name + ")");
    }
  }

  if (!rep.ok()) return rep;

  // Warnings need a usable delta; compute reachability on a scratch copy.
  // (build_delta, not compile: compile calls validate and would recurse.)
  Automaton scratch = *this;
  scratch.build_delta();
  std::vector<bool> reach(state_count(), false);
  std::deque<int> queue{scratch.initial};
  reach[scratch.initial] = true;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int e = 0; e < alphabet.size(); ++e) {
      int t = scratch.next(s, e);
      if (t >= 0 && !reach[t]) {
        reach[t] = true;
        queue.push_back(t);
      }
    }
  }
  for (int s = 0; s < state_count(); ++s)
    if (!reach[s]) rep.warnings.push_back("unreachable state '" + state_names[s] + "'");
  for (int s : deadlock_states(scratch))
    if (reach[s]) rep.warnings.push_back("deadlock state '" + state_names[s] + "'");
  return rep;
}

void Automaton::build_delta() {
  delta_.assign(static_cast<size_t>(state_count()) * std::max(alphabet.size(), 1), -1);
  for (const auto& t : transitions)
    delta_[static_cast<size_t>(t.from) * alphabet.size() + t.event] = t.to;
  if (alphabet.size() == 0) delta_.assign(static_cast<size_t>(state_count()), -1);
}

void Automaton::compile() {
  auto rep = validate();
  if (!rep.ok()) {
    std::string msg = "invalid automaton:";
    for (const auto& v : rep.violations) msg += " " + v + ";";
    msg.pop_back();
    throw ModelError(msg);
  }
  build_delta();
}

std::vector<int> Automaton::defined_events(int s) const {
  std::vector<int> out;
  for (int e = 0; e < alphabet.size(); ++e)
    if (next(s, e) >= 0) out.push_back(e);
  return out;
}

Automaton accessible(const Automaton& a) {
  Automaton src = a;
  src.compile();

  std::vector<bool> reach(src.state_count(), false);
  std::deque<int> queue{src.initial};
  reach[src.initial] = true;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int e = 0; e < src.alphabet.size(); ++e) {
      int t = src.next(s, e);
      if (t >= 0 && !reach[t]) {
        reach[t] = true;
        queue.push_back(t);
      }
    }
  }

  Automaton out;
  out.alphabet = src.alphabet;
  std::vector<int> remap(src.state_count(), -1);
  for (int s = 0; s < src.state_count(); ++s)
    if (reach[s]) remap[s] = out.add_state(src.state_names[s], src.marked[s]);
  out.initial = remap[src.initial];
  for (const auto& t : src.transitions)
    if (reach[t.from]) out.add_transition(remap[t.from], t.event, remap[t.to]);
  out.compile();
  return out;
}

std::vector<std::vector<std::string>> enumerate_strings(const Automaton& a, int max_len) {
  Automaton g = a;
  g.compile();

  std::vector<std::vector<std::string>> out;
  // frontier of (state, string) pairs; expanding in order keeps the output
  // length-lexicographic by event declaration order
  std::deque<std::pair<int, std::vector<std::string>>> frontier;
  frontier.emplace_back(g.initial, std::vector<std::string>{});
  out.push_back({});
  int len = 0;
  while (len < max_len && !frontier.empty()) {
    std::deque<std::pair<int, std::vector<std::string>>> nxt;
    for (const auto& [s, str] : frontier) {
      for (int e = 0; e < g.alphabet.size(); ++e) {
        int t = g.next(s, e);
        if (t < 0) continue;
        auto ext = str;
        ext.push_back(g.alphabet.at(e).name);
        out.push_back(ext);
        nxt.emplace_back(t, std::move(ext));
      }
    }
    frontier = std::move(nxt);
    ++len;
  }
  return out;
}

std::vector<int> deadlock_states(const Automaton& a) {
  std::vector<bool> live(a.state_count(), false);
  for (const auto& t : a.transitions) live[t.from] = true;
  std::vector<int> out;
  for (int s = 0; s < a.state_count(); ++s)
    if (!live[s]) out.push_back(s);
  return out;
}

Automaton canonical_form(const Automaton& a) {
  Automaton g = accessible(a);
  std::vector<int> order(g.state_count(), -1);
  std::deque<int> queue{g.initial};
  order[g.initial] = 0;
  int next_id = 1;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int e = 0; e < g.alphabet.size(); ++e) {
      int t = g.next(s, e);
      if (t >= 0 && order[t] < 0) {
        order[t] = next_id++;
        queue.push_back(t);
      }
    }
  }

  Automaton out;
  out.alphabet = g.alphabet;
  std::vector<int> inv(g.state_count());
  for (int s = 0; s < g.state_count(); ++s) inv[order[s]] = s;
  for (int i = 0; i < g.state_count(); ++i)
    out.add_state(std::to_string(i), g.marked[inv[i]]);
  out.initial = 0;
  for (int i = 0; i < g.state_count(); ++i) {
    int s = inv[i];
    for (int e = 0; e < g.alphabet.size(); ++e) {
      int t = g.next(s, e);
      if (t >= 0) out.add_transition(i, e, order[t]);
    }
  }
  out.compile();
  return out;
}

bool same_shape(const Automaton& a, const Automaton& b) {
  Automaton ca = canonical_form(a);
  Automaton cb = canonical_form(b);
  return ca.alphabet == cb.alphabet && ca.marked == cb.marked &&
         ca.transitions == cb.transitions && ca.initial == cb.initial &&
         ca.state_count() == cb.state_count();
}

}  // namespace moddiag
