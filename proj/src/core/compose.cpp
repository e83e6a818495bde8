#include "compose.hpp"

#include <deque>
#include <map>
#include <set>

#include "errors.hpp"

namespace moddiag {

Automaton parallel_compose(const Automaton& left, const Automaton& right) {
  Automaton l = left;
  Automaton r = right;
  l.compile();
  r.compile();

  Automaton out;
  out.alphabet = Alphabet::merged(l.alphabet, r.alphabet);

  // per merged event: component event indices, -1 when private to the other side
  std::vector<int> le(out.alphabet.size()), re(out.alphabet.size());
  for (int e = 0; e < out.alphabet.size(); ++e) {
    const auto& name = out.alphabet.at(e).name;
    le[e] = l.alphabet.index_of(name);
    re[e] = r.alphabet.index_of(name);
  }

  std::map<std::pair<int, int>, int> id;
  std::deque<std::pair<int, int>> queue;
  auto discover = [&](int x, int y) {
    auto it = id.find({x, y});
    if (it != id.end()) return it->second;
    int s = out.add_state(l.state_names[x] + "," + r.state_names[y], l.marked[x] && r.marked[y]);
    id[{x, y}] = s;
    queue.emplace_back(x, y);
    return s;
  };

  discover(l.initial, r.initial);
  out.initial = 0;
  while (!queue.empty()) {
    auto [x, y] = queue.front();
    queue.pop_front();
    int from = id[{x, y}];
    for (int e = 0; e < out.alphabet.size(); ++e) {
      int nx = x, ny = y;
      if (le[e] >= 0) {
        nx = l.next(x, le[e]);
        if (nx < 0) continue;
      }
      if (re[e] >= 0) {
        ny = r.next(y, re[e]);
        if (ny < 0) continue;
      }
      out.add_transition(from, e, discover(nx, ny));
    }
  }
  out.compile();
  return out;
}

Automaton parallel_compose(const std::vector<const Automaton*>& parts) {
  if (parts.empty()) throw ModelError("parallel_compose needs at least one automaton");
  if (parts.size() == 1) return accessible(*parts[0]);
  Automaton acc = parallel_compose(*parts[0], *parts[1]);
  for (size_t i = 2; i < parts.size(); ++i) acc = parallel_compose(acc, *parts[i]);
  return acc;
}

Automaton project(const Automaton& a, const std::vector<std::string>& mask) {
  Automaton g = a;
  g.compile();

  std::vector<bool> keep(g.alphabet.size(), false);
  Alphabet target;
  std::set<std::string> mask_set(mask.begin(), mask.end());
  for (const auto& name : mask)
    if (!g.alphabet.contains(name))
      throw ModelError("unknown event '" + name + "' in projection mask");
  for (int e = 0; e < g.alphabet.size(); ++e)
    if (mask_set.count(g.alphabet.at(e).name)) {
      keep[e] = true;
      target.add(g.alphabet.at(e));
    }

  // epsilon-closure over erased events
  auto closure = [&](std::set<int> states) {
    std::deque<int> queue(states.begin(), states.end());
    while (!queue.empty()) {
      int s = queue.front();
      queue.pop_front();
      for (int e = 0; e < g.alphabet.size(); ++e) {
        if (keep[e]) continue;
        int t = g.next(s, e);
        if (t >= 0 && states.insert(t).second) queue.push_back(t);
      }
    }
    return states;
  };

  auto subset_name = [&](const std::set<int>& states) {
    std::string name = "{";
    for (int s : states) {
      if (name.size() > 1) name += ",";
      name += g.state_names[s];
    }
    return name + "}";
  };
  auto subset_marked = [&](const std::set<int>& states) {
    for (int s : states)
      if (g.marked[s]) return true;
    return false;
  };

  Automaton out;
  out.alphabet = target;
  std::map<std::set<int>, int> id;
  std::deque<std::set<int>> queue;

  std::set<int> init = closure({g.initial});
  id[init] = out.add_state(subset_name(init), subset_marked(init));
  out.initial = 0;
  queue.push_back(init);

  while (!queue.empty()) {
    std::set<int> cur = queue.front();
    queue.pop_front();
    int from = id[cur];
    for (int te = 0; te < target.size(); ++te) {
      int e = g.alphabet.index_of(target.at(te).name);
      std::set<int> succ;
      for (int s : cur) {
        int t = g.next(s, e);
        if (t >= 0) succ.insert(t);
      }
      if (succ.empty()) continue;
      succ = closure(std::move(succ));
      auto it = id.find(succ);
      int to;
      if (it == id.end()) {
        to = out.add_state(subset_name(succ), subset_marked(succ));
        id[succ] = to;
        queue.push_back(succ);
      } else {
        to = it->second;
      }
      out.add_transition(from, te, to);
    }
  }
  out.compile();
  return out;
}

}  // namespace moddiag
