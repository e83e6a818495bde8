#include "support/testers.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace moddiag::test {

std::string fixture_path(const std::string& stem) {
  return std::string(MODDIAG_FIXTURE_DIR) + "/" + stem + ".fsm";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

NamedAutomaton load_fixture(const std::string& stem) {
  return parse_fsm(read_file(fixture_path(stem)));
}

std::string join_events(const std::vector<std::string>& events) {
  std::string out;
  for (size_t i = 0; i < events.size(); ++i) {
    if (i) out += '.';
    out += events[i];
  }
  return out;
}

namespace {

// Adjacency straight off the declared transition list; nothing here touches
// compile() or the library search helpers.
std::vector<std::vector<std::pair<int, int>>> raw_adjacency(const Automaton& a) {
  std::vector<std::vector<std::pair<int, int>>> adj(a.state_names.size());
  for (const auto& t : a.transitions) adj[t.from].push_back({t.event, t.to});
  return adj;
}

}  // namespace

std::set<std::string> language(const Automaton& a, int max_len) {
  std::set<std::string> out;
  if (a.initial < 0) return out;
  auto adj = raw_adjacency(a);
  struct Item {
    int s;
    std::vector<std::string> w;
  };
  std::vector<Item> stack{{a.initial, {}}};
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    out.insert(join_events(it.w));
    if (static_cast<int>(it.w.size()) == max_len) continue;
    for (auto [e, to] : adj[it.s]) {
      Item next{to, it.w};
      next.w.push_back(a.alphabet.at(e).name);
      stack.push_back(std::move(next));
    }
  }
  return out;
}

std::set<std::string> compose_language_oracle(const Automaton& a, const Automaton& b,
                                              int max_len) {
  const auto la = language(a, max_len);
  const auto lb = language(b, max_len);
  std::set<std::string> a_names, b_names;
  std::vector<std::string> union_events;
  for (const auto& e : a.alphabet.events()) {
    a_names.insert(e.name);
    union_events.push_back(e.name);
  }
  for (const auto& e : b.alphabet.events()) {
    b_names.insert(e.name);
    if (!a_names.count(e.name)) union_events.push_back(e.name);
  }

  // Grow interleavings; both component languages are prefix-closed, so a
  // rejected projection prunes every extension.
  std::set<std::string> out;
  struct Item {
    std::vector<std::string> w, pa, pb;
  };
  std::vector<Item> stack{{{}, {}, {}}};
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    out.insert(join_events(it.w));
    if (static_cast<int>(it.w.size()) == max_len) continue;
    for (const auto& ev : union_events) {
      Item next = it;
      next.w.push_back(ev);
      if (a_names.count(ev)) next.pa.push_back(ev);
      if (b_names.count(ev)) next.pb.push_back(ev);
      if (!la.count(join_events(next.pa))) continue;
      if (!lb.count(join_events(next.pb))) continue;
      stack.push_back(std::move(next));
    }
  }
  return out;
}

std::set<std::string> project_language_oracle(const Automaton& a,
                                              const std::vector<std::string>& mask,
                                              int max_len) {
  auto adj = raw_adjacency(a);
  std::set<std::string> kept(mask.begin(), mask.end());

  auto closure = [&](std::set<int> s) {
    std::vector<int> todo(s.begin(), s.end());
    while (!todo.empty()) {
      int x = todo.back();
      todo.pop_back();
      for (auto [e, to] : adj[x]) {
        if (kept.count(a.alphabet.at(e).name)) continue;
        if (s.insert(to).second) todo.push_back(to);
      }
    }
    return s;
  };

  auto step = [&](const std::set<int>& s, const std::string& ev) {
    std::set<int> out;
    for (int x : s)
      for (auto [e, to] : adj[x])
        if (a.alphabet.at(e).name == ev) out.insert(to);
    return closure(std::move(out));
  };

  std::set<std::string> result;
  if (a.initial < 0) return result;
  struct Item {
    std::set<int> s;
    std::vector<std::string> w;
  };
  std::vector<Item> stack{{closure({a.initial}), {}}};
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    result.insert(join_events(it.w));
    if (static_cast<int>(it.w.size()) == max_len) continue;
    for (const auto& ev : mask) {
      auto s2 = step(it.s, ev);
      if (s2.empty()) continue;
      Item next{std::move(s2), it.w};
      next.w.push_back(ev);
      stack.push_back(std::move(next));
    }
  }
  return result;
}

// -- random models ---------------------------------------------------------

std::vector<EventSpec> random_event_pool(std::mt19937& rng, int size, int fault_count) {
  static const char* kNames[] = {"a", "b", "c", "d", "e", "g", "h", "k", "m", "n", "p", "q"};
  size = std::min<int>(size, 12);
  std::vector<int> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::set<int> faulty(order.begin(), order.begin() + std::min(fault_count, size));
  std::bernoulli_distribution obs(0.55);
  std::vector<EventSpec> pool;
  for (int i = 0; i < size; ++i) {
    EventSpec e{kNames[i], false, false};
    if (faulty.count(i))
      e.fault = true;
    else
      e.observable = obs(rng);
    pool.push_back(e);
  }
  return pool;
}

Automaton random_automaton_from_pool(std::mt19937& rng, const std::vector<EventSpec>& pool,
                                     const RandomModelOpts& opts) {
  int pool_size = static_cast<int>(pool.size());
  int want = std::uniform_int_distribution<int>(
      std::min(opts.min_events, pool_size), std::min(opts.max_events, pool_size))(rng);

  std::vector<int> order(pool_size);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::set<int> chosen(order.begin(), order.begin() + want);
  if (opts.want_fault) {
    bool have = std::any_of(chosen.begin(), chosen.end(),
                            [&](int i) { return pool[i].fault; });
    if (!have) {
      std::vector<int> faults;
      for (int i = 0; i < pool_size; ++i)
        if (pool[i].fault) faults.push_back(i);
      if (!faults.empty()) {
        chosen.erase(std::prev(chosen.end()));
        chosen.insert(faults[std::uniform_int_distribution<size_t>(0, faults.size() - 1)(rng)]);
      }
    }
  }

  Automaton a;
  for (int i : chosen)  // set order == pool order keeps shared events aligned
    a.alphabet.add({pool[i].name, pool[i].observable, pool[i].fault});

  int n = std::uniform_int_distribution<int>(opts.min_states, opts.max_states)(rng);
  for (int s = 0; s < n; ++s) a.add_state(std::to_string(s));
  a.initial = 0;

  std::bernoulli_distribution fill(opts.density);
  std::uniform_int_distribution<int> target(0, n - 1);
  for (int s = 0; s < n; ++s)
    for (int e = 0; e < a.alphabet.size(); ++e)
      if (fill(rng)) a.add_transition(s, e, target(rng));
  a.compile();
  return a;
}

Automaton random_automaton(std::mt19937& rng, const RandomModelOpts& opts) {
  int pool_size = std::max(opts.max_events, opts.min_events);
  int faults = opts.want_fault ? 1 + std::bernoulli_distribution(0.25)(rng) : 0;
  auto pool = random_event_pool(rng, pool_size, faults);
  return random_automaton_from_pool(rng, pool, opts);
}

ModularSystem random_system(std::mt19937& rng, int min_modules, int max_modules,
                            const RandomModelOpts& opts) {
  auto pool = random_event_pool(rng, 6, 1 + std::bernoulli_distribution(0.3)(rng));
  int n = std::uniform_int_distribution<int>(min_modules, max_modules)(rng);
  RandomModelOpts module_opts = opts;
  module_opts.want_fault = false;
  ModularSystem sys;
  for (int i = 0; i < n; ++i) {
    RandomModelOpts o = module_opts;
    if (opts.want_fault && i == 0) o.want_fault = true;  // someone must carry a fault
    sys.add("m" + std::to_string(i + 1), random_automaton_from_pool(rng, pool, o));
  }
  return sys;
}

}  // namespace moddiag::test
