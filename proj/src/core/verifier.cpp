#include "verifier.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "errors.hpp"
#include "search.hpp"

namespace moddiag {

std::vector<std::string> Verifier::state_names() const {
  std::vector<std::string> out;
  out.reserve(states.size());
  for (size_t i = 0; i < states.size(); ++i) out.push_back(state_name(static_cast<int>(i)));
  return out;
}

Verifier build_verifier(const FaultLabeledAutomaton& fla, const std::vector<std::string>& mask) {
  Verifier v;
  v.source = fla;
  v.mask = mask;
  const Automaton& g = v.source.automaton;

  std::vector<bool> in_mask(g.alphabet.size(), false);
  for (const auto& name : mask) {
    int e = g.alphabet.index_of(name);
    if (e < 0) throw ModelError("unknown event '" + name + "' in observation mask");
    if (!g.alphabet.at(e).observable)
      throw ModelError("mask contains an unobservable event '" + name + "'");
    in_mask[e] = true;
  }

  // canonical representative: unordered pair, orientation fixed at discovery
  std::map<std::pair<int, int>, int> id;
  std::deque<int> queue;
  auto discover = [&](int l, int r, bool* flip) {
    auto key = std::minmax(l, r);
    auto it = id.find(key);
    if (it != id.end()) {
      *flip = v.states[it->second].left != l && l != r;
      return it->second;
    }
    int s = static_cast<int>(v.states.size());
    v.states.push_back({l, r});
    v.out.emplace_back();
    id[key] = s;
    queue.push_back(s);
    *flip = false;
    return s;
  };

  bool flip = false;
  discover(g.initial, g.initial, &flip);
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    int l = v.states[s].left, r = v.states[s].right;
    auto emit = [&](int e, Moved m, int nl, int nr) {
      bool sw = false;
      int to = discover(nl, nr, &sw);
      int ti = static_cast<int>(v.transitions.size());
      v.transitions.push_back({s, e, m, sw, to});
      v.out[s].push_back(ti);
    };
    for (int e = 0; e < g.alphabet.size(); ++e) {
      if (in_mask[e]) {
        int nl = g.next(l, e), nr = g.next(r, e);
        if (nl >= 0 && nr >= 0) emit(e, Moved::Both, nl, nr);
      } else {
        int nl = g.next(l, e);
        if (nl >= 0) emit(e, Moved::Left, nl, r);
        int nr = g.next(r, e);
        if (nr >= 0) emit(e, Moved::Right, l, nr);
      }
    }
  }
  return v;
}

namespace {

// Does this transition advance the faulty run of its source pair?
bool moves_faulty_side(const Verifier& v, const VerifierTransition& t) {
  if (t.moved == Moved::Both) return true;
  FaultLabel side = t.moved == Moved::Left ? v.left_label(t.from) : v.right_label(t.from);
  return side == FaultLabel::F;
}

std::vector<bool> progress_flags(const Verifier& v, const std::vector<std::string>& progress) {
  std::vector<bool> out(v.source.automaton.alphabet.size(), false);
  for (const auto& name : progress) {
    int e = v.source.automaton.alphabet.index_of(name);
    if (e >= 0) out[e] = true;
  }
  return out;
}

// Mixed-state components that contain a faulty-progress edge.
struct CycleComponents {
  SccResult scc;
  std::vector<bool> qualifies;
};

CycleComponents find_components(const Verifier& v, const std::vector<bool>& prog_event) {
  int n = static_cast<int>(v.states.size());
  std::vector<bool> mixed(n);
  for (int s = 0; s < n; ++s) mixed[s] = v.mixed(s);
  std::vector<std::vector<int>> adj(n);
  for (const auto& t : v.transitions) adj[t.from].push_back(t.to);
  CycleComponents cc;
  cc.scc = tarjan_scc(adj, mixed);
  cc.qualifies.assign(cc.scc.count, false);
  for (const auto& t : v.transitions) {
    if (cc.scc.comp[t.from] < 0 || cc.scc.comp[t.from] != cc.scc.comp[t.to]) continue;
    if (prog_event[t.event] && moves_faulty_side(v, t)) cc.qualifies[cc.scc.comp[t.from]] = true;
  }
  return cc;
}

std::string join_pattern(const std::vector<std::string>& stem,
                         const std::vector<std::string>& cycle) {
  bool compact = true;
  for (const auto& s : stem) compact &= s.size() == 1;
  for (const auto& s : cycle) compact &= s.size() == 1;
  auto join = [&](const std::vector<std::string>& seq) {
    std::string out;
    for (const auto& s : seq) {
      if (!compact && !out.empty()) out += ".";
      out += s;
    }
    return out;
  };
  std::string out = join(stem);
  if (!cycle.empty()) {
    std::string c = join(cycle);
    if (cycle.size() == 1 && compact)
      out += c + "*";
    else
      out += "(" + c + ")*";
  }
  if (out.empty()) out = "ε";
  return out;
}

// Replays verifier transitions while tracking which physical run sits in the
// canonical left slot; swaps only relabel, they never exchange the runs.
struct Replay {
  std::vector<std::string> side[2];
  bool flipped = false;
};

void replay_step(const Verifier& v, Replay& rp, const VerifierTransition& t) {
  const auto& name = v.source.automaton.alphabet.at(t.event).name;
  if (t.moved == Moved::Both) {
    rp.side[0].push_back(name);
    rp.side[1].push_back(name);
  } else {
    bool canonical_left = t.moved == Moved::Left;
    int phys = canonical_left == !rp.flipped ? 0 : 1;
    rp.side[phys].push_back(name);
  }
  rp.flipped = rp.flipped != t.swapped;
}

}  // namespace

std::optional<Witness> find_indeterminate_cycle(const Verifier& v) {
  return find_indeterminate_cycle(v, v.source.automaton.alphabet.names());
}

std::optional<Witness> find_indeterminate_cycle(const Verifier& v,
                                                const std::vector<std::string>& progress) {
  int n = static_cast<int>(v.states.size());
  if (n == 0) return std::nullopt;
  std::vector<bool> prog_event = progress_flags(v, progress);
  CycleComponents cc = find_components(v, prog_event);
  bool any = false;
  for (int c = 0; c < cc.scc.count; ++c) any |= cc.qualifies[c];
  if (!any) return std::nullopt;

  // access paths over the whole verifier
  PathSearch access(n);
  access.run(0, [&](int node, auto visit) {
    for (int ti : v.out[node]) visit(v.transitions[ti].to, v.transitions[ti].event, ti);
  });

  auto observable_count = [&](const std::vector<int>& events) {
    int c = 0;
    for (int e : events)
      if (v.source.automaton.alphabet.at(e).observable) ++c;
    return c;
  };

  // entry state per qualifying component: least (depth, path, id)
  std::vector<int> entry(cc.scc.count, -1);
  for (int s = 0; s < n; ++s) {
    int c = cc.scc.comp[s];
    if (c < 0 || !cc.qualifies[c] || !access.at(s).reached) continue;
    if (entry[c] < 0) {
      entry[c] = s;
      continue;
    }
    const auto& a = access.at(s);
    const auto& b = access.at(entry[c]);
    if (std::tie(a.events, s) < std::tie(b.events, entry[c])) entry[c] = s;
  }

  struct Candidate {
    int entry = -1;
    std::vector<int> stem_events, cycle_events;
    std::vector<int> stem_chain, cycle_chain;
  };
  std::optional<Candidate> best;

  for (int c = 0; c < cc.scc.count; ++c) {
    if (!cc.qualifies[c] || entry[c] < 0) continue;
    int e0 = entry[c];

    // shortest cycle through e0 containing a faulty-progress edge: search
    // over (state, seen-progress-edge) pairs inside the component
    PathSearch cyc(2 * n);
    cyc.run(e0, [&](int node, auto visit) {
      int s = node % n;
      bool seen = node >= n;
      if (seen && s == e0) return;  // target settled, no need to expand
      for (int ti : v.out[s]) {
        const auto& t = v.transitions[ti];
        if (cc.scc.comp[t.to] != c) continue;
        bool nseen = seen || (prog_event[t.event] && moves_faulty_side(v, t));
        visit(t.to + (nseen ? n : 0), t.event, ti);
      }
    });
    if (!cyc.at(e0 + n).reached) continue;

    Candidate cand;
    cand.entry = e0;
    cand.stem_events = access.at(e0).events;
    cand.stem_chain = access.chain(e0);
    cand.cycle_events = cyc.at(e0 + n).events;
    cand.cycle_chain = cyc.chain(e0 + n);

    if (!best) {
      best = std::move(cand);
      continue;
    }
    auto key = [&](const Candidate& x) {
      return std::make_tuple(observable_count(x.stem_events), x.stem_events, x.cycle_events,
                             x.entry);
    };
    if (key(cand) < key(*best)) best = std::move(cand);
  }
  if (!best) return std::nullopt;

  // replay stem and cycle to read off the confused pair of strings
  const Alphabet& sigma = v.source.automaton.alphabet;
  Witness w;
  Replay rp;
  for (int ti : best->stem_chain) replay_step(v, rp, v.transitions[ti]);
  for (int e : best->stem_events) w.stem.push_back(sigma.at(e).name);

  int entry_state = best->entry;
  FaultLabel phys_a = rp.flipped ? v.right_label(entry_state) : v.left_label(entry_state);
  int fault_phys = phys_a == FaultLabel::F ? 0 : 1;

  Replay cyc_rp;
  cyc_rp.flipped = rp.flipped;
  int cur = entry_state;
  w.cycle_states.push_back(v.state_name(cur));
  for (size_t i = 0; i < best->cycle_chain.size(); ++i) {
    const auto& t = v.transitions[best->cycle_chain[i]];
    replay_step(v, cyc_rp, t);
    cur = t.to;
    if (i + 1 < best->cycle_chain.size()) w.cycle_states.push_back(v.state_name(cur));
  }
  for (int e : best->cycle_events) w.cycle.push_back(sigma.at(e).name);

  w.faulty = join_pattern(rp.side[fault_phys], cyc_rp.side[fault_phys]);
  w.nonfaulty = join_pattern(rp.side[1 - fault_phys], cyc_rp.side[1 - fault_phys]);
  w.horizon = static_cast<int>(w.stem.size() + w.cycle.size());
  return w;
}

std::vector<int> indeterminate_states(const Verifier& v, const std::vector<std::string>& progress) {
  std::vector<int> out;
  if (v.states.empty()) return out;
  CycleComponents cc = find_components(v, progress_flags(v, progress));
  for (size_t s = 0; s < v.states.size(); ++s) {
    int c = cc.scc.comp[s];
    if (c >= 0 && cc.qualifies[c]) out.push_back(static_cast<int>(s));
  }
  return out;
}

}  // namespace moddiag
