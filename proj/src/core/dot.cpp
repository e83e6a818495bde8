#include "dot.hpp"

#include <set>

namespace moddiag {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const Automaton& a, const std::string& graph_name) {
  std::string out = "digraph " + quoted(graph_name) + " {\n  rankdir=LR;\n";
  for (int s = 0; s < a.state_count(); ++s) {
    out += "  " + quoted(a.state_names[s]) + " [shape=" +
           (a.marked[s] ? std::string("doublecircle") : std::string("circle"));
    if (s == a.initial) out += " style=bold";
    out += "];\n";
  }
  for (const auto& t : a.transitions)
    out += "  " + quoted(a.state_names[t.from]) + " -> " + quoted(a.state_names[t.to]) +
           " [label=" + quoted(a.alphabet.at(t.event).name) + "];\n";
  return out + "}\n";
}

std::string to_dot(const Verifier& v, const std::vector<std::string>& progress,
                   const std::string& graph_name) {
  std::set<int> hot;
  for (int s : indeterminate_states(v, progress)) hot.insert(s);
  std::string out = "digraph " + quoted(graph_name) + " {\n  rankdir=LR;\n";
  for (size_t s = 0; s < v.states.size(); ++s) {
    out += "  " + quoted(v.state_name(static_cast<int>(s))) + " [shape=box";
    if (s == 0) out += " style=bold";
    if (hot.count(static_cast<int>(s)))
      out += " style=filled fillcolor=lightpink";
    out += "];\n";
  }
  for (const auto& t : v.transitions)
    out += "  " + quoted(v.state_name(t.from)) + " -> " + quoted(v.state_name(t.to)) +
           " [label=" + quoted(v.source.automaton.alphabet.at(t.event).name) + "];\n";
  return out + "}\n";
}

}  // namespace moddiag
