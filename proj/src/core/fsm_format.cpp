#include "fsm_format.hpp"

#include <sstream>

#include "errors.hpp"

namespace moddiag {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

}  // namespace

NamedAutomaton parse_fsm(std::string_view text) {
  enum Section { Preamble, Events, States, Trans };
  Section section = Preamble;

  NamedAutomaton out;
  Automaton& a = out.automaton;
  bool saw_name = false, saw_init = false;
  int init_line = 0;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (is_comment_or_blank(raw)) continue;
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = tokenize(line);

    if (tokens[0] == "name:" || (tokens.size() == 1 && tokens[0].rfind("name:", 0) == 0)) {
      if (section != Preamble || saw_name) throw ParseError("unexpected 'name:'", lineno);
      if (tokens[0] == "name:" && tokens.size() == 2) {
        out.name = tokens[1];
      } else if (tokens.size() == 1 && tokens[0].size() > 5) {
        out.name = tokens[0].substr(5);
      } else {
        throw ParseError("expected 'name: <id>'", lineno);
      }
      saw_name = true;
      continue;
    }
    if (tokens.size() == 1 && tokens[0] == "events:") {
      if (section != Preamble) throw ParseError("'events:' out of order", lineno);
      if (!saw_name) throw ParseError("missing 'name:' before 'events:'", lineno);
      section = Events;
      continue;
    }
    if (tokens.size() == 1 && tokens[0] == "states:") {
      if (section != Events) throw ParseError("'states:' out of order", lineno);
      section = States;
      continue;
    }
    if (tokens.size() == 1 && tokens[0] == "trans:") {
      if (section != States) throw ParseError("'trans:' out of order", lineno);
      section = Trans;
      continue;
    }

    switch (section) {
      case Preamble:
        throw ParseError("expected 'name: <id>'", lineno);
      case Events: {
        Event e;
        e.name = tokens[0];
        bool saw_obs_flag = false;
        for (size_t i = 1; i < tokens.size(); ++i) {
          const std::string& t = tokens[i];
          if (t == "o" || t == "u") {
            if (saw_obs_flag) throw ParseError("duplicate observability flag", lineno);
            saw_obs_flag = true;
            e.observable = t == "o";
          } else if (t == "f") {
            if (e.fault) throw ParseError("duplicate fault flag", lineno);
            e.fault = true;
          } else {
            throw ParseError("unknown event flag '" + t + "'", lineno);
          }
        }
        if (e.fault && e.observable)
          throw ParseError("event '" + e.name + "' declared both observable and fault", lineno);
        if (a.alphabet.contains(e.name))
          throw ParseError("duplicate event '" + e.name + "'", lineno);
        if (e.name.find_first_of(",;{}|") != std::string::npos)
          throw ParseError("event name '" + e.name + "' contains reserved characters", lineno);
        a.alphabet.add(e);
        break;
      }
      case States: {
        const std::string& name = tokens[0];
        bool init = false, is_marked = false;
        for (size_t i = 1; i < tokens.size(); ++i) {
          const std::string& t = tokens[i];
          if (t == "init") {
            init = true;
          } else if (t == "marked") {
            is_marked = true;
          } else {
            throw ParseError("unknown state flag '" + t + "'", lineno);
          }
        }
        if (a.find_state(name) >= 0) throw ParseError("duplicate state '" + name + "'", lineno);
        if (name.find_first_of(",;{}|") != std::string::npos)
          throw ParseError("state name '" + name + "' contains reserved characters", lineno);
        int s = a.add_state(name, is_marked);
        if (init) {
          if (saw_init)
            throw ParseError("second 'init' state '" + name + "' (first at line " +
                                 std::to_string(init_line) + ")",
                             lineno);
          saw_init = true;
          init_line = lineno;
          a.initial = s;
        }
        break;
      }
      case Trans: {
        if (tokens.size() != 3) throw ParseError("expected '<src> <event> <dst>'", lineno);
        int from = a.find_state(tokens[0]);
        if (from < 0) throw ParseError("unknown state '" + tokens[0] + "'", lineno);
        int ev = a.alphabet.index_of(tokens[1]);
        if (ev < 0) throw ParseError("unknown event '" + tokens[1] + "'", lineno);
        int to = a.find_state(tokens[2]);
        if (to < 0) throw ParseError("unknown state '" + tokens[2] + "'", lineno);
        a.add_transition(from, ev, to);
        break;
      }
    }
  }

  if (!saw_name) throw ParseError("missing 'name:'", lineno ? lineno : 1);
  if (section != Trans) throw ParseError("missing section (events:/states:/trans:)", lineno);
  if (a.state_count() == 0) throw ParseError("no states declared", lineno);
  if (!saw_init) throw ParseError("no state carries 'init'", lineno);

  auto rep = a.validate();
  if (!rep.ok()) throw ParseError(rep.violations.front(), lineno);
  a.compile();
  return out;
}

std::string serialize_fsm(const NamedAutomaton& na) {
  const Automaton& a = na.automaton;
  std::string out;
  out += "name: " + na.name + "\n";
  out += "events:\n";
  for (const auto& e : a.alphabet.events()) {
    out += "  " + e.name + (e.observable ? " o" : " u");
    if (e.fault) out += " f";
    out += "\n";
  }
  out += "states:\n";
  for (int s = 0; s < a.state_count(); ++s) {
    out += "  " + a.state_names[s];
    if (s == a.initial) out += " init";
    if (a.marked[s]) out += " marked";
    out += "\n";
  }
  out += "trans:\n";
  for (const auto& t : a.transitions)
    out += "  " + a.state_names[t.from] + " " + a.alphabet.at(t.event).name + " " +
           a.state_names[t.to] + "\n";
  return out;
}

}  // namespace moddiag
