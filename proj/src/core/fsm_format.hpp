// fsm_format.hpp -- the plain-text automaton interchange format
//
//   # comment
//   name: g1
//   events:
//     c o        (o = observable, u = unobservable (default), f = fault)
//     f u f
//   states:
//     0 init     (init once per file; marked allowed)
//   trans:
//     0 c 0
//
// Parsing is strict about semantics (duplicate names, two initial states,
// observable faults, unknown references) and reports 1-based line numbers.
// serialize_fsm emits the canonical form: two-space indent, explicit o/u
// flag, declaration order preserved; parse(serialize(a)) round-trips.
#pragma once

#include <string>
#include <string_view>

#include "automaton.hpp"

namespace moddiag {

struct NamedAutomaton {
  std::string name;
  Automaton automaton;
};

NamedAutomaton parse_fsm(std::string_view text);  // throws ParseError

std::string serialize_fsm(const NamedAutomaton& na);
inline std::string serialize_fsm(const std::string& name, const Automaton& a) {
  return serialize_fsm({name, a});
}

}  // namespace moddiag
