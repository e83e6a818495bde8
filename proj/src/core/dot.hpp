// dot.hpp -- Graphviz export
#pragma once

#include <string>
#include <vector>

#include "automaton.hpp"
#include "verifier.hpp"

namespace moddiag {

/// One node per state (marked states get a double border, the initial state a
/// bold outline), one edge per transition, labelled with the event.
std::string to_dot(const Automaton& a, const std::string& graph_name = "G");

/// Pair-state graph with "xL;yL" node labels; states on an indeterminate
/// cycle (w.r.t. `progress`) are filled.
std::string to_dot(const Verifier& v, const std::vector<std::string>& progress,
                   const std::string& graph_name = "verifier");

}  // namespace moddiag
