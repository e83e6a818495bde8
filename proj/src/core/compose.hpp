// compose.hpp -- synchronous composition and natural projection
#pragma once

#include <vector>

#include "automaton.hpp"

namespace moddiag {

/// Parallel composition: shared events synchronise, private events interleave.
/// Result is accessible by construction; states are named "l,r" after the
/// component states and are marked when both components are marked.
/// Throws ModelError when a shared event carries conflicting attributes.
Automaton parallel_compose(const Automaton& left, const Automaton& right);

/// Left fold of parallel_compose over the list. Requires at least one entry;
/// a single entry comes back accessible but otherwise unchanged.
Automaton parallel_compose(const std::vector<const Automaton*>& parts);

/// Natural projection onto the events in `mask` (erases everything else),
/// determinised by subset construction. Subset states are named "{a,b}" after
/// their members and are marked when some member is marked. The mask may
/// name any events of the alphabet; unknown names are a ModelError.
Automaton project(const Automaton& a, const std::vector<std::string>& mask);

}  // namespace moddiag
