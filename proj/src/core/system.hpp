// system.hpp -- named collections of component modules
#pragma once

#include <string>
#include <vector>

#include "automaton.hpp"

namespace moddiag {

/// Ordered list of named modules with pairwise attribute-consistent alphabets.
/// Module order is declaration order and drives every deterministic choice
/// made downstream (check order, candidate ranking, partition canonical form).
class ModularSystem {
 public:
  ModularSystem() = default;
  explicit ModularSystem(std::vector<std::pair<std::string, Automaton>> modules);

  void add(const std::string& name, const Automaton& module);

  int size() const { return static_cast<int>(modules_.size()); }
  const std::string& name(int i) const { return modules_.at(i).first; }
  const Automaton& module(int i) const { return modules_.at(i).second; }
  int index_of(const std::string& name) const;  // -1 if absent
  std::vector<std::string> names() const;

  /// Union alphabet across all modules (module order, then event order).
  Alphabet merged_alphabet() const;

  /// Composition of every module. Single-module systems come back accessible
  /// but otherwise unchanged.
  Automaton compose_all() const;
  /// Composition of the named subset, in module order.
  Automaton compose(const std::vector<std::string>& which) const;

 private:
  std::vector<std::pair<std::string, Automaton>> modules_;
};

}  // namespace moddiag
