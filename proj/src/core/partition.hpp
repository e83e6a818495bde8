// partition.hpp -- groupings of modules into virtual modules
#pragma once

#include <string>
#include <vector>

#include "automaton.hpp"
#include "system.hpp"

namespace moddiag {

/// A partition of a system's modules into blocks. Canonical form orders each
/// block by module declaration order and the blocks by their first member.
struct Partition {
  std::vector<std::vector<std::string>> blocks;

  static Partition discrete(const ModularSystem& sys);
  static Partition coarsest(const ModularSystem& sys);  // one block with everything

  /// Index of the block containing `module`, -1 when absent.
  int block_of(const std::string& module) const;

  Partition canonical(const ModularSystem& sys) const;

  /// "{a,b}|{c}" rendering of the canonical form.
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.blocks == b.blocks; }
};

/// Checks that the blocks cover every module of `sys` exactly once and name
/// nothing unknown. Violations come back as messages; ok() means valid.
ValidationReport validate_partition(const Partition& p, const ModularSystem& sys);

/// Parses "a,b|c" into blocks (whitespace around names ignored).
Partition parse_partition(const std::string& text);

}  // namespace moddiag
