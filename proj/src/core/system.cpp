#include "system.hpp"

#include "compose.hpp"
#include "errors.hpp"

namespace moddiag {

ModularSystem::ModularSystem(std::vector<std::pair<std::string, Automaton>> modules) {
  for (auto& [name, m] : modules) add(name, m);
}

void ModularSystem::add(const std::string& name, const Automaton& module) {
  if (name.empty()) throw ModelError("module name must be non-empty");
  if (index_of(name) >= 0) throw ModelError("duplicate module '" + name + "'");
  Automaton m = module;
  m.compile();
  // attribute agreement against everything already present
  for (const auto& [other_name, other] : modules_) {
    auto clash = Alphabet::conflicts(other.alphabet, m.alphabet);
    if (!clash.empty())
      throw ModelError("modules '" + other_name + "' and '" + name + "': " + clash.front());
  }
  modules_.emplace_back(name, std::move(m));
}

int ModularSystem::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (modules_[i].first == name) return i;
  return -1;
}

std::vector<std::string> ModularSystem::names() const {
  std::vector<std::string> out;
  for (const auto& [name, m] : modules_) out.push_back(name);
  return out;
}

Alphabet ModularSystem::merged_alphabet() const {
  Alphabet out;
  for (const auto& [name, m] : modules_) out = Alphabet::merged(out, m.alphabet);
  return out;
}

Automaton ModularSystem::compose_all() const {
  return compose(names());
}

Automaton ModularSystem::compose(const std::vector<std::string>& which) const {
  std::vector<const Automaton*> parts;
  for (const auto& name : which) {
    int i = index_of(name);
    if (i < 0) throw ModelError("unknown module '" + name + "'");
    parts.push_back(&module(i));
  }
  return parallel_compose(parts);
}

}  // namespace moddiag
