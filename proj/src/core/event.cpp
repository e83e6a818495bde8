#include "event.hpp"

#include "errors.hpp"

namespace moddiag {

Alphabet::Alphabet(std::vector<Event> events) {
  for (auto& e : events) add(e);
}

int Alphabet::add(const Event& e) {
  if (e.name.empty()) throw ModelError("event name must be non-empty");
  if (e.fault && e.observable)
    throw ModelError("event '" + e.name + "' is a fault and must be unobservable");
  if (index_.count(e.name))
    throw ModelError("duplicate event '" + e.name + "'");
  int idx = size();
  index_[e.name] = idx;
  events_.push_back(e);
  return idx;
}

int Alphabet::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

std::vector<std::string> Alphabet::names() const {
  std::vector<std::string> out;
  out.reserve(events_.size());
  for (const auto& e : events_) out.push_back(e.name);
  return out;
}

std::vector<std::string> Alphabet::observable_names() const {
  std::vector<std::string> out;
  for (const auto& e : events_)
    if (e.observable) out.push_back(e.name);
  return out;
}

std::vector<std::string> Alphabet::fault_names() const {
  std::vector<std::string> out;
  for (const auto& e : events_)
    if (e.fault) out.push_back(e.name);
  return out;
}

std::vector<std::string> Alphabet::common_names(const Alphabet& other) const {
  std::vector<std::string> out;
  for (const auto& e : events_)
    if (other.contains(e.name)) out.push_back(e.name);
  return out;
}

std::vector<std::string> Alphabet::conflicts(const Alphabet& a, const Alphabet& b) {
  std::vector<std::string> out;
  for (const auto& e : a.events_) {
    int j = b.index_of(e.name);
    if (j < 0) continue;
    const Event& f = b.at(j);
    if (e.observable != f.observable)
      out.push_back("event '" + e.name + "' is observable in one alphabet and unobservable in the other");
    if (e.fault != f.fault)
      out.push_back("event '" + e.name + "' is a fault in one alphabet but not the other");
  }
  return out;
}

Alphabet Alphabet::merged(const Alphabet& a, const Alphabet& b) {
  auto clash = conflicts(a, b);
  if (!clash.empty()) throw ModelError("attribute conflict: " + clash.front());
  Alphabet out = a;
  for (const auto& e : b.events_)
    if (!out.contains(e.name)) out.add(e);
  return out;
}

}  // namespace moddiag
