// event.hpp -- events, attributes and ordered alphabets
#pragma once

#include <string>
#include <map>
#include <vector>

namespace moddiag {

struct Event {
  std::string name;
  bool observable = false;
  bool fault = false;  // fault implies unobservable

  friend bool operator==(const Event& a, const Event& b) {
    return a.name == b.name && a.observable == b.observable && a.fault == b.fault;
  }
};

/// Ordered event set. Declaration order is significant: every enumeration,
/// composition and search in the library walks events in this order, which is
/// what makes results reproducible run to run.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Event> events);

  /// Appends an event. Throws ModelError on duplicate name, empty name, or an
  /// observable fault.
  int add(const Event& e);

  int size() const { return static_cast<int>(events_.size()); }
  bool empty() const { return events_.empty(); }
  const Event& at(int i) const { return events_.at(i); }
  const std::vector<Event>& events() const { return events_; }

  /// Index of the named event, -1 if absent.
  int index_of(const std::string& name) const;
  bool contains(const std::string& name) const { return index_of(name) >= 0; }

  std::vector<std::string> names() const;
  std::vector<std::string> observable_names() const;
  std::vector<std::string> fault_names() const;

  /// Events present in both alphabets, in this alphabet's order.
  std::vector<std::string> common_names(const Alphabet& other) const;

  /// Union alphabet: all of `a` in order, then events of `b` not in `a`, in
  /// b's order. Throws ModelError when a shared name carries different
  /// attributes in the two alphabets.
  static Alphabet merged(const Alphabet& a, const Alphabet& b);

  /// Attribute agreement check used by merged(); exposed for validation paths
  /// that want all conflicts listed instead of an exception.
  static std::vector<std::string> conflicts(const Alphabet& a, const Alphabet& b);

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.events_ == b.events_;
  }

 private:
  std::vector<Event> events_;
  std::map<std::string, int> index_;
};

}  // namespace moddiag
