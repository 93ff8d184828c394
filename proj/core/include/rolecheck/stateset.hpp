#pragma once

#include <string>
#include <vector>

#include "rolecheck/types.hpp"

namespace rolecheck {

// Subset of a model's states with a fixed universe size. Iteration and
// printing follow state-index order, so every consumer is deterministic.
class StateSet {
public:
  StateSet() = default;
  explicit StateSet(int universe) : bits_(static_cast<size_t>(universe), false) {}

  static StateSet full(int universe) {
    StateSet s(universe);
    s.bits_.assign(s.bits_.size(), true);
    return s;
  }

  int universe_size() const { return static_cast<int>(bits_.size()); }

  bool test(StateId q) const { return bits_[static_cast<size_t>(q)]; }
  void set(StateId q, bool value = true) { bits_[static_cast<size_t>(q)] = value; }

  int count() const {
    int n = 0;
    for (bool b : bits_) n += b;
    return n;
  }
  bool empty() const { return count() == 0; }

  bool subset_of(const StateSet& other) const {
    for (size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] && !other.bits_[i]) return false;
    return true;
  }

  StateSet& operator&=(const StateSet& other) {
    for (size_t i = 0; i < bits_.size(); ++i)
      bits_[i] = bits_[i] && other.bits_[i];
    return *this;
  }
  StateSet& operator|=(const StateSet& other) {
    for (size_t i = 0; i < bits_.size(); ++i)
      bits_[i] = bits_[i] || other.bits_[i];
    return *this;
  }
  StateSet complement() const {
    StateSet s(*this);
    for (size_t i = 0; i < s.bits_.size(); ++i) s.bits_[i] = !s.bits_[i];
    return s;
  }

  std::vector<StateId> elements() const {
    std::vector<StateId> out;
    for (size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) out.push_back(static_cast<StateId>(i));
    return out;
  }

  bool operator==(const StateSet&) const = default;
  // Lexicographic on the bit vector; gives set-of-sets containers a stable order.
  auto operator<=>(const StateSet&) const = default;

private:
  std::vector<bool> bits_;
};

inline StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }
inline StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }

inline std::string to_string(const StateSet& s,
                             const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (StateId q : s.elements()) {
    if (!first) out += ",";
    out += names[static_cast<size_t>(q)];
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace rolecheck
