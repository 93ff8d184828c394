#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rolecheck/model.hpp"
#include "rolecheck/types.hpp"

namespace rolecheck {

// Complete action tuple, one 0-based action index per agent, agent order.
using ActionTuple = std::vector<int>;

struct CgsTransitionEntry {
  ActionTuple key;
  StateId target = 0;
};

struct CgsStateTransitions {
  std::vector<CgsTransitionEntry> entries;
  std::optional<StateId> default_target;
};

struct CgsStateIndex {
  std::vector<std::int64_t> radix_suffix;  // [agent-1]: prod of later degrees
  std::int64_t tuple_total = 0;
  std::vector<StateId> delta;  // tuple rank -> target
};

// Classical concurrent game structure: every agent picks an action index,
// transitions are keyed by complete action tuples.
struct Cgs {
  int agent_count = 0;
  std::vector<std::string> state_names;
  std::vector<std::string> props;
  std::vector<std::vector<bool>> labels;      // [state][prop]
  std::vector<std::vector<int>> action_counts;  // [state][agent-1]: degree d_a(q)
  std::vector<CgsStateTransitions> transitions;

  static constexpr std::int64_t default_compile_cap = 10'000'000;

  int state_count() const { return static_cast<int>(state_names.size()); }
  std::optional<StateId> state_index(std::string_view name) const;
  std::optional<int> prop_index(std::string_view name) const;

  // Builds dense tables (expanding defaults); requires validate() clean.
  // Translation products arrive compiled with empty entry lists.
  void compile(std::int64_t cap = default_compile_cap);
  bool compiled() const { return !index_.empty(); }
  const CgsStateIndex& index(StateId q) const {
    return index_[static_cast<size_t>(q)];
  }
  std::vector<CgsStateIndex>& mutable_index() { return index_; }

  std::int64_t tuple_rank(StateId q, const ActionTuple& t) const;
  StateId target(StateId q, const ActionTuple& t) const;

  bool operator==(const Cgs& other) const;

private:
  std::vector<CgsStateIndex> index_;
};

std::vector<Violation> validate(const Cgs& m);
std::string to_string(const Violation& v, const Cgs& m);

// Exact number of complete action tuples at q (product of degrees).
BigInt tuple_count(const Cgs& m, StateId q);

}  // namespace rolecheck
