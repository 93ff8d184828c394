#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rolecheck/combinatorics.hpp"
#include "rolecheck/types.hpp"

namespace rolecheck {

struct TransitionEntry {
  Profile key;  // complete profile
  StateId target = 0;
};

struct StateTransitions {
  std::vector<TransitionEntry> entries;
  // Target for every profile not covered by an explicit entry. Expanded when
  // the dense table is built; the canonical serialization never emits it.
  std::optional<StateId> default_target;
};

// Per-state lookup structures built by Rcgs::compile().
struct StateIndex {
  std::vector<std::int64_t> vote_counts;   // per role: complete vote count
  std::vector<std::int64_t> radix_suffix;  // radix_suffix[r] = prod of vote_counts after r
  std::int64_t profile_total = 0;          // complete profile count
  std::vector<StateId> delta;              // profile rank -> target
  std::vector<int> role_of_agent;          // [agent-1] -> role index, -1 if unassigned
};

// Concurrent game structure with roles: agents are partitioned into roles
// per state, the transition function is keyed by one vote per role, and a
// vote only counts how many members of the role picked each action.
struct Rcgs {
  int agent_count = 0;
  std::vector<std::string> role_names;  // size = role count; entries may be ""
  std::vector<std::string> state_names;
  std::vector<std::string> props;

  std::vector<std::vector<bool>> labels;                    // [state][prop]
  std::vector<std::vector<std::vector<Agent>>> role_members;  // [state][role], sorted
  std::vector<std::vector<int>> action_counts;              // [state][role]
  std::vector<StateTransitions> transitions;                // [state]

  static constexpr std::int64_t default_compile_cap = 10'000'000;

  int role_count() const { return static_cast<int>(role_names.size()); }
  int state_count() const { return static_cast<int>(state_names.size()); }

  std::optional<StateId> state_index(std::string_view name) const;
  std::optional<int> prop_index(std::string_view name) const;

  // Builds dense transition tables (expanding per-state defaults) and the
  // agent-to-role maps. Requires validate(*this) to be clean; throws
  // cap_error when a state's profile count exceeds the cap. Idempotent.
  void compile(std::int64_t cap = default_compile_cap);
  bool compiled() const { return !index_.empty(); }
  const StateIndex& index(StateId q) const { return index_[static_cast<size_t>(q)]; }
  std::vector<StateIndex>& mutable_index() { return index_; }

  // Transition lookup for a complete profile. Requires compiled().
  StateId target(StateId q, const Profile& complete) const;

  // Role of an agent at a state; -1 when unassigned. Works uncompiled.
  int role_of(StateId q, Agent a) const;

  // Structural equality. Transition functions are compared via the dense
  // tables when both sides are compiled, else via the raw entry lists.
  bool operator==(const Rcgs& other) const;

private:
  std::vector<StateIndex> index_;
};

struct Violation {
  enum class Code {
    Malformed,       // container shapes disagree with declared counts
    NoAgents,
    NoRoles,
    NoStates,
    RoleOverlap,     // agent in two roles at a state
    Unassigned,      // agent in no role at a state
    BadAgent,        // role member outside 1..n
    BadActionCount,  // action count < 1
    BadProfile,      // transition key is not a legal complete profile
    BadTarget,       // transition target out of range
    DuplicateEntry,  // same profile keyed twice at a state
    NotTotal,        // missing profiles and no default
  };
  Code code;
  StateId state = -1;  // -1 when not state-specific
  int role = -1;       // -1 when not role-specific
  std::string detail;
};

std::string to_string(const Violation& v, const Rcgs& m);

// Full structural check; returns every violation found. Empty result means
// the model satisfies the representation invariants.
std::vector<Violation> validate(const Rcgs& m);

// Per-role coalition member counts |A ∩ R(q,r)|.
std::vector<int> coalition_role_counts(const Rcgs& m, StateId q, const Coalition& A);

// All A-profiles at q: the per-role cartesian product of the coalition's
// vote enumerations, first role varying slowest. A = all agents yields the
// complete profile set.
std::vector<Profile> enumerate_profiles(const Rcgs& m, StateId q, const Coalition& A);

// Same enumeration keyed by per-role member counts instead of a coalition.
// Profile sets depend only on the counts, which is what makes them worth
// caching across coalitions.
std::vector<Profile> profiles_for_role_counts(const Rcgs& m, StateId q,
                                              const std::vector<int>& member_counts);

// |Prof(q)| as an exact product of composition counts; never materializes.
BigInt profile_count(const Rcgs& m, StateId q);

// True iff g extends f: same shape and every entry of f <= the matching
// entry of g. Throws on shape mismatch.
bool extends(const Profile& f, const Profile& g);

// All complete extensions of a partial profile at q, computed by adding
// every complement profile componentwise (never by filtering Prof(q)).
// The partial profile's per-role sums determine the complement sizes.
std::vector<Profile> extensions(const Rcgs& m, StateId q, const Profile& partial);

// Targets of all complete extensions of a partial profile; sorted, deduped.
// Requires compiled().
std::vector<StateId> successors(const Rcgs& m, StateId q, const Profile& partial);

}  // namespace rolecheck
