#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rolecheck/cgs.hpp"
#include "rolecheck/checker.hpp"
#include "rolecheck/model.hpp"

namespace rolecheck {

struct TranslateOptions {
  // Upper bound on the per-state complete tuple count of the result.
  std::int64_t state_cap = 10'000'000;
};

// Expands a role-based model into the equivalent agent-indexed one: every
// agent gets its role's action count, and a tuple's target is the target of
// the profile obtained by counting votes role by role. Throws cap_error when
// some state exceeds the cap. The result is compiled and carries no explicit
// transition entries; serialize it to materialize them.
Cgs translate(const Rcgs& m, const TranslateOptions& options = {});

// Per-role action histogram of a coalition's action tuple at q. actions[i]
// is the 0-based action picked by A.members[i].
Profile abstract_tuple(const Rcgs& m, StateId q, const Coalition& A,
                       const std::vector<int>& actions);

// Canonical witness tuple for a coalition profile at q: within each role,
// ascending members pick ascending actions, matching the vote's counts.
// Inverse of abstract_tuple on its image.
std::vector<int> concretize_profile(const Rcgs& m, StateId q, const Coalition& A,
                                    const Profile& f);

// Embeds an agent-indexed model as a role-based one with one singleton role
// per agent. Votes become unit vectors, so the role-based machinery runs
// unchanged on classical models.
Rcgs singleton_roles(const Cgs& m);

struct CgsEnforceCall {
  StateId state;
  std::int64_t tuple_visits;
};

// Work counters for one classical run. tuple_visits counts every complete
// action tuple inspected by enforce.
struct CgsCheckStats {
  std::int64_t enforce_calls = 0;
  std::int64_t tuple_visits = 0;
  std::int64_t fixpoint_iterations = 0;
  std::vector<CgsEnforceCall> calls;
};

// Classical fixed-point engine over agent-indexed models. Kept separate from
// the role-based engine so the two can be compared; enforce always sweeps
// every complete tuple once, grouping by the coalition's projection, with no
// early exit.
class CgsChecker {
public:
  explicit CgsChecker(const Cgs& model, CgsCheckStats* stats = nullptr);

  StateSet check(const Formula& f);
  bool enforce(const Coalition& A, StateId q, const StateSet& target);
  std::vector<StateSet> force_set(StateId q, const Coalition& A);

private:
  StateSet eval(const Formula& f);
  StateSet until_fixpoint(const Coalition& A, const StateSet& phi,
                          const StateSet& psi);
  // Per (state, coalition) sweep: alive[g] says whether projection group g
  // still sends everything into the current target.
  void sweep(const Coalition& A, StateId q, const StateSet& target,
             std::vector<char>& alive);

  const Cgs& model_;
  CgsCheckStats* stats_;
};

// Convenience wrapper: one-shot classical run.
StateSet cgs_mcheck(const Cgs& model, const Formula& f,
                    CgsCheckStats* stats = nullptr);

// True iff the sets of enforceable successor sets coincide at q for A on the
// role-based model and on its agent-indexed expansion.
bool verify_force_equality(const Rcgs& m, const Cgs& translated, StateId q,
                           const Coalition& A);

// Same check, translating internally.
bool verify_force_equality(const Rcgs& m, StateId q, const Coalition& A);

}  // namespace rolecheck
