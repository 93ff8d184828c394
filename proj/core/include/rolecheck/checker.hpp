#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rolecheck/formula.hpp"
#include "rolecheck/model.hpp"
#include "rolecheck/stateset.hpp"

namespace rolecheck {

struct EnforceCall {
  StateId state;
  std::int64_t extension_visits;
};

// Work counters for one checker run. extension_visits counts every
// (coalition profile, complement profile) pair inspected by enforce.
struct CheckStats {
  std::int64_t enforce_calls = 0;
  std::int64_t extension_visits = 0;
  std::int64_t fixpoint_iterations = 0;
  std::vector<EnforceCall> calls;
};

// Fixed-point engine. One instance per run; the model is shared read-only,
// the instance owns its profile cache, so concurrent runs need separate
// instances.
class Checker {
public:
  explicit Checker(const Rcgs& model, CheckStats* stats = nullptr);

  // Satisfying state set for a formula (binds it first). Boolean operators
  // are set algebra; X is one enforce sweep; G is the greatest fixed point
  // of [[f]] ∩ pre(·); U is the least fixed point of [[g]] ∪ ([[f]] ∩ pre(·)).
  StateSet check(const Formula& f);

  // True iff some coalition profile at q sends every complete extension
  // into target.
  bool enforce(const Coalition& A, StateId q, const StateSet& target);

  // Distinct successor-state sets the coalition can pin down at q, one per
  // coalition profile, deduplicated, in stable order.
  std::vector<StateSet> force_set(StateId q, const Coalition& A);

private:
  StateSet eval(const Formula& f);
  StateSet until_fixpoint(const Coalition& A, const StateSet& phi,
                          const StateSet& psi);
  const std::vector<Profile>& profiles_for(StateId q, const std::vector<int>& counts);

  const Rcgs& model_;
  CheckStats* stats_;
  // Profile sets depend only on (state, per-role member counts); the same
  // cache therefore serves coalition profiles and complement profiles.
  std::map<std::pair<StateId, std::vector<int>>, std::vector<Profile>> profile_cache_;
};

// Convenience wrapper: one-shot run.
StateSet mcheck(const Rcgs& model, const Formula& f, CheckStats* stats = nullptr);

struct NaiveOptions {
  // Upper bound on the number of memoryless coalition strategies enumerated
  // per strategic operator.
  std::int64_t strategy_limit = 1'000'000;
};

// Reference semantics, evaluated directly: enumerate every memoryless
// coalition strategy, build the restricted transition graph it induces, and
// test the path condition on that graph. Exponential; exists to check the
// fixed-point engine, so it deliberately shares no logic with it.
// Throws cap_error when the strategy space exceeds the limit.
StateSet mcheck_naive(const Rcgs& model, const Formula& f,
                      const NaiveOptions& options = {});

}  // namespace rolecheck
