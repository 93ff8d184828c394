#pragma once

#include <cstdint>
#include <vector>

#include "rolecheck/bridge.hpp"
#include "rolecheck/checker.hpp"

namespace rolecheck {

struct WorkCall {
  StateId state = -1;
  std::int64_t visits = 0;  // (coalition, complement) pairs inspected
  std::int64_t bound = 0;   // square of the state's complete profile count
};

// Instrumented run of the fixed-point engine on one formula.
struct WorkTrace {
  std::vector<WorkCall> calls;
  std::int64_t enforce_calls = 0;
  std::int64_t extension_visits = 0;
  std::int64_t fixpoint_iterations = 0;
  double elapsed_ms = 0.0;
  bool per_call_bound_ok = true;  // every call stayed within its bound
  StateSet result;
};

WorkTrace measure(const Rcgs& m, const Formula& f);

// The same formula run on both sides of the expansion, with the agent-indexed
// work counted in complete tuples.
struct PairedTrace {
  WorkTrace role_side;
  std::int64_t cgs_enforce_calls = 0;
  std::int64_t cgs_tuple_visits = 0;
  double cgs_elapsed_ms = 0.0;
  bool agree = true;           // both sides computed the same satisfying set
  bool role_not_slower = true; // extension visits <= tuple visits
};

PairedTrace measure_paired(const Rcgs& m, const Formula& f,
                           const TranslateOptions& options = {});

// Variant for a pre-translated pair.
PairedTrace measure_paired(const Rcgs& m, const Cgs& translated, const Formula& f);

}  // namespace rolecheck
