#include "rolecheck/measure.hpp"

#include <chrono>

namespace rolecheck {

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                   start)
      .count();
}

}  // namespace

WorkTrace measure(const Rcgs& m, const Formula& f) {
  CheckStats stats;
  auto start = std::chrono::steady_clock::now();
  StateSet result = mcheck(m, f, &stats);
  WorkTrace trace;
  trace.elapsed_ms = ms_since(start);
  trace.result = std::move(result);
  trace.enforce_calls = stats.enforce_calls;
  trace.extension_visits = stats.extension_visits;
  trace.fixpoint_iterations = stats.fixpoint_iterations;
  for (const EnforceCall& call : stats.calls) {
    std::int64_t total = m.index(call.state).profile_total;
    WorkCall row{call.state, call.extension_visits, total * total};
    if (row.visits > row.bound) trace.per_call_bound_ok = false;
    trace.calls.push_back(row);
  }
  return trace;
}

PairedTrace measure_paired(const Rcgs& m, const Cgs& translated, const Formula& f) {
  PairedTrace trace;
  trace.role_side = measure(m, f);

  CgsCheckStats stats;
  auto start = std::chrono::steady_clock::now();
  StateSet cgs_result = cgs_mcheck(translated, f, &stats);
  trace.cgs_elapsed_ms = ms_since(start);
  trace.cgs_enforce_calls = stats.enforce_calls;
  trace.cgs_tuple_visits = stats.tuple_visits;
  trace.agree = trace.role_side.result == cgs_result;
  trace.role_not_slower = trace.role_side.extension_visits <= stats.tuple_visits;
  return trace;
}

PairedTrace measure_paired(const Rcgs& m, const Formula& f,
                           const TranslateOptions& options) {
  Cgs translated = translate(m, options);
  return measure_paired(m, translated, f);
}

}  // namespace rolecheck
