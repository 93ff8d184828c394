#pragma once

#include <string>
#include <vector>

#include "rolecheck/cgs.hpp"
#include "rolecheck/model.hpp"

namespace rolecheck {

struct SizeRow {
  StateId state = -1;
  BigInt profiles;         // complete role-vote profiles at the state
  BigInt members_pow;      // per role: |members|^actions (exact count for
                           // roles with fewer than two members)
  BigInt actions_pow;      // per role: actions^|members|
  BigInt tuples;           // complete action tuples of the agent-indexed form
  double ratio = 0.0;      // tuples / profiles
};

struct SizeReport {
  std::vector<SizeRow> rows;  // one per state, in state order
  BigInt total_profiles;
  BigInt total_tuples;
  bool bounds_ok = true;  // every row: profiles <= each bound and <= tuples
};

// Per-state size comparison between the role-based table and its
// agent-indexed expansion. When paired is given its tuple counts are used
// (and must describe a model with the same state count); otherwise they are
// derived from the role degrees directly, no expansion is materialized.
SizeReport size_report(const Rcgs& m, const Cgs* paired = nullptr);

// Fixed-width text table, one line per state plus a totals line.
std::string render_table(const SizeReport& report, const Rcgs& m);

// Machine-readable key=value records, one line per state plus a totals line.
std::string render_records(const SizeReport& report, const Rcgs& m);

}  // namespace rolecheck
