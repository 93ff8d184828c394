#pragma once

#include <cstdint>
#include <vector>

#include "rolecheck/types.hpp"

namespace rolecheck {

// C(n, k) as an exact integer. Returns 0 for k < 0 or k > n.
BigInt binomial(int n, int k);

// Number of length-k tuples of non-negative integers summing to m,
// i.e. C(m + k - 1, k - 1). Requires m >= 0 and k >= 1.
BigInt composition_count(int m, int k);

// Same value narrowed to int64; throws cap_error when it does not fit.
std::int64_t composition_count_i64(int m, int k);

// All length-k tuples of non-negative integers summing to m, in ascending
// lexicographic order with the first coordinate most significant:
// (0,...,0,m) first, (m,0,...,0) last. Requires m >= 0, k >= 1, and the
// result size to fit comfortably in memory (guarded).
std::vector<Vote> enumerate_votes(int m, int k);

// Rank of v within enumerate_votes(sum(v), v.size()). Inverse of indexing
// into that enumeration. The caller guarantees the total count fits int64.
std::int64_t vote_rank(const Vote& v);

}  // namespace rolecheck
