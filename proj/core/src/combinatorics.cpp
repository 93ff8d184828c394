#include "rolecheck/combinatorics.hpp"

#include <limits>
#include <numeric>

namespace rolecheck {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  // r stays integral at every step: after the i-th iteration r == C(n-k+i, i).
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

BigInt composition_count(int m, int k) {
  if (m < 0) throw std::invalid_argument("composition_count: negative sum");
  if (k < 1) throw std::invalid_argument("composition_count: need at least one part");
  return binomial(m + k - 1, k - 1);
}

std::int64_t composition_count_i64(int m, int k) {
  BigInt c = composition_count(m, k);
  if (c > std::numeric_limits<std::int64_t>::max())
    throw cap_error("composition count exceeds 64-bit range");
  return static_cast<std::int64_t>(c);
}

std::vector<Vote> enumerate_votes(int m, int k) {
  BigInt total = composition_count(m, k);  // validates m, k
  if (total > 100'000'000)
    throw cap_error("enumerate_votes: refusing to materialize " + total.str() +
                    " votes");
  std::vector<Vote> out;
  out.reserve(static_cast<size_t>(total));
  Vote prefix;
  prefix.reserve(static_cast<size_t>(k));
  // Recursive descent emits ascending lexicographic order because the first
  // coordinate grows outermost.
  auto rec = [&](auto&& self, int rest, int parts) -> void {
    if (parts == 1) {
      prefix.push_back(rest);
      out.push_back(prefix);
      prefix.pop_back();
      return;
    }
    for (int x = 0; x <= rest; ++x) {
      prefix.push_back(x);
      self(self, rest - x, parts - 1);
      prefix.pop_back();
    }
  };
  rec(rec, m, k);
  return out;
}

std::int64_t vote_rank(const Vote& v) {
  if (v.empty()) throw std::invalid_argument("vote_rank: empty vote");
  int rest = std::accumulate(v.begin(), v.end(), 0);
  std::int64_t rank = 0;
  for (size_t i = 0; i + 1 < v.size(); ++i) {
    int parts = static_cast<int>(v.size() - i);
    // Votes with a smaller entry at position i precede v. Their number
    // telescopes (hockey stick) to a difference of two composition counts.
    rank += composition_count_i64(rest, parts) -
            composition_count_i64(rest - v[i], parts);
    rest -= v[i];
  }
  return rank;
}

}  // namespace rolecheck
