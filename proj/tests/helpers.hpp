#pragma once

#include <random>
#include <string>
#include <vector>

#include "rolecheck/formula.hpp"
#include "rolecheck/model.hpp"

// Test-side oracles. These recompute what the library computes, by slower
// and structurally different means, so agreement is evidence rather than
// tautology.
namespace testutil {

using namespace rolecheck;

// All length-k vectors of nonnegative ints summing to m, by an odometer over
// [0..m]^k with the last position fastest; that order is ascending
// lexicographic with the first position most significant.
inline std::vector<Vote> votes_brute(int m, int k) {
  std::vector<Vote> out;
  Vote v(static_cast<size_t>(k), 0);
  for (;;) {
    int sum = 0;
    for (int x : v) sum += x;
    if (sum == m) out.push_back(v);
    int i = k - 1;
    while (i >= 0 && v[static_cast<size_t>(i)] == m) v[static_cast<size_t>(i--)] = 0;
    if (i < 0) break;
    ++v[static_cast<size_t>(i)];
  }
  return out;
}

// Per-role member counts of a coalition, by direct membership scan.
inline std::vector<int> counts_brute(const Rcgs& m, StateId q, const Coalition& A) {
  std::vector<int> counts(static_cast<size_t>(m.role_count()), 0);
  for (int r = 0; r < m.role_count(); ++r)
    for (Agent a : m.role_members[static_cast<size_t>(q)][static_cast<size_t>(r)])
      if (A.contains(a)) ++counts[static_cast<size_t>(r)];
  return counts;
}

// Coalition profiles as the cartesian product of per-role brute votes,
// role 0 varying slowest.
inline std::vector<Profile> profiles_brute(const Rcgs& m, StateId q,
                                           const Coalition& A) {
  std::vector<int> counts = counts_brute(m, q, A);
  std::vector<Profile> out{{}};
  for (int r = 0; r < m.role_count(); ++r) {
    std::vector<Profile> next;
    for (const Profile& p : out)
      for (const Vote& v :
           votes_brute(counts[static_cast<size_t>(r)],
                       m.action_counts[static_cast<size_t>(q)][static_cast<size_t>(r)])) {
        Profile grown = p;
        grown.push_back(v);
        next.push_back(std::move(grown));
      }
    out = std::move(next);
  }
  return out;
}

// Complete extensions of a partial profile, by filtering the complete
// profile set componentwise (the library adds complements instead).
inline std::vector<Profile> extensions_brute(const Rcgs& m, StateId q,
                                             const Profile& partial) {
  std::vector<Profile> out;
  for (const Profile& full : profiles_brute(m, q, Coalition::all(m.agent_count))) {
    bool dominates = true;
    for (size_t r = 0; r < full.size() && dominates; ++r)
      for (size_t i = 0; i < full[r].size(); ++i)
        if (partial[r][i] > full[r][i]) {
          dominates = false;
          break;
        }
    if (dominates) out.push_back(full);
  }
  return out;
}

// Random coalition over agents 1..n; may be empty.
inline Coalition random_coalition(std::mt19937_64& rng, int agents) {
  std::vector<Agent> members;
  for (Agent a = 1; a <= agents; ++a)
    if (rng() % 2 == 0) members.push_back(a);
  return Coalition(members);
}

// Random formula over the given proposition names, strategic and boolean
// operators mixed, at most the given depth.
inline Formula random_formula(std::mt19937_64& rng, int agents,
                              const std::vector<std::string>& props, int depth) {
  if (depth <= 0 || rng() % 4 == 0) {
    switch (rng() % 6) {
      case 0:
        return Formula::make_true();
      case 1:
        return Formula::make_false();
      default:
        return Formula::prop(props[rng() % props.size()]);
    }
  }
  switch (rng() % 8) {
    case 0:
      return Formula::negation(random_formula(rng, agents, props, depth - 1));
    case 1:
      return Formula::conjunction(random_formula(rng, agents, props, depth - 1),
                                  random_formula(rng, agents, props, depth - 1));
    case 2:
      return Formula::disjunction(random_formula(rng, agents, props, depth - 1),
                                  random_formula(rng, agents, props, depth - 1));
    case 3:
      return Formula::implication(random_formula(rng, agents, props, depth - 1),
                                  random_formula(rng, agents, props, depth - 1));
    case 4:
      return Formula::next(random_coalition(rng, agents),
                           random_formula(rng, agents, props, depth - 1));
    case 5:
      return Formula::globally(random_coalition(rng, agents),
                               random_formula(rng, agents, props, depth - 1));
    case 6:
      return Formula::eventually(random_coalition(rng, agents),
                                 random_formula(rng, agents, props, depth - 1));
    default:
      return Formula::until(random_coalition(rng, agents),
                            random_formula(rng, agents, props, depth - 1),
                            random_formula(rng, agents, props, depth - 1));
  }
}

// Formula battery for the gate models (both families share the proposition
// vocabulary). Coalition placeholders: ALL, TR (all trains), CTR.
inline std::vector<Formula> gate_battery(int n_t) {
  auto join = [](int lo, int hi) {
    std::string s;
    for (int a = lo; a <= hi; ++a) {
      if (!s.empty()) s += ',';
      s += std::to_string(a);
    }
    return s;
  };
  std::string all = join(1, n_t + 1);
  std::string tr = join(1, n_t);
  std::string ctr = std::to_string(n_t + 1);

  std::vector<std::string> texts = {
      "<" + all + "> F in_gate",
      "<" + tr + "> F in_gate",
      "<" + ctr + "> G out_of_gate",
      "<> G out_of_gate",
      "<" + all + "> X request",
      "<" + tr + "> (out_of_gate U grant)",
      "<" + ctr + "> X <" + tr + "> F in_gate",
      "<" + tr + "> G <" + ctr + "> X out_of_gate",
      "!<" + tr + "> G !in_gate & (request -> <" + all + "> F grant)",
      "<1> F (grant & <" + tr + "> X in_gate)",
      "<" + ctr + "> (request U (grant | in_gate))",
      "<" + all + "> G (out_of_gate | in_gate)",
  };
  std::vector<Formula> out;
  for (const std::string& t : texts) out.push_back(parse_formula(t));
  return out;
}

}  // namespace testutil
