#include <algorithm>

#include "rolecheck/checker.hpp"

namespace rolecheck {

namespace {

// Evaluates one strategic operator by full strategy enumeration. phi is the
// left operand set (ignored for Next/Globally), psi the right/only one.
StateSet strategic_naive(const Rcgs& m, Op op, const Coalition& A,
                         const StateSet& phi, const StateSet& psi,
                         const NaiveOptions& options) {
  int n = m.state_count();

  // Per state: the coalition's profiles and each profile's successor set.
  std::vector<std::vector<std::vector<StateId>>> succ(static_cast<size_t>(n));
  BigInt strategies = 1;
  for (StateId q = 0; q < n; ++q) {
    std::vector<Profile> profs = enumerate_profiles(m, q, A);
    strategies *= profs.size();
    for (const Profile& f : profs)
      succ[static_cast<size_t>(q)].push_back(successors(m, q, f));
  }
  if (strategies > options.strategy_limit)
    throw cap_error("strategy space of size " + strategies.str() +
                    " exceeds the limit " +
                    std::to_string(options.strategy_limit));

  StateSet result(n);
  std::vector<size_t> choice(static_cast<size_t>(n), 0);
  std::vector<const std::vector<StateId>*> adj(static_cast<size_t>(n));
  std::vector<char> seen(static_cast<size_t>(n));
  std::vector<StateId> stack;

  std::int64_t total = static_cast<std::int64_t>(strategies);
  for (std::int64_t step = 0; step < total; ++step) {
    for (StateId q = 0; q < n; ++q)
      adj[static_cast<size_t>(q)] = &succ[static_cast<size_t>(q)][choice[static_cast<size_t>(q)]];

    switch (op) {
      case Op::Next: {
        // One-step outcomes from q are exactly the successors of the
        // strategy's profile at q.
        for (StateId q = 0; q < n; ++q) {
          if (result.test(q)) continue;
          bool ok = true;
          for (StateId t : *adj[static_cast<size_t>(q)])
            if (!psi.test(t)) ok = false;
          if (ok) result.set(q);
        }
        break;
      }
      case Op::Globally: {
        // Every play stays inside psi iff every state reachable from q
        // (including q) satisfies psi; the restricted graph is total.
        for (StateId q = 0; q < n; ++q) {
          if (result.test(q)) continue;
          std::fill(seen.begin(), seen.end(), 0);
          stack.assign(1, q);
          seen[static_cast<size_t>(q)] = 1;
          bool ok = true;
          while (!stack.empty() && ok) {
            StateId cur = stack.back();
            stack.pop_back();
            if (!psi.test(cur)) {
              ok = false;
              break;
            }
            for (StateId t : *adj[static_cast<size_t>(cur)])
              if (!seen[static_cast<size_t>(t)]) {
                seen[static_cast<size_t>(t)] = 1;
                stack.push_back(t);
              }
          }
          if (ok) result.set(q);
        }
        break;
      }
      case Op::Until: {
        // Backward "all paths reach psi through phi" analysis on the
        // restricted graph.
        StateSet good = psi;
        bool changed = true;
        while (changed) {
          changed = false;
          for (StateId q = 0; q < n; ++q) {
            if (good.test(q) || !phi.test(q)) continue;
            bool all_in = true;
            for (StateId t : *adj[static_cast<size_t>(q)])
              if (!good.test(t)) all_in = false;
            if (all_in) {
              good.set(q);
              changed = true;
            }
          }
        }
        result |= good;
        break;
      }
      default:
        throw std::logic_error("strategic_naive on a non-strategic operator");
    }

    if (result.count() == n) break;  // every state already has a witness

    for (StateId q = n - 1; q >= 0; --q) {
      size_t qi = static_cast<size_t>(q);
      if (++choice[qi] < succ[qi].size()) break;
      choice[qi] = 0;
    }
  }
  return result;
}

StateSet eval_naive(const Rcgs& m, const Formula& f, const NaiveOptions& options) {
  int n = m.state_count();
  switch (f.op()) {
    case Op::True:
      return StateSet::full(n);
    case Op::False:
      return StateSet(n);
    case Op::Prop: {
      StateSet s(n);
      int p = *m.prop_index(f.prop_name());
      for (StateId q = 0; q < n; ++q)
        if (m.labels[static_cast<size_t>(q)][static_cast<size_t>(p)]) s.set(q);
      return s;
    }
    case Op::Not:
      return eval_naive(m, f.child(0), options).complement();
    case Op::And:
      return eval_naive(m, f.child(0), options) & eval_naive(m, f.child(1), options);
    case Op::Or:
      return eval_naive(m, f.child(0), options) | eval_naive(m, f.child(1), options);
    case Op::Implies:
      return eval_naive(m, f.child(0), options).complement() |
             eval_naive(m, f.child(1), options);
    case Op::Next:
      return strategic_naive(m, Op::Next, f.coalition(), StateSet(n),
                             eval_naive(m, f.child(0), options), options);
    case Op::Globally:
      return strategic_naive(m, Op::Globally, f.coalition(), StateSet(n),
                             eval_naive(m, f.child(0), options), options);
    case Op::Eventually:
      return strategic_naive(m, Op::Until, f.coalition(), StateSet::full(n),
                             eval_naive(m, f.child(0), options), options);
    case Op::Until:
      return strategic_naive(m, Op::Until, f.coalition(),
                             eval_naive(m, f.child(0), options),
                             eval_naive(m, f.child(1), options), options);
  }
  throw std::logic_error("unreachable formula operator");
}

}  // namespace

StateSet mcheck_naive(const Rcgs& model, const Formula& f,
                      const NaiveOptions& options) {
  if (!model.compiled())
    throw std::logic_error("mcheck_naive requires a compiled model");
  return eval_naive(model, bind(f, model), options);
}

}  // namespace rolecheck
