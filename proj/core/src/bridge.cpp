#include "rolecheck/bridge.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rolecheck/combinatorics.hpp"

namespace rolecheck {

namespace {

// Complete-profile shape at q: one vote per role, all entries zero.
Profile zero_profile(const Rcgs& m, StateId q) {
  Profile p(static_cast<size_t>(m.role_count()));
  for (int r = 0; r < m.role_count(); ++r)
    p[static_cast<size_t>(r)].assign(
        static_cast<size_t>(m.action_counts[static_cast<size_t>(q)][static_cast<size_t>(r)]), 0);
  return p;
}

}  // namespace

Cgs translate(const Rcgs& m, const TranslateOptions& options) {
  if (!m.compiled())
    throw std::logic_error("translate requires a compiled model");

  Cgs out;
  out.agent_count = m.agent_count;
  out.state_names = m.state_names;
  out.props = m.props;
  out.labels = m.labels;

  int n = m.state_count();
  out.action_counts.resize(static_cast<size_t>(n));
  out.transitions.resize(static_cast<size_t>(n));

  std::vector<CgsStateIndex> index(static_cast<size_t>(n));
  for (StateId q = 0; q < n; ++q) {
    const StateIndex& ri = m.index(q);
    std::vector<int>& degrees = out.action_counts[static_cast<size_t>(q)];
    degrees.resize(static_cast<size_t>(m.agent_count));
    BigInt total = 1;
    for (Agent a = 1; a <= m.agent_count; ++a) {
      int r = ri.role_of_agent[static_cast<size_t>(a - 1)];
      if (r < 0)
        throw std::logic_error("translate requires a total role assignment");
      degrees[static_cast<size_t>(a - 1)] =
          m.action_counts[static_cast<size_t>(q)][static_cast<size_t>(r)];
      total *= degrees[static_cast<size_t>(a - 1)];
    }
    if (total > options.state_cap)
      throw cap_error("state " + m.state_names[static_cast<size_t>(q)] + " expands to " +
                      total.str() + " action tuples, over the cap " +
                      std::to_string(options.state_cap));

    CgsStateIndex& ci = index[static_cast<size_t>(q)];
    ci.tuple_total = static_cast<std::int64_t>(total);
    ci.radix_suffix.assign(static_cast<size_t>(m.agent_count), 1);
    for (int a = m.agent_count - 2; a >= 0; --a)
      ci.radix_suffix[static_cast<size_t>(a)] =
          ci.radix_suffix[static_cast<size_t>(a + 1)] *
          degrees[static_cast<size_t>(a + 1)];

    ci.delta.resize(static_cast<size_t>(ci.tuple_total));
    std::vector<int> digits(static_cast<size_t>(m.agent_count), 0);
    Profile hist = zero_profile(m, q);
    for (std::int64_t t = 0; t < ci.tuple_total; ++t) {
      for (auto& vote : hist) std::fill(vote.begin(), vote.end(), 0);
      for (Agent a = 1; a <= m.agent_count; ++a) {
        int r = ri.role_of_agent[static_cast<size_t>(a - 1)];
        ++hist[static_cast<size_t>(r)][static_cast<size_t>(digits[static_cast<size_t>(a - 1)])];
      }
      ci.delta[static_cast<size_t>(t)] = m.target(q, hist);
      for (int a = m.agent_count - 1; a >= 0; --a) {
        size_t ai = static_cast<size_t>(a);
        if (++digits[ai] < degrees[ai]) break;
        digits[ai] = 0;
      }
    }
  }
  out.mutable_index() = std::move(index);
  return out;
}

Profile abstract_tuple(const Rcgs& m, StateId q, const Coalition& A,
                       const std::vector<int>& actions) {
  if (!m.compiled())
    throw std::logic_error("abstract_tuple requires a compiled model");
  if (actions.size() != static_cast<size_t>(A.size()))
    throw std::invalid_argument("abstract_tuple: one action per coalition member");

  const StateIndex& ri = m.index(q);
  Profile hist = zero_profile(m, q);
  for (size_t i = 0; i < actions.size(); ++i) {
    Agent a = A.members[i];
    int r = ri.role_of_agent[static_cast<size_t>(a - 1)];
    if (r < 0)
      throw std::invalid_argument("abstract_tuple: agent " + std::to_string(a) +
                                  " has no role at the state");
    int arity = m.action_counts[static_cast<size_t>(q)][static_cast<size_t>(r)];
    if (actions[i] < 0 || actions[i] >= arity)
      throw std::invalid_argument("abstract_tuple: action " + std::to_string(actions[i]) +
                                  " out of range for agent " + std::to_string(a));
    ++hist[static_cast<size_t>(r)][static_cast<size_t>(actions[i])];
  }
  return hist;
}

std::vector<int> concretize_profile(const Rcgs& m, StateId q, const Coalition& A,
                                    const Profile& f) {
  if (!m.compiled())
    throw std::logic_error("concretize_profile requires a compiled model");
  std::vector<int> counts = coalition_role_counts(m, q, A);
  if (f.size() != counts.size())
    throw std::invalid_argument("concretize_profile: profile has wrong role count");
  for (size_t r = 0; r < f.size(); ++r) {
    int arity = m.action_counts[static_cast<size_t>(q)][r];
    if (f[r].size() != static_cast<size_t>(arity))
      throw std::invalid_argument("concretize_profile: vote arity mismatch at role " +
                                  std::to_string(r + 1));
    int sum = 0;
    for (int v : f[r]) {
      if (v < 0) throw std::invalid_argument("concretize_profile: negative vote entry");
      sum += v;
    }
    if (sum != counts[r])
      throw std::invalid_argument("concretize_profile: vote sum mismatch at role " +
                                  std::to_string(r + 1));
  }

  // Within each role, ascending members get ascending actions; a per-role
  // cursor walks the vote left to right.
  const StateIndex& ri = m.index(q);
  std::vector<size_t> cursor(f.size(), 0);
  std::vector<std::vector<int>> expanded(f.size());
  for (size_t r = 0; r < f.size(); ++r)
    for (size_t j = 0; j < f[r].size(); ++j)
      expanded[r].insert(expanded[r].end(), static_cast<size_t>(f[r][j]),
                         static_cast<int>(j));

  std::vector<int> actions(static_cast<size_t>(A.size()));
  for (size_t i = 0; i < actions.size(); ++i) {
    int r = ri.role_of_agent[static_cast<size_t>(A.members[i] - 1)];
    actions[i] = expanded[static_cast<size_t>(r)][cursor[static_cast<size_t>(r)]++];
  }
  return actions;
}

Rcgs singleton_roles(const Cgs& m) {
  if (!m.compiled())
    throw std::logic_error("singleton_roles requires a compiled model");

  Rcgs out;
  out.agent_count = m.agent_count;
  out.role_names.assign(static_cast<size_t>(m.agent_count), "");
  out.state_names = m.state_names;
  out.props = m.props;
  out.labels = m.labels;

  int n = m.state_count();
  out.role_members.resize(static_cast<size_t>(n));
  out.action_counts.resize(static_cast<size_t>(n));
  out.transitions.resize(static_cast<size_t>(n));

  std::vector<StateIndex> index(static_cast<size_t>(n));
  for (StateId q = 0; q < n; ++q) {
    size_t qi = static_cast<size_t>(q);
    out.role_members[qi].resize(static_cast<size_t>(m.agent_count));
    for (Agent a = 1; a <= m.agent_count; ++a)
      out.role_members[qi][static_cast<size_t>(a - 1)] = {a};
    out.action_counts[qi] = m.action_counts[qi];

    const CgsStateIndex& ci = m.index(q);
    StateIndex& ri = index[qi];
    ri.vote_counts.reserve(static_cast<size_t>(m.agent_count));
    for (int d : m.action_counts[qi])
      ri.vote_counts.push_back(d);  // one singleton member: one vote per action
    ri.radix_suffix = ci.radix_suffix;
    ri.profile_total = ci.tuple_total;
    ri.role_of_agent.resize(static_cast<size_t>(m.agent_count));
    for (Agent a = 1; a <= m.agent_count; ++a)
      ri.role_of_agent[static_cast<size_t>(a - 1)] = a - 1;

    // Singleton votes enumerate (0,..,0,1) first, so a vote picking action j
    // has rank d-1-j: the profile table is the tuple table with every digit
    // reversed.
    ri.delta.resize(static_cast<size_t>(ci.tuple_total));
    std::vector<int> digits(static_cast<size_t>(m.agent_count), 0);
    for (std::int64_t t = 0; t < ci.tuple_total; ++t) {
      std::int64_t rank = 0;
      for (Agent a = 1; a <= m.agent_count; ++a) {
        size_t ai = static_cast<size_t>(a - 1);
        int d = m.action_counts[qi][ai];
        rank += static_cast<std::int64_t>(d - 1 - digits[ai]) * ci.radix_suffix[ai];
      }
      ri.delta[static_cast<size_t>(rank)] = ci.delta[static_cast<size_t>(t)];
      for (int a = m.agent_count - 1; a >= 0; --a) {
        size_t ai = static_cast<size_t>(a);
        if (++digits[ai] < m.action_counts[qi][ai]) break;
        digits[ai] = 0;
      }
    }
  }
  out.mutable_index() = std::move(index);
  return out;
}

CgsChecker::CgsChecker(const Cgs& model, CgsCheckStats* stats)
    : model_(model), stats_(stats) {
  if (!model_.compiled())
    throw std::logic_error("CgsChecker requires a compiled model");
}

void CgsChecker::sweep(const Coalition& A, StateId q, const StateSet& target,
                       std::vector<char>& alive) {
  size_t qi = static_cast<size_t>(q);
  const CgsStateIndex& ci = model_.index(q);
  const std::vector<int>& degrees = model_.action_counts[qi];

  // Mixed radix over the coalition's agents, first member most significant.
  std::vector<std::int64_t> group_radix(A.members.size(), 1);
  for (int i = static_cast<int>(A.members.size()) - 2; i >= 0; --i)
    group_radix[static_cast<size_t>(i)] =
        group_radix[static_cast<size_t>(i + 1)] *
        degrees[static_cast<size_t>(A.members[static_cast<size_t>(i + 1)] - 1)];

  std::vector<int> digits(static_cast<size_t>(model_.agent_count), 0);
  for (std::int64_t t = 0; t < ci.tuple_total; ++t) {
    std::int64_t g = 0;
    for (size_t i = 0; i < A.members.size(); ++i)
      g += static_cast<std::int64_t>(digits[static_cast<size_t>(A.members[i] - 1)]) *
           group_radix[i];
    if (!target.test(ci.delta[static_cast<size_t>(t)])) alive[static_cast<size_t>(g)] = 0;
    for (int a = model_.agent_count - 1; a >= 0; --a) {
      size_t ai = static_cast<size_t>(a);
      if (++digits[ai] < degrees[ai]) break;
      digits[ai] = 0;
    }
  }
  if (stats_) {
    ++stats_->enforce_calls;
    stats_->tuple_visits += ci.tuple_total;
    stats_->calls.push_back(CgsEnforceCall{q, ci.tuple_total});
  }
}

bool CgsChecker::enforce(const Coalition& A, StateId q, const StateSet& target) {
  std::int64_t groups = 1;
  for (Agent a : A.members)
    groups *= model_.action_counts[static_cast<size_t>(q)][static_cast<size_t>(a - 1)];
  std::vector<char> alive(static_cast<size_t>(groups), 1);
  sweep(A, q, target, alive);
  return std::find(alive.begin(), alive.end(), 1) != alive.end();
}

std::vector<StateSet> CgsChecker::force_set(StateId q, const Coalition& A) {
  size_t qi = static_cast<size_t>(q);
  const CgsStateIndex& ci = model_.index(q);
  const std::vector<int>& degrees = model_.action_counts[qi];

  std::int64_t groups = 1;
  std::vector<std::int64_t> group_radix(A.members.size(), 1);
  for (int i = static_cast<int>(A.members.size()) - 2; i >= 0; --i)
    group_radix[static_cast<size_t>(i)] =
        group_radix[static_cast<size_t>(i + 1)] *
        degrees[static_cast<size_t>(A.members[static_cast<size_t>(i + 1)] - 1)];
  for (Agent a : A.members) groups *= degrees[static_cast<size_t>(a - 1)];

  std::vector<StateSet> sets(static_cast<size_t>(groups),
                             StateSet(model_.state_count()));
  std::vector<int> digits(static_cast<size_t>(model_.agent_count), 0);
  for (std::int64_t t = 0; t < ci.tuple_total; ++t) {
    std::int64_t g = 0;
    for (size_t i = 0; i < A.members.size(); ++i)
      g += static_cast<std::int64_t>(digits[static_cast<size_t>(A.members[i] - 1)]) *
           group_radix[i];
    sets[static_cast<size_t>(g)].set(ci.delta[static_cast<size_t>(t)]);
    for (int a = model_.agent_count - 1; a >= 0; --a) {
      size_t ai = static_cast<size_t>(a);
      if (++digits[ai] < degrees[ai]) break;
      digits[ai] = 0;
    }
  }
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

StateSet CgsChecker::check(const Formula& f) { return eval(bind(f, model_)); }

StateSet CgsChecker::until_fixpoint(const Coalition& A, const StateSet& phi,
                                    const StateSet& psi) {
  int n = model_.state_count();
  StateSet won(n);
  StateSet frontier = psi;
  for (;;) {
    if (stats_) ++stats_->fixpoint_iterations;
    won |= frontier;
    StateSet next(n);
    for (StateId q = 0; q < n; ++q)
      if (phi.test(q) && enforce(A, q, won)) next.set(q);
    if (next.subset_of(won)) return won;
    frontier = std::move(next);
  }
}

StateSet CgsChecker::eval(const Formula& f) {
  int n = model_.state_count();
  switch (f.op()) {
    case Op::True:
      return StateSet::full(n);
    case Op::False:
      return StateSet(n);
    case Op::Prop: {
      StateSet s(n);
      int p = *model_.prop_index(f.prop_name());
      for (StateId q = 0; q < n; ++q)
        if (model_.labels[static_cast<size_t>(q)][static_cast<size_t>(p)]) s.set(q);
      return s;
    }
    case Op::Not:
      return eval(f.child(0)).complement();
    case Op::And:
      return eval(f.child(0)) & eval(f.child(1));
    case Op::Or:
      return eval(f.child(0)) | eval(f.child(1));
    case Op::Implies:
      return eval(f.child(0)).complement() | eval(f.child(1));
    case Op::Next: {
      StateSet sub = eval(f.child(0));
      StateSet out(n);
      for (StateId q = 0; q < n; ++q)
        if (enforce(f.coalition(), q, sub)) out.set(q);
      return out;
    }
    case Op::Globally: {
      StateSet current = eval(f.child(0));
      for (;;) {
        if (stats_) ++stats_->fixpoint_iterations;
        StateSet next(n);
        for (StateId q = 0; q < n; ++q)
          if (current.test(q) && enforce(f.coalition(), q, current)) next.set(q);
        if (next == current) return current;
        current = std::move(next);
      }
    }
    case Op::Eventually:
      return until_fixpoint(f.coalition(), StateSet::full(n), eval(f.child(0)));
    case Op::Until:
      return until_fixpoint(f.coalition(), eval(f.child(0)), eval(f.child(1)));
  }
  throw std::logic_error("unreachable formula operator");
}

StateSet cgs_mcheck(const Cgs& model, const Formula& f, CgsCheckStats* stats) {
  CgsChecker c(model, stats);
  return c.check(f);
}

bool verify_force_equality(const Rcgs& m, const Cgs& translated, StateId q,
                           const Coalition& A) {
  Checker rc(m);
  CgsChecker cc(translated);
  return rc.force_set(q, A) == cc.force_set(q, A);
}

bool verify_force_equality(const Rcgs& m, StateId q, const Coalition& A) {
  Cgs translated = translate(m);
  return verify_force_equality(m, translated, q, A);
}

}  // namespace rolecheck
