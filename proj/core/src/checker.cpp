#include "rolecheck/checker.hpp"

#include <algorithm>

namespace rolecheck {

Checker::Checker(const Rcgs& model, CheckStats* stats)
    : model_(model), stats_(stats) {
  if (!model_.compiled())
    throw std::logic_error("Checker requires a compiled model");
}

const std::vector<Profile>& Checker::profiles_for(StateId q,
                                                  const std::vector<int>& counts) {
  auto key = std::make_pair(q, counts);
  auto it = profile_cache_.find(key);
  if (it == profile_cache_.end())
    it = profile_cache_.emplace(std::move(key), profiles_for_role_counts(model_, q, counts))
             .first;
  return it->second;
}

bool Checker::enforce(const Coalition& A, StateId q, const StateSet& target) {
  std::vector<int> counts = coalition_role_counts(model_, q, A);
  std::vector<int> rest(counts.size());
  for (size_t r = 0; r < counts.size(); ++r)
    rest[r] = static_cast<int>(
                  model_.role_members[static_cast<size_t>(q)][r].size()) -
              counts[r];

  const std::vector<Profile>& own = profiles_for(q, counts);
  const std::vector<Profile>& other = profiles_for(q, rest);

  std::int64_t visits = 0;
  bool found = false;
  Profile sum;
  for (const Profile& f : own) {
    bool all_inside = true;
    for (const Profile& h : other) {
      ++visits;
      sum = f;
      for (size_t r = 0; r < sum.size(); ++r)
        for (size_t i = 0; i < sum[r].size(); ++i) sum[r][i] += h[r][i];
      if (!target.test(model_.target(q, sum))) {
        all_inside = false;
        break;  // this coalition profile is refuted
      }
    }
    if (all_inside) {
      found = true;
      break;  // witness found
    }
  }
  if (stats_) {
    ++stats_->enforce_calls;
    stats_->extension_visits += visits;
    stats_->calls.push_back(EnforceCall{q, visits});
  }
  return found;
}

std::vector<StateSet> Checker::force_set(StateId q, const Coalition& A) {
  std::vector<StateSet> out;
  for (const Profile& f : enumerate_profiles(model_, q, A)) {
    StateSet s(model_.state_count());
    for (StateId t : successors(model_, q, f)) s.set(t);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

StateSet Checker::check(const Formula& f) { return eval(bind(f, model_)); }

StateSet Checker::until_fixpoint(const Coalition& A, const StateSet& phi,
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

StateSet Checker::eval(const Formula& f) {
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

StateSet mcheck(const Rcgs& model, const Formula& f, CheckStats* stats) {
  Checker c(model, stats);
  return c.check(f);
}

}  // namespace rolecheck
