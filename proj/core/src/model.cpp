#include "rolecheck/model.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace rolecheck {

namespace {

std::string profile_to_string(const Profile& p) {
  std::ostringstream os;
  for (size_t r = 0; r < p.size(); ++r) {
    if (r) os << ';';
    os << '(';
    for (size_t i = 0; i < p[r].size(); ++i) {
      if (i) os << ',';
      os << p[r][i];
    }
    os << ')';
  }
  return os.str();
}

// Shape-and-legality check for a transition key at state q. Returns a
// human-readable complaint or empty string.
std::string complete_profile_issue(const Rcgs& m, StateId q, const Profile& p) {
  size_t qi = static_cast<size_t>(q);
  if (static_cast<int>(p.size()) != m.role_count()) return "wrong role count";
  for (int r = 0; r < m.role_count(); ++r) {
    size_t ri = static_cast<size_t>(r);
    if (static_cast<int>(p[ri].size()) != m.action_counts[qi][ri])
      return "vote arity mismatch in role " + std::to_string(r + 1);
    int sum = 0;
    for (int x : p[ri]) {
      if (x < 0) return "negative vote entry in role " + std::to_string(r + 1);
      sum += x;
    }
    if (sum != static_cast<int>(m.role_members[qi][ri].size()))
      return "vote sum mismatch in role " + std::to_string(r + 1);
  }
  return {};
}

}  // namespace

std::string to_string(const Coalition& c) {
  std::ostringstream os;
  os << '<';
  for (size_t i = 0; i < c.members.size(); ++i) {
    if (i) os << ',';
    os << c.members[i];
  }
  os << '>';
  return os.str();
}

std::optional<StateId> Rcgs::state_index(std::string_view name) const {
  for (size_t i = 0; i < state_names.size(); ++i)
    if (state_names[i] == name) return static_cast<StateId>(i);
  return std::nullopt;
}

std::optional<int> Rcgs::prop_index(std::string_view name) const {
  for (size_t i = 0; i < props.size(); ++i)
    if (props[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

int Rcgs::role_of(StateId q, Agent a) const {
  if (compiled()) {
    const auto& map = index_[static_cast<size_t>(q)].role_of_agent;
    return map[static_cast<size_t>(a - 1)];
  }
  for (int r = 0; r < role_count(); ++r) {
    const auto& mem = role_members[static_cast<size_t>(q)][static_cast<size_t>(r)];
    if (std::binary_search(mem.begin(), mem.end(), a)) return r;
  }
  return -1;
}

void Rcgs::compile(std::int64_t cap) {
  if (compiled()) return;
  std::vector<StateIndex> built(static_cast<size_t>(state_count()));
  for (StateId q = 0; q < state_count(); ++q) {
    size_t qi = static_cast<size_t>(q);
    StateIndex& idx = built[qi];

    idx.role_of_agent.assign(static_cast<size_t>(agent_count), -1);
    for (int r = 0; r < role_count(); ++r)
      for (Agent a : role_members[qi][static_cast<size_t>(r)])
        idx.role_of_agent[static_cast<size_t>(a - 1)] = r;

    BigInt total = 1;
    idx.vote_counts.resize(static_cast<size_t>(role_count()));
    for (int r = 0; r < role_count(); ++r) {
      size_t ri = static_cast<size_t>(r);
      BigInt c = composition_count(
          static_cast<int>(role_members[qi][ri].size()), action_counts[qi][ri]);
      total *= c;
      if (total > cap)
        throw cap_error("state " + state_names[qi] + ": profile count " +
                        total.str() + "... exceeds dense-table cap " +
                        std::to_string(cap));
      idx.vote_counts[ri] = static_cast<std::int64_t>(c);
    }
    idx.profile_total = static_cast<std::int64_t>(total);

    idx.radix_suffix.assign(static_cast<size_t>(role_count()), 1);
    for (int r = role_count() - 2; r >= 0; --r)
      idx.radix_suffix[static_cast<size_t>(r)] =
          idx.radix_suffix[static_cast<size_t>(r + 1)] *
          idx.vote_counts[static_cast<size_t>(r + 1)];

    const StateTransitions& t = transitions[qi];
    StateId fill = t.default_target.value_or(-1);
    idx.delta.assign(static_cast<size_t>(idx.profile_total), fill);
    for (const TransitionEntry& e : t.entries) {
      std::int64_t rank = 0;
      for (int r = 0; r < role_count(); ++r)
        rank += vote_rank(e.key[static_cast<size_t>(r)]) *
                idx.radix_suffix[static_cast<size_t>(r)];
      idx.delta[static_cast<size_t>(rank)] = e.target;
    }
    for (StateId tgt : idx.delta)
      if (tgt < 0)
        throw std::logic_error("compile on non-total model (state " +
                               state_names[qi] + "); run validate first");
  }
  index_ = std::move(built);
}

StateId Rcgs::target(StateId q, const Profile& complete) const {
  const StateIndex& idx = index_[static_cast<size_t>(q)];
  std::int64_t rank = 0;
  for (size_t r = 0; r < complete.size(); ++r)
    rank += vote_rank(complete[r]) * idx.radix_suffix[r];
  return idx.delta[static_cast<size_t>(rank)];
}

bool Rcgs::operator==(const Rcgs& other) const {
  if (agent_count != other.agent_count || role_names != other.role_names ||
      state_names != other.state_names || props != other.props ||
      labels != other.labels || role_members != other.role_members ||
      action_counts != other.action_counts)
    return false;
  if (compiled() && other.compiled()) {
    for (StateId q = 0; q < state_count(); ++q)
      if (index_[static_cast<size_t>(q)].delta !=
          other.index_[static_cast<size_t>(q)].delta)
        return false;
    return true;
  }
  for (StateId q = 0; q < state_count(); ++q) {
    const auto& a = transitions[static_cast<size_t>(q)];
    const auto& b = other.transitions[static_cast<size_t>(q)];
    if (a.default_target != b.default_target) return false;
    if (a.entries.size() != b.entries.size()) return false;
    for (size_t i = 0; i < a.entries.size(); ++i)
      if (a.entries[i].key != b.entries[i].key ||
          a.entries[i].target != b.entries[i].target)
        return false;
  }
  return true;
}

std::string to_string(const Violation& v, const Rcgs& m) {
  std::ostringstream os;
  if (v.state >= 0 && v.state < m.state_count())
    os << m.state_names[static_cast<size_t>(v.state)];
  else
    os << "model";
  if (v.role >= 0) os << "/role " << (v.role + 1);
  os << ": " << v.detail;
  return os.str();
}

std::vector<Violation> validate(const Rcgs& m) {
  using Code = Violation::Code;
  std::vector<Violation> out;
  auto add = [&](Code c, StateId q, int r, std::string detail) {
    out.push_back(Violation{c, q, r, std::move(detail)});
  };

  if (m.agent_count < 1) add(Code::NoAgents, -1, -1, "agent count must be at least 1");
  if (m.role_count() < 1) add(Code::NoRoles, -1, -1, "role set must be non-empty");
  if (m.state_count() < 1) add(Code::NoStates, -1, -1, "state set must be non-empty");

  size_t nq = m.state_names.size();
  size_t nr = m.role_names.size();
  bool shape_ok = m.labels.size() == nq && m.role_members.size() == nq &&
                  m.action_counts.size() == nq && m.transitions.size() == nq;
  if (shape_ok)
    for (size_t q = 0; q < nq; ++q)
      if (m.role_members[q].size() != nr || m.action_counts[q].size() != nr ||
          m.labels[q].size() != m.props.size()) {
        shape_ok = false;
        break;
      }
  if (!shape_ok) {
    add(Code::Malformed, -1, -1,
        "per-state containers do not match the declared state/role/prop counts");
    return out;  // nothing below is safe to index
  }

  for (StateId q = 0; q < m.state_count(); ++q) {
    size_t qi = static_cast<size_t>(q);

    // Role partition: every agent in exactly one role.
    std::vector<int> seen(static_cast<size_t>(std::max(m.agent_count, 0)), 0);
    for (int r = 0; r < m.role_count(); ++r)
      for (Agent a : m.role_members[qi][static_cast<size_t>(r)]) {
        if (a < 1 || a > m.agent_count) {
          add(Code::BadAgent, q, r, "agent " + std::to_string(a) + " out of range");
          continue;
        }
        if (++seen[static_cast<size_t>(a - 1)] == 2)
          add(Code::RoleOverlap, q, -1,
              "agent " + std::to_string(a) + " assigned to more than one role");
      }
    for (Agent a = 1; a <= m.agent_count; ++a)
      if (seen[static_cast<size_t>(a - 1)] == 0)
        add(Code::Unassigned, q, -1, "agent " + std::to_string(a) + " has no role");

    for (int r = 0; r < m.role_count(); ++r)
      if (m.action_counts[qi][static_cast<size_t>(r)] < 1)
        add(Code::BadActionCount, q, r, "action count must be at least 1");

    bool counts_ok = std::all_of(
        m.action_counts[qi].begin(), m.action_counts[qi].end(),
        [](int k) { return k >= 1; });
    if (!counts_ok) continue;  // profile legality is meaningless here

    const StateTransitions& t = m.transitions[qi];
    std::map<Profile, int> key_seen;
    std::int64_t legal_entries = 0;
    for (const TransitionEntry& e : t.entries) {
      std::string issue = complete_profile_issue(m, q, e.key);
      if (!issue.empty()) {
        add(Code::BadProfile, q, -1, profile_to_string(e.key) + ": " + issue);
        continue;
      }
      if (e.target < 0 || e.target >= m.state_count())
        add(Code::BadTarget, q, -1,
            profile_to_string(e.key) + ": target index " + std::to_string(e.target));
      if (++key_seen[e.key] == 2)
        add(Code::DuplicateEntry, q, -1, profile_to_string(e.key) + " keyed twice");
      else
        ++legal_entries;
    }
    if (t.default_target &&
        (*t.default_target < 0 || *t.default_target >= m.state_count()))
      add(Code::BadTarget, q, -1,
          "default target index " + std::to_string(*t.default_target));

    if (!t.default_target) {
      BigInt want = profile_count(m, q);
      // Compiled dense-only models (translation products) carry their
      // transition function in the index instead of entry lists.
      if (m.compiled() && t.entries.empty()) {
        const StateIndex& idx = m.index(q);
        if (want != idx.delta.size())
          add(Code::NotTotal, q, -1, "dense table size mismatch");
        else {
          bool targets_ok = true;
          for (StateId tgt : idx.delta)
            if (tgt < 0 || tgt >= m.state_count()) targets_ok = false;
          if (!targets_ok) add(Code::BadTarget, q, -1, "dense table target out of range");
        }
      } else if (want != legal_entries) {
        add(Code::NotTotal, q, -1,
            "state covers " + std::to_string(legal_entries) + " of " + want.str() +
                " profiles and has no default");
      }
    }
  }
  return out;
}

std::vector<int> coalition_role_counts(const Rcgs& m, StateId q, const Coalition& A) {
  std::vector<int> counts(static_cast<size_t>(m.role_count()), 0);
  for (Agent a : A.members) {
    if (a < 1 || a > m.agent_count)
      throw std::invalid_argument("coalition agent " + std::to_string(a) +
                                  " out of range");
    int r = m.role_of(q, a);
    if (r < 0)
      throw std::invalid_argument("agent " + std::to_string(a) +
                                  " has no role at state " +
                                  m.state_names[static_cast<size_t>(q)]);
    ++counts[static_cast<size_t>(r)];
  }
  return counts;
}

// Cartesian product of per-role vote enumerations, role 0 varying slowest.
std::vector<Profile> profiles_for_role_counts(const Rcgs& m, StateId q,
                                              const std::vector<int>& member_counts) {
  size_t qi = static_cast<size_t>(q);
  std::vector<std::vector<Vote>> per_role;
  per_role.reserve(member_counts.size());
  BigInt total = 1;
  for (int r = 0; r < m.role_count(); ++r) {
    per_role.push_back(enumerate_votes(member_counts[static_cast<size_t>(r)],
                                       m.action_counts[qi][static_cast<size_t>(r)]));
    total *= per_role.back().size();
  }
  if (total > 100'000'000)
    throw cap_error("refusing to materialize " + total.str() + " profiles");

  std::vector<Profile> out;
  out.reserve(static_cast<size_t>(total));
  Profile cur(per_role.size());
  auto rec = [&](auto&& self, size_t r) -> void {
    if (r == per_role.size()) {
      out.push_back(cur);
      return;
    }
    for (const Vote& v : per_role[r]) {
      cur[r] = v;
      self(self, r + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Profile> enumerate_profiles(const Rcgs& m, StateId q, const Coalition& A) {
  return profiles_for_role_counts(m, q, coalition_role_counts(m, q, A));
}

BigInt profile_count(const Rcgs& m, StateId q) {
  size_t qi = static_cast<size_t>(q);
  BigInt total = 1;
  for (int r = 0; r < m.role_count(); ++r) {
    size_t ri = static_cast<size_t>(r);
    total *= composition_count(static_cast<int>(m.role_members[qi][ri].size()),
                               m.action_counts[qi][ri]);
  }
  return total;
}

bool extends(const Profile& f, const Profile& g) {
  if (f.size() != g.size())
    throw std::invalid_argument("extends: profiles have different role counts");
  for (size_t r = 0; r < f.size(); ++r) {
    if (f[r].size() != g[r].size())
      throw std::invalid_argument("extends: vote arity mismatch in role " +
                                  std::to_string(r + 1));
    for (size_t i = 0; i < f[r].size(); ++i)
      if (f[r][i] > g[r][i]) return false;
  }
  return true;
}

namespace {

// Per-role complement sizes for a partial profile; throws when the profile
// is not a legal partial profile at q.
std::vector<int> complement_counts(const Rcgs& m, StateId q, const Profile& partial) {
  size_t qi = static_cast<size_t>(q);
  if (static_cast<int>(partial.size()) != m.role_count())
    throw std::invalid_argument("partial profile has wrong role count");
  std::vector<int> rest(partial.size());
  for (int r = 0; r < m.role_count(); ++r) {
    size_t ri = static_cast<size_t>(r);
    if (static_cast<int>(partial[ri].size()) != m.action_counts[qi][ri])
      throw std::invalid_argument("partial profile vote arity mismatch in role " +
                                  std::to_string(r + 1));
    int sum = 0;
    for (int x : partial[ri]) {
      if (x < 0)
        throw std::invalid_argument("partial profile has a negative entry");
      sum += x;
    }
    int size = static_cast<int>(m.role_members[qi][ri].size());
    if (sum > size)
      throw std::invalid_argument("partial profile oversubscribes role " +
                                  std::to_string(r + 1));
    rest[ri] = size - sum;
  }
  return rest;
}

}  // namespace

std::vector<Profile> extensions(const Rcgs& m, StateId q, const Profile& partial) {
  std::vector<Profile> complements =
      profiles_for_role_counts(m, q, complement_counts(m, q, partial));
  for (Profile& c : complements)
    for (size_t r = 0; r < c.size(); ++r)
      for (size_t i = 0; i < c[r].size(); ++i) c[r][i] += partial[r][i];
  return complements;
}

std::vector<StateId> successors(const Rcgs& m, StateId q, const Profile& partial) {
  std::vector<StateId> out;
  for (const Profile& g : extensions(m, q, partial)) out.push_back(m.target(q, g));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace rolecheck
