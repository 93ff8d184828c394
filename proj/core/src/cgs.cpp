#include "rolecheck/cgs.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace rolecheck {

namespace {

std::string tuple_to_string(const ActionTuple& t) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) os << ',';
    os << (t[i] + 1);  // display is 1-based
  }
  os << ')';
  return os.str();
}

}  // namespace

std::optional<StateId> Cgs::state_index(std::string_view name) const {
  for (size_t i = 0; i < state_names.size(); ++i)
    if (state_names[i] == name) return static_cast<StateId>(i);
  return std::nullopt;
}

std::optional<int> Cgs::prop_index(std::string_view name) const {
  for (size_t i = 0; i < props.size(); ++i)
    if (props[i] == name) return static_cast<int>(i);
  return std::nullopt;
}

void Cgs::compile(std::int64_t cap) {
  if (compiled()) return;
  std::vector<CgsStateIndex> built(static_cast<size_t>(state_count()));
  for (StateId q = 0; q < state_count(); ++q) {
    size_t qi = static_cast<size_t>(q);
    CgsStateIndex& idx = built[qi];
    BigInt total = 1;
    for (int d : action_counts[qi]) {
      total *= d;
      if (total > cap)
        throw cap_error("state " + state_names[qi] + ": tuple count " +
                        total.str() + "... exceeds dense-table cap " +
                        std::to_string(cap));
    }
    idx.tuple_total = static_cast<std::int64_t>(total);
    idx.radix_suffix.assign(static_cast<size_t>(agent_count), 1);
    for (int a = agent_count - 2; a >= 0; --a)
      idx.radix_suffix[static_cast<size_t>(a)] =
          idx.radix_suffix[static_cast<size_t>(a + 1)] *
          action_counts[qi][static_cast<size_t>(a + 1)];

    const CgsStateTransitions& t = transitions[qi];
    StateId fill = t.default_target.value_or(-1);
    idx.delta.assign(static_cast<size_t>(idx.tuple_total), fill);
    for (const CgsTransitionEntry& e : t.entries) {
      std::int64_t rank = 0;
      for (size_t a = 0; a < e.key.size(); ++a)
        rank += e.key[a] * idx.radix_suffix[a];
      idx.delta[static_cast<size_t>(rank)] = e.target;
    }
    for (StateId tgt : idx.delta)
      if (tgt < 0)
        throw std::logic_error("compile on non-total structure (state " +
                               state_names[qi] + "); run validate first");
  }
  index_ = std::move(built);
}

std::int64_t Cgs::tuple_rank(StateId q, const ActionTuple& t) const {
  const CgsStateIndex& idx = index_[static_cast<size_t>(q)];
  std::int64_t rank = 0;
  for (size_t a = 0; a < t.size(); ++a) rank += t[a] * idx.radix_suffix[a];
  return rank;
}

StateId Cgs::target(StateId q, const ActionTuple& t) const {
  return index_[static_cast<size_t>(q)].delta[static_cast<size_t>(tuple_rank(q, t))];
}

bool Cgs::operator==(const Cgs& other) const {
  if (agent_count != other.agent_count || state_names != other.state_names ||
      props != other.props || labels != other.labels ||
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
    if (a.default_target != b.default_target || a.entries.size() != b.entries.size())
      return false;
    for (size_t i = 0; i < a.entries.size(); ++i)
      if (a.entries[i].key != b.entries[i].key ||
          a.entries[i].target != b.entries[i].target)
        return false;
  }
  return true;
}

std::string to_string(const Violation& v, const Cgs& m) {
  std::ostringstream os;
  if (v.state >= 0 && v.state < m.state_count())
    os << m.state_names[static_cast<size_t>(v.state)];
  else
    os << "model";
  if (v.role >= 0) os << "/agent " << (v.role + 1);
  os << ": " << v.detail;
  return os.str();
}

std::vector<Violation> validate(const Cgs& m) {
  using Code = Violation::Code;
  std::vector<Violation> out;
  auto add = [&](Code c, StateId q, int agent, std::string detail) {
    out.push_back(Violation{c, q, agent, std::move(detail)});
  };

  if (m.agent_count < 1) add(Code::NoAgents, -1, -1, "agent count must be at least 1");
  if (m.state_count() < 1) add(Code::NoStates, -1, -1, "state set must be non-empty");

  size_t nq = m.state_names.size();
  bool shape_ok = m.labels.size() == nq && m.action_counts.size() == nq &&
                  m.transitions.size() == nq;
  if (shape_ok)
    for (size_t q = 0; q < nq; ++q)
      if (m.action_counts[q].size() != static_cast<size_t>(m.agent_count) ||
          m.labels[q].size() != m.props.size()) {
        shape_ok = false;
        break;
      }
  if (!shape_ok) {
    add(Code::Malformed, -1, -1,
        "per-state containers do not match the declared state/agent/prop counts");
    return out;
  }

  for (StateId q = 0; q < m.state_count(); ++q) {
    size_t qi = static_cast<size_t>(q);
    for (int a = 0; a < m.agent_count; ++a)
      if (m.action_counts[qi][static_cast<size_t>(a)] < 1)
        add(Code::BadActionCount, q, a, "degree must be at least 1");
    bool counts_ok = std::all_of(m.action_counts[qi].begin(),
                                 m.action_counts[qi].end(),
                                 [](int d) { return d >= 1; });
    if (!counts_ok) continue;

    const CgsStateTransitions& t = m.transitions[qi];
    std::map<ActionTuple, int> key_seen;
    std::int64_t legal_entries = 0;
    for (const CgsTransitionEntry& e : t.entries) {
      bool legal = e.key.size() == static_cast<size_t>(m.agent_count);
      for (size_t a = 0; legal && a < e.key.size(); ++a)
        if (e.key[a] < 0 || e.key[a] >= m.action_counts[qi][a]) legal = false;
      if (!legal) {
        add(Code::BadProfile, q, -1, tuple_to_string(e.key) + ": not a legal tuple");
        continue;
      }
      if (e.target < 0 || e.target >= m.state_count())
        add(Code::BadTarget, q, -1,
            tuple_to_string(e.key) + ": target index " + std::to_string(e.target));
      if (++key_seen[e.key] == 2)
        add(Code::DuplicateEntry, q, -1, tuple_to_string(e.key) + " keyed twice");
      else
        ++legal_entries;
    }
    if (t.default_target &&
        (*t.default_target < 0 || *t.default_target >= m.state_count()))
      add(Code::BadTarget, q, -1,
          "default target index " + std::to_string(*t.default_target));

    if (!t.default_target) {
      BigInt want = tuple_count(m, q);
      if (m.compiled() && t.entries.empty()) {
        const CgsStateIndex& idx = m.index(q);
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
                " tuples and has no default");
      }
    }
  }
  return out;
}

BigInt tuple_count(const Cgs& m, StateId q) {
  BigInt total = 1;
  for (int d : m.action_counts[static_cast<size_t>(q)]) total *= d;
  return total;
}

}  // namespace rolecheck
