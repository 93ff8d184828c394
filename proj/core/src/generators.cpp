#include "rolecheck/generators.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "rolecheck/combinatorics.hpp"

namespace rolecheck {

namespace {

void add_entry(Rcgs& m, StateId q, Profile key, StateId target) {
  m.transitions[static_cast<size_t>(q)].entries.push_back(
      TransitionEntry{std::move(key), target});
}

void finish(Rcgs& m, const char* what) {
  std::vector<Violation> issues = validate(m);
  if (!issues.empty())
    throw std::logic_error(std::string(what) + " generator produced an invalid model: " +
                           to_string(issues.front(), m));
  m.compile();
}

}  // namespace

Rcgs gen_train_controller(int n_t) {
  if (n_t < 1) throw std::invalid_argument("gen_train_controller needs n_t >= 1");

  Rcgs m;
  m.agent_count = n_t + 1;
  m.role_names = {"train", "ctr"};
  m.state_names = {"q0", "q1", "q2", "q3"};
  m.props = {"out_of_gate", "request", "grant", "in_gate"};
  m.labels = {
      {true, false, false, false},
      {true, true, false, false},
      {true, false, true, false},
      {false, false, false, true},
  };

  std::vector<Agent> trains;
  for (Agent a = 1; a <= n_t; ++a) trains.push_back(a);
  std::vector<Agent> ctr = {static_cast<Agent>(n_t + 1)};
  m.role_members.assign(4, {trains, ctr});

  // Train actions, first component of each vote: q0 request, q2 enter,
  // q3 leave. Controller actions at q1: reject, wait, grant.
  m.action_counts = {{2, 1}, {1, 3}, {2, 1}, {2, 1}};
  m.transitions.resize(4);

  for (int a = 0; a <= n_t; ++a)  // a trains request
    add_entry(m, 0, {{a, n_t - a}, {1}}, a >= 1 ? 1 : 0);
  add_entry(m, 1, {{n_t}, {1, 0, 0}}, 0);
  add_entry(m, 1, {{n_t}, {0, 1, 0}}, 1);
  add_entry(m, 1, {{n_t}, {0, 0, 1}}, 2);
  for (int a = 0; a <= n_t; ++a) {  // a trains try to enter
    StateId t = a == 0 ? 0 : a == 1 ? 3 : 2;
    add_entry(m, 2, {{a, n_t - a}, {1}}, t);
  }
  for (int a = 0; a <= n_t; ++a)  // a trains order the occupant out
    add_entry(m, 3, {{a, n_t - a}, {1}}, a >= 1 ? 0 : 3);

  finish(m, "train controller");
  return m;
}

Rcgs gen_autonomous_trains(int n_t) {
  if (n_t < 2) throw std::invalid_argument("gen_autonomous_trains needs n_t >= 2");

  Rcgs m;
  m.agent_count = n_t + 1;
  m.role_names = {"others", "selected", "ctr"};

  m.state_names = {"q0"};
  for (int x = 1; x <= n_t; ++x) {
    m.state_names.push_back("q1_" + std::to_string(x));
    m.state_names.push_back("q2_" + std::to_string(x));
    m.state_names.push_back("q3_" + std::to_string(x));
  }
  int n = m.state_count();
  auto q1 = [](int x) { return 3 * (x - 1) + 1; };
  auto q2 = [](int x) { return 3 * (x - 1) + 2; };
  auto q3 = [](int x) { return 3 * (x - 1) + 3; };

  m.props = {"out_of_gate", "request", "grant", "in_gate"};
  m.labels.assign(static_cast<size_t>(n), {true, false, false, false});
  for (int x = 1; x <= n_t; ++x) {
    m.labels[static_cast<size_t>(q1(x))] = {true, true, false, false};
    m.labels[static_cast<size_t>(q2(x))] = {true, false, true, false};
    m.labels[static_cast<size_t>(q3(x))] = {false, false, false, true};
  }

  std::vector<Agent> all_trains;
  for (Agent a = 1; a <= n_t; ++a) all_trains.push_back(a);
  std::vector<Agent> ctr = {static_cast<Agent>(n_t + 1)};
  auto without = [&](int x) {
    std::vector<Agent> v;
    for (Agent a = 1; a <= n_t; ++a)
      if (a != x) v.push_back(a);
    return v;
  };

  m.role_members.resize(static_cast<size_t>(n));
  m.action_counts.resize(static_cast<size_t>(n));
  m.transitions.resize(static_cast<size_t>(n));

  // Hub: every train names a candidate; a strict plurality elects, anything
  // else stays put. The selected role is empty here.
  m.role_members[0] = {all_trains, {}, ctr};
  m.action_counts[0] = {n_t, 1, 1};
  for (const Vote& v : enumerate_votes(n_t, n_t)) {
    int best = -1;
    bool strict = false;
    for (int x = 0; x < n_t; ++x) {
      if (best < 0 || v[static_cast<size_t>(x)] > v[static_cast<size_t>(best)]) {
        best = x;
        strict = true;
      } else if (v[static_cast<size_t>(x)] == v[static_cast<size_t>(best)]) {
        strict = false;
      }
    }
    add_entry(m, 0, {v, {0}, {1}}, strict ? q1(best + 1) : 0);
  }

  for (int x = 1; x <= n_t; ++x) {
    // Request pending: only the controller has a real choice.
    m.role_members[static_cast<size_t>(q1(x))] = {without(x), {static_cast<Agent>(x)}, ctr};
    m.action_counts[static_cast<size_t>(q1(x))] = {1, 1, 3};
    add_entry(m, q1(x), {{n_t - 1}, {1}, {1, 0, 0}}, 0);      // reject
    add_entry(m, q1(x), {{n_t - 1}, {1}, {0, 1, 0}}, q1(x));  // wait
    add_entry(m, q1(x), {{n_t - 1}, {1}, {0, 0, 1}}, q2(x));  // grant

    // Granted: the selected train enters or relinquishes.
    m.role_members[static_cast<size_t>(q2(x))] = {without(x), {static_cast<Agent>(x)}, ctr};
    m.action_counts[static_cast<size_t>(q2(x))] = {1, 2, 1};
    add_entry(m, q2(x), {{n_t - 1}, {1, 0}, {1}}, q3(x));  // enter
    add_entry(m, q2(x), {{n_t - 1}, {0, 1}, {1}}, 0);      // relinquish

    // In the gate: any bystander can order the occupant out.
    m.role_members[static_cast<size_t>(q3(x))] = {without(x), {static_cast<Agent>(x)}, ctr};
    m.action_counts[static_cast<size_t>(q3(x))] = {2, 1, 1};
    for (int a = 0; a <= n_t - 1; ++a)
      add_entry(m, q3(x), {{a, n_t - 1 - a}, {1}, {1}}, a >= 1 ? 0 : q3(x));
  }

  finish(m, "autonomous trains");
  return m;
}

BigInt hub_profile_count(int n_t) { return composition_count(n_t, n_t); }

Rcgs random_model(std::uint64_t seed, const RandomModelBounds& bounds) {
  if (bounds.max_agents < 1 || bounds.max_states < 1 || bounds.max_roles < 1 ||
      bounds.max_actions < 1 || bounds.max_props < 1)
    throw std::invalid_argument("random_model bounds must all be >= 1");

  std::mt19937_64 rng(seed);
  auto pick = [&rng](int lo, int hi) {  // inclusive
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };

  Rcgs m;
  m.agent_count = pick(1, bounds.max_agents);
  int roles = pick(1, bounds.max_roles);
  int states = pick(1, bounds.max_states);
  int props = pick(1, bounds.max_props);

  m.role_names.assign(static_cast<size_t>(roles), "");
  for (int q = 0; q < states; ++q) m.state_names.push_back("s" + std::to_string(q));
  for (int p = 0; p < props; ++p) m.props.push_back("p" + std::to_string(p));

  m.labels.resize(static_cast<size_t>(states));
  m.role_members.resize(static_cast<size_t>(states));
  m.action_counts.resize(static_cast<size_t>(states));
  m.transitions.resize(static_cast<size_t>(states));

  for (StateId q = 0; q < states; ++q) {
    size_t qi = static_cast<size_t>(q);
    m.labels[qi].resize(static_cast<size_t>(props));
    for (int p = 0; p < props; ++p) m.labels[qi][static_cast<size_t>(p)] = pick(0, 1) == 1;

    m.role_members[qi].resize(static_cast<size_t>(roles));
    for (Agent a = 1; a <= m.agent_count; ++a)
      m.role_members[qi][static_cast<size_t>(pick(0, roles - 1))].push_back(a);

    for (int r = 0; r < roles; ++r)
      m.action_counts[qi].push_back(pick(1, bounds.max_actions));

    for (const Profile& f : enumerate_profiles(m, q, Coalition::all(m.agent_count)))
      add_entry(m, q, f, pick(0, states - 1));
  }

  finish(m, "random");
  return m;
}

}  // namespace rolecheck
