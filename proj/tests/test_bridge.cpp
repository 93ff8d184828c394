#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "helpers.hpp"
#include "rolecheck/bridge.hpp"
#include "rolecheck/generators.hpp"
#include "rolecheck/measure.hpp"
#include "rolecheck/model_io.hpp"

using namespace rolecheck;

TEST_CASE("translation expands counts exactly") {
  for (int n : {1, 2, 3, 4}) {
    Rcgs m = gen_train_controller(n);
    Cgs c = translate(m);
    REQUIRE(c.state_count() == m.state_count());
    CHECK(validate(c).empty());
    // gate states give every train two actions: 2^n tuples
    BigInt doubling = BigInt(1) << n;
    CHECK(tuple_count(c, 0) == doubling);
    CHECK(tuple_count(c, 2) == doubling);
    CHECK(tuple_count(c, 3) == doubling);
    CHECK(tuple_count(c, 1) == 3);  // only the controller moves at q1
  }
}

TEST_CASE("translation fixes degrees and mirrors the protocol step") {
  Rcgs m = gen_train_controller(2);
  Cgs c = translate(m);
  CHECK(c.state_names == m.state_names);
  CHECK(c.props == m.props);
  CHECK(c.labels == m.labels);
  CHECK(c.action_counts[0] == std::vector<int>{2, 2, 1});

  // a single requesting train moves the gate to the request state
  CHECK(c.target(0, {0, 1, 0}) == 1);
  CHECK(c.target(0, {1, 0, 0}) == 1);
  CHECK(c.target(0, {0, 0, 0}) == 1);  // both requesting still requests
  CHECK(c.target(0, {1, 1, 0}) == 0);  // nobody does
}

TEST_CASE("abstraction partitions the tuple space over any coalition") {
  std::mt19937_64 rng(14);
  std::vector<Rcgs> models;
  models.push_back(gen_train_controller(2));
  for (std::uint64_t seed = 300; seed < 330; ++seed)
    models.push_back(random_model(seed));
  for (const Rcgs& m : models) {
    Cgs c = translate(m);
    for (int trial = 0; trial < 3; ++trial) {
      Coalition A = trial == 0 ? Coalition::all(m.agent_count)
                               : testutil::random_coalition(rng, m.agent_count);
      for (StateId q = 0; q < m.state_count(); ++q) {
        std::vector<int> degrees;
        for (Agent a : A.members)
          degrees.push_back(
              c.action_counts[static_cast<size_t>(q)][static_cast<size_t>(a - 1)]);
        std::int64_t expected = 1;
        for (int d : degrees) expected *= d;

        std::map<Profile, std::int64_t> hits;
        std::vector<int> tuple(degrees.size(), 0);
        for (;;) {
          ++hits[abstract_tuple(m, q, A, tuple)];
          size_t i = degrees.size();
          while (i > 0 && ++tuple[i - 1] == degrees[i - 1]) tuple[--i] = 0;
          if (i == 0) break;
        }

        // the preimages cover every coalition profile and nothing else
        std::vector<Profile> profiles = enumerate_profiles(m, q, A);
        REQUIRE(hits.size() == profiles.size());
        std::int64_t covered = 0;
        for (const Profile& f : profiles) {
          REQUIRE(hits.count(f) == 1);
          covered += hits[f];
        }
        CHECK(covered == expected);
      }
    }
  }
}

TEST_CASE("translation preserves the successor relation") {
  for (std::uint64_t seed = 340; seed < 380; ++seed) {
    Rcgs m = random_model(seed);
    Cgs c = translate(m);
    Coalition all = Coalition::all(m.agent_count);
    for (StateId q = 0; q < m.state_count(); ++q) {
      std::set<StateId> role_side;
      for (const Profile& f : enumerate_profiles(m, q, all))
        role_side.insert(m.target(q, f));
      std::set<StateId> tuple_side;
      std::vector<int> degrees = c.action_counts[static_cast<size_t>(q)];
      std::vector<int> t(degrees.size(), 0);
      for (;;) {
        tuple_side.insert(c.target(q, t));
        size_t i = degrees.size();
        while (i > 0 && ++t[i - 1] == degrees[i - 1]) t[--i] = 0;
        if (i == 0) break;
      }
      CHECK(role_side == tuple_side);
    }
  }
}

TEST_CASE("translated targets agree with the histogram of each tuple") {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rcgs m = random_model(seed);
    Cgs c = translate(m);
    Coalition all = Coalition::all(m.agent_count);
    for (StateId q = 0; q < m.state_count(); ++q) {
      // walk every complete tuple by an independent odometer
      std::vector<int> degrees = c.action_counts[static_cast<size_t>(q)];
      std::vector<int> tuple(degrees.size(), 0);
      for (;;) {
        Profile hist = abstract_tuple(m, q, all, tuple);
        CHECK(c.target(q, tuple) == m.target(q, hist));
        size_t i = degrees.size();
        while (i > 0 && ++tuple[i - 1] == degrees[i - 1]) tuple[--i] = 0;
        if (i == 0) break;
      }
    }
  }
}

TEST_CASE("abstract after concretize is the identity on coalition profiles") {
  for (int n : {1, 2, 3}) {
    Rcgs m = gen_train_controller(n);
    std::vector<Agent> agents;
    for (Agent a = 1; a <= m.agent_count; ++a) agents.push_back(a);
    // every coalition, every state, every coalition profile
    for (std::uint64_t mask = 0; mask < (1ull << m.agent_count); ++mask) {
      std::vector<Agent> members;
      for (int i = 0; i < m.agent_count; ++i)
        if (mask & (1ull << i)) members.push_back(agents[static_cast<size_t>(i)]);
      Coalition A(members);
      for (StateId q = 0; q < m.state_count(); ++q)
        for (const Profile& f : enumerate_profiles(m, q, A)) {
          std::vector<int> tuple = concretize_profile(m, q, A, f);
          REQUIRE(abstract_tuple(m, q, A, tuple) == f);
        }
    }
  }
}

TEST_CASE("concretize assigns ascending actions to ascending members") {
  Rcgs m = gen_train_controller(3);
  Coalition trains({1, 2, 3});
  // two request (action 0), one idles (action 1)
  std::vector<int> tuple = concretize_profile(m, 0, trains, {{2, 1}, {0}});
  CHECK(tuple == std::vector<int>{0, 0, 1});
}

TEST_CASE("abstract and concretize on random models and coalitions") {
  std::mt19937_64 rng(12);
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    Rcgs m = random_model(seed);
    for (int trial = 0; trial < 4; ++trial) {
      Coalition A = testutil::random_coalition(rng, m.agent_count);
      for (StateId q = 0; q < m.state_count(); ++q)
        for (const Profile& f : enumerate_profiles(m, q, A))
          REQUIRE(abstract_tuple(m, q, A, concretize_profile(m, q, A, f)) == f);
    }
  }
}

TEST_CASE("singleton embedding preserves targets and satisfaction") {
  std::mt19937_64 rng(13);
  for (std::uint64_t seed = 200; seed < 240; ++seed) {
    Rcgs m = random_model(seed);
    Cgs c = translate(m);
    Rcgs back = singleton_roles(c);
    REQUIRE(back.state_count() == c.state_count());
    CHECK(validate(back).empty());

    // spot-check targets through the embedding
    Coalition all = Coalition::all(c.agent_count);
    for (StateId q = 0; q < c.state_count(); ++q)
      for (const Profile& f : enumerate_profiles(back, q, all)) {
        std::vector<int> tuple = concretize_profile(back, q, all, f);
        CHECK(back.target(q, f) == c.target(q, tuple));
      }

    Formula f = testutil::random_formula(rng, m.agent_count, m.props, 3);
    CHECK(mcheck(back, f) == cgs_mcheck(c, f));
  }
}

TEST_CASE("singleton embedding is a section of the translation") {
  std::vector<Cgs> inputs;
  inputs.push_back(translate(gen_train_controller(2)));
  for (std::uint64_t seed = 400; seed < 430; ++seed)
    inputs.push_back(translate(random_model(seed)));
  for (const Cgs& c : inputs) {
    Rcgs back = singleton_roles(c);
    CHECK(translate(back) == c);
    Coalition all = Coalition::all(c.agent_count);
    for (StateId q = 0; q < c.state_count(); ++q) {
      CHECK(profile_count(back, q) == tuple_count(c, q));
      // every singleton vote is a unit vector naming one action
      for (const Profile& f : enumerate_profiles(back, q, all))
        for (const Vote& v : f) {
          int weight = 0;
          for (int x : v) weight += x;
          CHECK(weight == 1);
          CHECK(*std::max_element(v.begin(), v.end()) == 1);
        }
    }
  }
}

TEST_CASE("satisfaction is preserved by translation on the gate batteries") {
  for (int n : {1, 2, 3}) {
    Rcgs m = gen_train_controller(n);
    Cgs c = translate(m);
    for (const Formula& f : testutil::gate_battery(n)) {
      CAPTURE(print_formula(f));
      REQUIRE(mcheck(m, f) == cgs_mcheck(c, f));
    }
  }
  for (int n : {2, 3}) {
    Rcgs m = gen_autonomous_trains(n);
    Cgs c = translate(m);
    for (const Formula& f : testutil::gate_battery(n))
      REQUIRE(mcheck(m, f) == cgs_mcheck(c, f));
  }
}

TEST_CASE("force sets coincide across the translation") {
  std::mt19937_64 rng(14);
  for (int n : {1, 2, 3}) {
    Rcgs m = gen_train_controller(n);
    Cgs c = translate(m);
    for (std::uint64_t mask = 0; mask < (1ull << m.agent_count); ++mask) {
      std::vector<Agent> members;
      for (int i = 0; i < m.agent_count; ++i)
        if (mask & (1ull << i)) members.push_back(static_cast<Agent>(i + 1));
      Coalition A(members);
      for (StateId q = 0; q < m.state_count(); ++q)
        REQUIRE(verify_force_equality(m, c, q, A));
    }
  }
  for (std::uint64_t seed = 300; seed < 350; ++seed) {
    Rcgs m = random_model(seed);
    Cgs c = translate(m);
    for (int trial = 0; trial < 4; ++trial) {
      Coalition A = testutil::random_coalition(rng, m.agent_count);
      StateId q = static_cast<StateId>(rng() % m.state_count());
      REQUIRE(verify_force_equality(m, c, q, A));
    }
  }
}

TEST_CASE("role-side work never exceeds the expanded side") {
  for (int n : {1, 2, 3, 4, 5, 6}) {
    Rcgs m = gen_train_controller(n);
    for (const Formula& f : testutil::gate_battery(n)) {
      PairedTrace t = measure_paired(m, f);
      CAPTURE(n);
      CAPTURE(print_formula(f));
      CHECK(t.agree);
      CHECK(t.role_not_slower);
      CHECK(t.role_side.per_call_bound_ok);
    }
  }
}

TEST_CASE("per-call visits stay within the squared profile count") {
  std::mt19937_64 rng(15);
  for (std::uint64_t seed = 400; seed < 450; ++seed) {
    Rcgs m = random_model(seed);
    Formula f = testutil::random_formula(rng, m.agent_count, m.props, 3);
    WorkTrace t = measure(m, f);
    CHECK(t.per_call_bound_ok);
    for (const WorkCall& call : t.calls) {
      std::int64_t profiles = m.index(call.state).profile_total;
      CHECK(call.visits <= profiles * profiles);
    }
  }
}

TEST_CASE("translation respects its cap") {
  Rcgs m = gen_train_controller(10);  // 2^10 tuples at the gate states
  TranslateOptions tight;
  tight.state_cap = 100;
  CHECK_THROWS_AS(translate(m, tight), cap_error);
  CHECK(validate(translate(m)).empty());

  Rcgs big = gen_train_controller(30);  // 2^30 tuples, over the default cap
  CHECK_THROWS_AS(translate(big), cap_error);
}

TEST_CASE("classical checker sweeps the full tuple space every call") {
  Rcgs m = gen_train_controller(3);
  Cgs c = translate(m);
  CgsCheckStats stats;
  CgsChecker checker(c, &stats);
  StateSet target(c.state_count());
  target.set(3);
  checker.enforce(Coalition({1, 2, 3}), 2, target);
  checker.enforce(Coalition({1, 2, 3}), 2, target);
  REQUIRE(stats.calls.size() == 2);
  CHECK(stats.calls[0].tuple_visits == 8);  // 2^3 tuples, no early exit
  CHECK(stats.calls[1].tuple_visits == 8);
}
