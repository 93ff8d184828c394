#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "rolecheck/combinatorics.hpp"
#include "rolecheck/generators.hpp"
#include "rolecheck/model.hpp"
#include "rolecheck/stateset.hpp"

using namespace rolecheck;

TEST_CASE("binomial small table") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(11, 5) == 462);
  CHECK(binomial(64, 32) == BigInt("1832624140942590534"));
}

TEST_CASE("composition counts match brute enumeration") {
  for (int m = 0; m <= 8; ++m)
    for (int k = 1; k <= 6; ++k) {
      CAPTURE(m);
      CAPTURE(k);
      CHECK(composition_count(m, k) == testutil::votes_brute(m, k).size());
    }
}

TEST_CASE("vote enumeration order and distinctness") {
  for (int m = 0; m <= 6; ++m)
    for (int k = 1; k <= 5; ++k) {
      std::vector<Vote> got = enumerate_votes(m, k);
      std::vector<Vote> want = testutil::votes_brute(m, k);
      CAPTURE(m);
      CAPTURE(k);
      REQUIRE(got == want);  // same votes, same ascending order
      std::set<Vote> dedup(got.begin(), got.end());
      CHECK(dedup.size() == got.size());
    }
  CHECK(enumerate_votes(2, 2) ==
        std::vector<Vote>{{0, 2}, {1, 1}, {2, 0}});
}

TEST_CASE("vote_rank inverts enumeration") {
  for (int m = 0; m <= 7; ++m)
    for (int k = 1; k <= 5; ++k) {
      std::vector<Vote> votes = enumerate_votes(m, k);
      for (size_t i = 0; i < votes.size(); ++i)
        CHECK(vote_rank(votes[i]) == static_cast<std::int64_t>(i));
    }
}

TEST_CASE("coalition basics") {
  Coalition c({3, 1, 3, 2});
  CHECK(c.members == std::vector<Agent>{1, 2, 3});
  CHECK(c.contains(2));
  CHECK(!c.contains(4));
  CHECK(c.complement(5).members == std::vector<Agent>{4, 5});
  CHECK(Coalition::all(3).members == std::vector<Agent>{1, 2, 3});
  CHECK(Coalition::none().empty());
}

TEST_CASE("state sets") {
  StateSet s(5);
  s.set(0);
  s.set(3);
  CHECK(s.count() == 2);
  CHECK(s.elements() == std::vector<StateId>{0, 3});
  CHECK(s.subset_of(StateSet::full(5)));
  CHECK(!StateSet::full(5).subset_of(s));
  StateSet t = s.complement();
  CHECK(t.elements() == std::vector<StateId>{1, 2, 4});
  CHECK((s & t).empty());
  CHECK((s | t) == StateSet::full(5));
}

TEST_CASE("profile enumeration matches brute cartesian product") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    Rcgs m = random_model(1000 + static_cast<std::uint64_t>(trial));
    for (StateId q = 0; q < m.state_count(); ++q)
      for (int sub = 0; sub < 4; ++sub) {
        Coalition A = sub == 0 ? Coalition::all(m.agent_count)
                               : testutil::random_coalition(rng, m.agent_count);
        CAPTURE(trial);
        CAPTURE(q);
        REQUIRE(enumerate_profiles(m, q, A) == testutil::profiles_brute(m, q, A));
      }
  }
}

TEST_CASE("profile_count agrees with enumeration size") {
  std::mt19937_64 rng(43);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rcgs m = random_model(seed);
    for (StateId q = 0; q < m.state_count(); ++q) {
      size_t complete =
          enumerate_profiles(m, q, Coalition::all(m.agent_count)).size();
      CHECK(profile_count(m, q) == complete);
      // partial profiles never outnumber complete ones
      Coalition A = testutil::random_coalition(rng, m.agent_count);
      CHECK(enumerate_profiles(m, q, A).size() <= complete);
    }
  }
}

TEST_CASE("dense transition lookup matches the entry list") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    Rcgs m = random_model(seed);
    for (StateId q = 0; q < m.state_count(); ++q) {
      std::map<Profile, StateId> listed;
      for (const TransitionEntry& e :
           m.transitions[static_cast<size_t>(q)].entries)
        listed[e.key] = e.target;
      for (const Profile& f :
           enumerate_profiles(m, q, Coalition::all(m.agent_count)))
        CHECK(m.target(q, f) == listed.at(f));
    }
  }
}

TEST_CASE("extends is a componentwise partial order") {
  Rcgs m = gen_train_controller(2);
  for (StateId q = 0; q < m.state_count(); ++q) {
    std::vector<Profile> all = enumerate_profiles(m, q, Coalition::all(3));
    Coalition trains({1, 2});
    for (const Profile& partial : enumerate_profiles(m, q, trains)) {
      for (const Profile& full : all) {
        bool brute = false;
        for (const Profile& e : testutil::extensions_brute(m, q, partial))
          if (e == full) brute = true;
        CHECK(extends(partial, full) == brute);
      }
    }
    for (const Profile& full : all) CHECK(extends(full, full));
  }

  // antisymmetry and transitivity over mixed partial and complete profiles
  std::mt19937_64 rng(44);
  for (std::uint64_t seed = 400; seed < 410; ++seed) {
    Rcgs r = random_model(seed);
    for (StateId q = 0; q < r.state_count(); ++q) {
      std::vector<Profile> pool =
          enumerate_profiles(r, q, Coalition::all(r.agent_count));
      for (int sub = 0; sub < 2; ++sub) {
        Coalition A = testutil::random_coalition(rng, r.agent_count);
        for (const Profile& f : enumerate_profiles(r, q, A)) pool.push_back(f);
      }
      while (pool.size() > 40) pool.erase(pool.begin() + rng() % pool.size());
      for (const Profile& f : pool)
        for (const Profile& g : pool) {
          if (extends(f, g) && extends(g, f)) CHECK(f == g);
          for (const Profile& h : pool)
            if (extends(f, g) && extends(g, h)) CHECK(extends(f, h));
        }
    }
  }
}

TEST_CASE("extensions by complement addition match extensions by filtering") {
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 200; seed < 240; ++seed) {
    Rcgs m = random_model(seed);
    for (StateId q = 0; q < m.state_count(); ++q) {
      Coalition A = testutil::random_coalition(rng, m.agent_count);
      for (const Profile& partial : enumerate_profiles(m, q, A)) {
        std::vector<Profile> got = extensions(m, q, partial);
        std::vector<Profile> want = testutil::extensions_brute(m, q, partial);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        REQUIRE(got == want);
      }
    }
  }
}

TEST_CASE("extension count is the complement profile count") {
  for (std::uint64_t seed = 300; seed < 320; ++seed) {
    Rcgs m = random_model(seed);
    Coalition all = Coalition::all(m.agent_count);
    for (StateId q = 0; q < m.state_count(); ++q) {
      Coalition A({1});
      Coalition rest = A.complement(m.agent_count);
      for (const Profile& partial : enumerate_profiles(m, q, A))
        CHECK(extensions(m, q, partial).size() ==
              enumerate_profiles(m, q, rest).size());
      // a complete profile extends only itself
      for (const Profile& full : enumerate_profiles(m, q, all))
        CHECK(extensions(m, q, full) == std::vector<Profile>{full});
    }
  }
}

TEST_CASE("successors of the train controller follow the gate protocol") {
  Rcgs m = gen_train_controller(2);

  // one train tries to enter the granted gate; the other may collide
  Profile enter_alone = {{1, 0}, {0}};
  std::vector<StateId> succ = successors(m, 2, enter_alone);
  CHECK(succ == std::vector<StateId>{2, 3});

  // the controller alone can pin the successor at q1
  Profile grant = {{0}, {0, 0, 1}};
  CHECK(successors(m, 1, grant) == std::vector<StateId>{2});
  Profile reject = {{0}, {1, 0, 0}};
  CHECK(successors(m, 1, reject) == std::vector<StateId>{0});
}

TEST_CASE("validate flags structural defects") {
  auto code_seen = [](const Rcgs& m, Violation::Code c) {
    for (const Violation& v : validate(m))
      if (v.code == c) return true;
    return false;
  };

  Rcgs good = gen_train_controller(2);
  CHECK(validate(good).empty());

  Rcgs overlap = gen_train_controller(2);
  overlap.role_members[0][1].push_back(1);  // agent 1 in both roles at q0
  CHECK(code_seen(overlap, Violation::Code::RoleOverlap));

  Rcgs unassigned = gen_train_controller(2);
  unassigned.role_members[2][0] = {1};  // agent 2 in no role at q2
  CHECK(code_seen(unassigned, Violation::Code::Unassigned));

  Rcgs missing = gen_train_controller(2);
  missing.transitions[0].entries.pop_back();
  CHECK(code_seen(missing, Violation::Code::NotTotal));

  Rcgs doubled = gen_train_controller(2);
  doubled.transitions[0].entries.push_back(doubled.transitions[0].entries[0]);
  CHECK(code_seen(doubled, Violation::Code::DuplicateEntry));

  Rcgs bad_target = gen_train_controller(2);
  bad_target.transitions[0].entries[0].target = 9;
  CHECK(code_seen(bad_target, Violation::Code::BadTarget));

  Rcgs bad_vote = gen_train_controller(2);
  bad_vote.transitions[0].entries[0].key[0] = {3, 0};  // sum 3, role has 2
  CHECK(code_seen(bad_vote, Violation::Code::BadProfile));

  Rcgs empty = gen_train_controller(2);
  empty.agent_count = 0;
  CHECK(code_seen(empty, Violation::Code::NoAgents));
}

TEST_CASE("generated gate models validate across the family") {
  for (int n = 1; n <= 6; ++n) CHECK(validate(gen_train_controller(n)).empty());
  for (int n = 2; n <= 6; ++n) CHECK(validate(gen_autonomous_trains(n)).empty());
}

TEST_CASE("default transitions expand to the uncovered profiles") {
  Rcgs m = gen_train_controller(3);
  // rebuild q0 with only the all-idle entry plus a default to q1
  Rcgs sparse = m;
  sparse.transitions[0].entries.clear();
  sparse.transitions[0].entries.push_back(TransitionEntry{{{0, 3}, {1}}, 0});
  sparse.transitions[0].default_target = 1;
  CHECK(validate(sparse).empty());
  sparse.compile();
  for (const Profile& f : enumerate_profiles(sparse, 0, Coalition::all(4)))
    CHECK(sparse.target(0, f) == m.target(0, f));
}

TEST_CASE("models compare structurally") {
  Rcgs a = gen_train_controller(2);
  Rcgs b = gen_train_controller(2);
  CHECK(a == b);
  b.labels[0][0] = false;
  CHECK(!(a == b));
}
