#pragma once

#include <cstdint>

#include "rolecheck/model.hpp"

namespace rolecheck {

// Gate controller with n_t identical trains (agents 1..n_t) and a controller
// (agent n_t+1). Two roles at every state; the transition table grows
// linearly in n_t while the agent-indexed expansion doubles per train.
// Returns a validated, compiled model.
Rcgs gen_train_controller(int n_t);

// Variant where the trains elect the next candidate by strict plurality at
// the hub state; the elected train is moved into its own role while it holds
// the grant. Three roles: bystander trains, the selected train, and the
// controller. Requires n_t >= 2. Returns a validated, compiled model.
Rcgs gen_autonomous_trains(int n_t);

// Closed form for the hub state's profile count in gen_autonomous_trains:
// n_t voters spread over n_t candidates.
BigInt hub_profile_count(int n_t);

struct RandomModelBounds {
  int max_agents = 4;
  int max_states = 4;
  int max_roles = 3;
  int max_actions = 3;
  int max_props = 3;
};

// Deterministic pseudo-random model: per state, agents are spread over the
// roles and every complete profile gets an explicit random target, so the
// result always validates. Same seed, same model. Returns it compiled.
Rcgs random_model(std::uint64_t seed, const RandomModelBounds& bounds = {});

}  // namespace rolecheck
