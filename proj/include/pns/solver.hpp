#pragma once

#include <chrono>
#include <cstdint>

#include "pns/callbacks.hpp"
#include "pns/construction.hpp"
#include "pns/improvement.hpp"
#include "pns/model.hpp"

namespace pns {

struct solve_params {
  drc_params drc;
  plns_params plns;
};

struct solve_stats {
  std::uint64_t constructions = 0;
  std::uint64_t plns_iterations = 0;
  double wall_time_s = 0.0;
};

struct solve_result {
  archive front;
  solve_stats stats;
};

// Full run: construction phase followed by the improvement phase, both fed
// from one random stream seeded with params.drc.rng_seed. A zero time limit
// skips the improvement phase.
solve_result pns_solve(const instance& inst, const solve_params& params,
                       const solve_callbacks& callbacks = {});

}  // namespace pns
