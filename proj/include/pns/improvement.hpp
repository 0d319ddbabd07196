#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "pns/callbacks.hpp"
#include "pns/construction.hpp"
#include "pns/model.hpp"
#include "pns/rng.hpp"

namespace pns {

// Cycle of destroy rates, stored as integer percents (removal probability
// d/100 per winning bid). Which rate applies is chosen self-adaptively from
// a solution's failure counters.
struct destroy_strategy {
  std::vector<std::int32_t> rates{3, 6, 9, 2, 4};
};
void validate(const destroy_strategy& strategy);  // throws std::invalid_argument

struct plns_params {
  destroy_strategy strategy;
  std::chrono::milliseconds time_limit{std::chrono::seconds(300)};
  std::uint64_t rng_seed = 1;
};
void validate(const plns_params& params);

// Rate at cyclic 0-based position min(sigma1, sigma2) mod n of the strategy.
std::int32_t select_destroy_rate(std::uint32_t sigma1, std::uint32_t sigma2,
                                 const destroy_strategy& strategy);

// Removes each winning bid independently with probability rate/100; the
// result may be infeasible. One draw from rand(1,100) is consumed per
// winning bid regardless of the rate.
solution destroy(solution sol, std::int32_t rate_percent, rng& random);

// Greedily adds the pool bid with the smallest P rating (sigma1 < sigma2)
// or Q rating (otherwise) until feasible. Bids rated +inf are dropped from
// the pool as they are encountered; if the Q criterion exhausts the pool
// while still infeasible, the call falls back to the P criterion.
solution repair(const instance& inst, solution partial, std::uint32_t sigma1,
                std::uint32_t sigma2);

// Improvement phase: destroy/repair driven by per-solution failure counters
// until the time limit (checked once per iteration) or callbacks.should_stop
// ends the run. The input archive must be non-empty.
archive plns_run(const instance& inst, archive a, const plns_params& params, rng& random,
                 const solve_callbacks& callbacks = {});

}  // namespace pns
