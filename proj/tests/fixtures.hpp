#pragma once

#include <algorithm>
#include <vector>

#include "pns/generator.hpp"
#include "pns/model.hpp"
#include "pns/rng.hpp"

namespace fixtures {

// Two contracts, three bids, Pareto front {(10,-6), (12,-10)}: the cheap
// bundle bid against the expensive high-quality singleton pair.
inline pns::instance two_point_front() {
  std::vector<std::vector<std::int32_t>> quality = {{3, 5, 1}, {3, 1, 5}};
  std::vector<pns::bid> bids;
  bids.push_back({0, 10.0, {0, 1}});
  bids.push_back({1, 6.0, {0}});
  bids.push_back({2, 6.0, {1}});
  return pns::instance(2, 3, std::move(quality), std::move(bids));
}

// One bid dominates every other combination; the front is a single vector
// (5, -18).
inline pns::instance single_point_front() {
  std::vector<std::vector<std::int32_t>> quality = {{9, 1}, {9, 1}};
  std::vector<pns::bid> bids;
  bids.push_back({0, 5.0, {0, 1}});
  bids.push_back({1, 10.0, {0}});
  bids.push_back({1, 10.0, {1}});
  return pns::instance(2, 2, std::move(quality), std::move(bids));
}

inline pns::instance small_random(std::uint64_t seed, std::int32_t contracts = 6,
                                  std::int32_t bids = 14) {
  pns::generator_config config;
  config.contracts = contracts;
  config.bids = bids;
  config.carriers = 3;
  config.bundle_min = 1;
  config.bundle_max = std::min<std::int32_t>(3, contracts);
  config.quality_min = 1;
  config.quality_max = 9;
  config.seed = seed;
  return pns::generate_instance(config);
}

// Random feasible solution: a random subset of bids patched up with the
// seeded singleton bids (ids 0..contracts-1 in generated instances).
inline pns::solution random_feasible(const pns::instance& inst, pns::rng& random) {
  pns::solution sol(inst);
  for (pns::bid_id b = 0; b < inst.num_bids(); ++b)
    if (random.uniform_int(0, 3) == 0) sol.add(b);
  for (pns::contract_id t = 0; t < inst.num_contracts(); ++t)
    if (sol.cover_count(t) == 0) sol.add(static_cast<pns::bid_id>(t));
  return sol;
}

}  // namespace fixtures
