#pragma once

#include <cstdint>
#include <vector>

#include "pns/model.hpp"

namespace pns {

// Exact Pareto front of a small instance with one witness per vector.
// Every feasible subset of bids is weakly dominated by some front member.
struct exact_front {
  std::vector<objective_vector> vectors;          // sorted by (f1, f2)
  std::vector<std::vector<bid_id>> witnesses;     // witnesses[i] achieves vectors[i]
};

// Enumerates all 2^|B| bid subsets in binary-counter order and reduces the
// feasible ones to the non-dominated frontier. Witnesses for an objective
// vector are the subset with the fewest bids, ties broken by the
// lexicographically smallest id sequence. Throws std::invalid_argument when
// the instance has more than bid_limit bids.
exact_front enumerate_front(const instance& inst, std::int32_t bid_limit = 24);

}  // namespace pns
