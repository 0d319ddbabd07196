#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pns/callbacks.hpp"
#include "pns/model.hpp"
#include "pns/rng.hpp"

namespace pns {
class rng;

// Greedy rating of a candidate bid against a partial solution. Both
// components are minimized; +infinity marks "no contribution".
struct rating_vector {
  double p = 0.0;  // average additional cost per newly covered contract
  double q = 0.0;  // negated quality gain per covered-contract slot

  friend bool operator==(const rating_vector&, const rating_vector&) = default;
};

bool weakly_dominates(const rating_vector& a, const rating_vector& b);
bool strictly_dominates(const rating_vector& a, const rating_vector& b);

struct drc_params {
  std::int32_t sectors = 3;  // s
  std::int32_t l_max = 92;   // consecutive non-improving constructions before stop
  std::uint64_t rng_seed = 1;
};
void validate(const drc_params& params);  // throws std::invalid_argument

// Cost rating P: price divided by the number of contracts the bid would
// newly cover; +inf when it covers nothing new.
double rate_p(const instance& inst, bid_id b, const solution& partial);

// Quality rating Q: negated quality increment divided by the total bundle
// sizes of the would-be winning set; +inf when the increment is zero.
double rate_q(const instance& inst, bid_id b, const solution& partial);

rating_vector rate(const instance& inst, bid_id b, const solution& partial);

struct candidate {
  bid_id id = 0;
  rating_vector rating;
};

// Inserts `c` into the mutually non-dominated candidate list: rejected when
// an existing candidate strictly dominates it or carries an equal rating
// (first encountered wins); otherwise evicts candidates it strictly
// dominates and appends. Shared by gen_cand_list and its tests.
void candidate_list_insert(std::vector<candidate>& list, const candidate& c);

// First selection stage: rates every pool bid outside the partial solution
// and returns the mutually non-dominated candidates. Bids rated (+inf,+inf)
// are erased from `pool` and stay erased for the rest of the construction.
std::vector<candidate> gen_cand_list(const instance& inst, std::vector<bid_id>& pool,
                                     const solution& partial);

// Half-open position range [first, last) of the sector addressed by the
// k-th construction when a list of n candidates is split into s sectors.
// s is clamped to n; leftover positions go to the first sector.
std::pair<std::size_t, std::size_t> sector_bounds(std::size_t n, std::int32_t s, std::int64_t k);

// Second selection stage: sorts candidates by ascending P rating (ties by
// Q rating, then id), picks the sector addressed by k and draws uniformly
// from it. Throws std::invalid_argument on an empty list.
bid_id sel_cand_sector(std::vector<candidate>& candidates, std::int64_t k, std::int32_t s,
                       rng& random);

// Multi-start construction phase: builds feasible solutions until l_max
// consecutive constructions fail to enter the archive (strict-dominance
// guard). Returns the archive of constructed non-dominated solutions.
archive drc_run(const instance& inst, const drc_params& params, rng& random,
                const solve_callbacks& callbacks = {});

}  // namespace pns
