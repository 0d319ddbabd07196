#include "pns/improvement.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace pns {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void validate(const destroy_strategy& strategy) {
  if (strategy.rates.empty()) throw std::invalid_argument("destroy strategy must be non-empty");
  for (std::int32_t r : strategy.rates)
    if (r < 0 || r > 100)
      throw std::invalid_argument("destroy rates are percents and must lie in [0,100]");
}

void validate(const plns_params& params) {
  validate(params.strategy);
  if (params.time_limit < std::chrono::milliseconds::zero())
    throw std::invalid_argument("time limit must be non-negative");
}

std::int32_t select_destroy_rate(std::uint32_t sigma1, std::uint32_t sigma2,
                                 const destroy_strategy& strategy) {
  const auto n = strategy.rates.size();
  return strategy.rates[static_cast<std::size_t>(std::min(sigma1, sigma2)) % n];
}

solution destroy(solution sol, std::int32_t rate_percent, rng& random) {
  const std::vector<bid_id> winning = sol.winning();  // copy; removal invalidates iteration
  for (bid_id b : winning)
    if (random.uniform_int(1, 100) <= rate_percent) sol.remove(b);
  return sol;
}

namespace {

// One greedy pass: smallest finite g_i rating over pool \ X, erasing bids
// rated +inf as they are seen. Returns -1 when no finite rating remains.
bid_id greedy_best(const instance& inst, const solution& partial, std::vector<bid_id>& pool,
                   bool use_p) {
  double best_rating = kInf;
  bid_id best = -1;
  std::size_t keep = 0;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const bid_id b = pool[i];
    if (partial.contains(b)) {
      pool[keep++] = b;
      continue;
    }
    const double g = use_p ? rate_p(inst, b, partial) : rate_q(inst, b, partial);
    if (g < best_rating) {
      best_rating = g;
      best = b;
    } else if (g == kInf) {
      continue;  // drop from pool
    }
    pool[keep++] = b;
  }
  pool.resize(keep);
  return best;
}

}  // namespace

solution repair(const instance& inst, solution partial, std::uint32_t sigma1,
                std::uint32_t sigma2) {
  std::vector<bid_id> pool(static_cast<std::size_t>(inst.num_bids()));
  std::iota(pool.begin(), pool.end(), 0);
  bool use_p = sigma1 < sigma2;
  while (!partial.feasible()) {
    const bid_id best = greedy_best(inst, partial, pool, use_p);
    if (best < 0) {
      if (!use_p) {
        // The quality criterion can run dry while contracts stay uncovered;
        // finish the repair under the cost criterion with a fresh pool.
        use_p = true;
        pool.resize(static_cast<std::size_t>(inst.num_bids()));
        std::iota(pool.begin(), pool.end(), 0);
        continue;
      }
      throw std::runtime_error("repair stalled: no bid covers a missing contract");
    }
    partial.add(best);
  }
  return partial;
}

archive plns_run(const instance& inst, archive a, const plns_params& params, rng& random,
                 const solve_callbacks& callbacks) {
  validate(params);
  if (a.empty()) throw std::invalid_argument("plns_run requires a non-empty archive");
  const auto deadline = std::chrono::steady_clock::now() + params.time_limit;
  while (std::chrono::steady_clock::now() < deadline) {
    if (callbacks.should_stop && callbacks.should_stop(a)) break;
    const std::size_t picked = random.uniform_index(a.size());
    const std::uint32_t sigma1 = a[picked].sigma1;
    const std::uint32_t sigma2 = a[picked].sigma2;
    solution destroyed =
        destroy(a[picked].sol, select_destroy_rate(sigma1, sigma2, params.strategy), random);
    solution repaired = repair(inst, std::move(destroyed), sigma1, sigma2);

    plns_event event;
    event.picked_index = picked;
    if (a.insert(std::move(repaired), dominance::weak) == insert_outcome::accepted) {
      event.what = plns_event::kind::inserted;
      if (callbacks.on_insert) callbacks.on_insert(a);
    } else if (sigma1 < sigma2) {
      // rejected: archive unchanged, so `picked` still addresses the same entry
      ++a[picked].sigma1;
      event.what = plns_event::kind::sigma1_incremented;
    } else {
      ++a[picked].sigma2;
      event.what = plns_event::kind::sigma2_incremented;
    }
    if (callbacks.on_plns_iteration) callbacks.on_plns_iteration(a, event);
  }
  return a;
}

}  // namespace pns
