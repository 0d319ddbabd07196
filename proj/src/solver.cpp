#include "pns/solver.hpp"

namespace pns {

solve_result pns_solve(const instance& inst, const solve_params& params,
                       const solve_callbacks& callbacks) {
  validate(params.drc);
  validate(params.plns);
  const auto start = std::chrono::steady_clock::now();

  solve_result result;
  solve_callbacks instrumented = callbacks;
  instrumented.on_plns_iteration = [&](const archive& a, const plns_event& e) {
    ++result.stats.plns_iterations;
    if (callbacks.on_plns_iteration) callbacks.on_plns_iteration(a, e);
  };

  rng random(params.drc.rng_seed);
  {
    solve_callbacks drc_cb = instrumented;
    // the stop predicate is polled exactly once per constructed solution
    drc_cb.should_stop = [&](const archive& a) {
      ++result.stats.constructions;
      return callbacks.should_stop ? callbacks.should_stop(a) : false;
    };
    result.front = drc_run(inst, params.drc, random, drc_cb);
  }
  if (params.plns.time_limit > std::chrono::milliseconds::zero())
    result.front = plns_run(inst, std::move(result.front), params.plns, random, instrumented);

  result.stats.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace pns
