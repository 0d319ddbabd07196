#pragma once

#include <cstddef>
#include <functional>

namespace pns {

class archive;

// Outcome of one improvement iteration; exactly one per iteration.
struct plns_event {
  enum class kind { inserted, sigma1_incremented, sigma2_incremented };
  kind what = kind::inserted;
  std::size_t picked_index = 0;  // archive index of the solution picked at iteration start
};

// Progress sink for solver runs. All hooks are optional; the solver never
// blocks on them. on_insert fires after every accepted archive insertion
// (the only events that can change indicator values), on_plns_iteration
// after every destroy/repair cycle, and should_stop is polled once per
// construction / improvement iteration to end a run early.
struct solve_callbacks {
  std::function<void(const archive&)> on_insert;
  std::function<void(const archive&, const plns_event&)> on_plns_iteration;
  std::function<bool(const archive&)> should_stop;
};

}  // namespace pns
