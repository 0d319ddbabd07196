#include "pns/construction.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace pns {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

bool weakly_dominates(const rating_vector& a, const rating_vector& b) {
  return a.p <= b.p && a.q <= b.q;
}

bool strictly_dominates(const rating_vector& a, const rating_vector& b) {
  return weakly_dominates(a, b) && (a.p < b.p || a.q < b.q);
}

void validate(const drc_params& params) {
  if (params.sectors < 1) throw std::invalid_argument("sectors must be >= 1");
  if (params.l_max < 1) throw std::invalid_argument("l_max must be >= 1");
}

double rate_p(const instance& inst, bid_id b, const solution& partial) {
  const bid& bd = inst.bid_at(b);
  std::int32_t newly_covered = 0;
  for (contract_id t : bd.bundle)
    if (partial.cover_count(t) == 0) ++newly_covered;
  if (newly_covered == 0) return kInf;
  return bd.price / static_cast<double>(newly_covered);
}

double rate_q(const instance& inst, bid_id b, const solution& partial) {
  const bid& bd = inst.bid_at(b);
  std::int64_t quality_gain = 0;
  for (contract_id t : bd.bundle) {
    const std::int32_t gain = inst.bid_quality(b, t) - partial.covered_quality(t);
    if (gain > 0) quality_gain += gain;
  }
  if (quality_gain <= 0) return kInf;
  const std::int64_t covered_slots =
      partial.bundle_size_sum() +
      (partial.contains(b) ? 0 : static_cast<std::int64_t>(bd.bundle.size()));
  return -static_cast<double>(quality_gain) / static_cast<double>(covered_slots);
}

rating_vector rate(const instance& inst, bid_id b, const solution& partial) {
  return {rate_p(inst, b, partial), rate_q(inst, b, partial)};
}

void candidate_list_insert(std::vector<candidate>& list, const candidate& c) {
  for (const auto& existing : list) {
    if (strictly_dominates(existing.rating, c.rating)) return;
    if (existing.rating == c.rating) return;
  }
  std::erase_if(list,
                [&](const candidate& e) { return strictly_dominates(c.rating, e.rating); });
  list.push_back(c);
}

std::vector<candidate> gen_cand_list(const instance& inst, std::vector<bid_id>& pool,
                                     const solution& partial) {
  std::vector<candidate> candidates;
  std::vector<std::uint8_t> prune(pool.size(), 0);
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const bid_id b = pool[i];
    if (partial.contains(b)) continue;
    const rating_vector g = rate(inst, b, partial);
    if (g.p == kInf && g.q == kInf) {
      prune[i] = 1;  // contributes neither coverage nor quality, ever again
      continue;
    }
    candidate_list_insert(candidates, {b, g});
  }
  if (std::find(prune.begin(), prune.end(), 1) != prune.end()) {
    std::size_t keep = 0;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (!prune[i]) pool[keep++] = pool[i];
    pool.resize(keep);
  }
  return candidates;
}

std::pair<std::size_t, std::size_t> sector_bounds(std::size_t n, std::int32_t s,
                                                  std::int64_t k) {
  if (n == 0) throw std::invalid_argument("sector_bounds: empty candidate list");
  if (s < 1) throw std::invalid_argument("sector_bounds: sectors must be >= 1");
  const auto s_eff = std::min<std::size_t>(static_cast<std::size_t>(s), n);
  const std::size_t m_rest = n / s_eff;                // |C_j| for j >= 2
  const std::size_t m_first = n - m_rest * (s_eff - 1);  // leftovers go to C_1
  std::size_t i = static_cast<std::size_t>(k) % s_eff;
  if (i == 0) i = s_eff;  // k mod s cycles 1..s with 0 addressing the last sector
  if (i == 1) return {0, m_first};
  return {m_first + m_rest * (i - 2), m_first + m_rest * (i - 1)};
}

bid_id sel_cand_sector(std::vector<candidate>& candidates, std::int64_t k, std::int32_t s,
                       rng& random) {
  if (candidates.empty()) throw std::invalid_argument("sel_cand_sector: empty candidate list");
  std::sort(candidates.begin(), candidates.end(), [](const candidate& a, const candidate& b) {
    if (a.rating.p != b.rating.p) return a.rating.p < b.rating.p;
    if (a.rating.q != b.rating.q) return a.rating.q < b.rating.q;
    return a.id < b.id;
  });
  const auto [first, last] = sector_bounds(candidates.size(), s, k);
  return candidates[first + random.uniform_index(last - first)].id;
}

archive drc_run(const instance& inst, const drc_params& params, rng& random,
                const solve_callbacks& callbacks) {
  validate(params);
  archive result;
  std::vector<bid_id> pool;
  std::int64_t k = 0;
  std::int32_t l = 1;
  while (true) {
    ++k;
    solution current(inst);
    pool.resize(static_cast<std::size_t>(inst.num_bids()));
    std::iota(pool.begin(), pool.end(), 0);
    while (!current.feasible()) {
      auto candidates = gen_cand_list(inst, pool, current);
      if (candidates.empty())
        throw std::runtime_error("construction stalled: no candidate bid contributes");
      current.add(sel_cand_sector(candidates, k, params.sectors, random));
    }
    if (result.insert(std::move(current), dominance::strict) == insert_outcome::accepted) {
      l = 1;
      if (callbacks.on_insert) callbacks.on_insert(result);
    } else {
      ++l;
    }
    if (callbacks.should_stop && callbacks.should_stop(result)) break;
    if (l == params.l_max) break;
  }
  return result;
}

}  // namespace pns
