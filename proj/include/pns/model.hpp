#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pns {

using contract_id = std::int32_t;
using carrier_id = std::int32_t;
using bid_id = std::int32_t;

// All-or-nothing offer by one carrier on a bundle of contracts.
// A bid's id is its index in instance::bids().
struct bid {
  carrier_id carrier = 0;
  double price = 0.0;
  std::vector<contract_id> bundle;  // sorted ascending, no duplicates

  bool covers(contract_id t) const;
};

// Immutable auction instance: tendered contracts, submitted bundle bids and
// the per-contract/per-carrier quality matrix. Validation happens once at
// construction; afterwards the object is safe to share across solver runs.
class instance {
 public:
  // quality[t][c] >= 1 for every contract t and carrier c.
  // Throws std::invalid_argument naming the offending entity.
  instance(std::int32_t num_contracts, std::int32_t num_carriers,
           std::vector<std::vector<std::int32_t>> quality,
           std::vector<bid> bids);

  std::int32_t num_contracts() const { return num_contracts_; }
  std::int32_t num_carriers() const { return num_carriers_; }
  std::int32_t num_bids() const { return static_cast<std::int32_t>(bids_.size()); }

  const std::vector<bid>& bids() const { return bids_; }
  const bid& bid_at(bid_id b) const { return bids_[static_cast<std::size_t>(b)]; }

  std::int32_t quality(contract_id t, carrier_id c) const {
    return quality_[static_cast<std::size_t>(t)][static_cast<std::size_t>(c)];
  }
  // Quality delivered on contract t when bid b wins.
  std::int32_t bid_quality(bid_id b, contract_id t) const {
    return quality(t, bid_at(b).carrier);
  }

  // Objective values of the all-bids solution, used as normalization anchors.
  double total_price() const { return total_price_; }
  double total_negated_quality() const { return total_negated_quality_; }

 private:
  std::int32_t num_contracts_;
  std::int32_t num_carriers_;
  std::vector<std::vector<std::int32_t>> quality_;
  std::vector<bid> bids_;
  double total_price_ = 0.0;
  double total_negated_quality_ = 0.0;
};

// Objective vector (f1, f2): total price and negated total quality.
// Both objectives are minimized.
struct objective_vector {
  double f1 = 0.0;
  double f2 = 0.0;

  friend bool operator==(const objective_vector&, const objective_vector&) = default;
};

enum class dominance { weak, strict };

bool weakly_dominates(const objective_vector& a, const objective_vector& b);
bool strictly_dominates(const objective_vector& a, const objective_vector& b);
bool dominates(const objective_vector& a, const objective_vector& b, dominance mode);

// Fresh objective evaluation over an explicit winning set. `winning` must
// hold valid, pairwise distinct bid ids; ids are summed in ascending order
// so results are bit-reproducible. These are the reference evaluators the
// cached values in `solution` must agree with.
double evaluate_f1(const instance& inst, std::span<const bid_id> winning);
double evaluate_f2(const instance& inst, std::span<const bid_id> winning);
bool is_feasible(const instance& inst, std::span<const bid_id> winning);

// A (possibly partial) selection of winning bids with incrementally
// maintained coverage counts, per-contract best quality and objectives.
// Owned by a single solver run; copies are cheap enough for destroy/repair.
class solution {
 public:
  explicit solution(const instance& inst);
  solution(const instance& inst, std::span<const bid_id> winning);

  const instance& owner() const { return *inst_; }
  const std::vector<bid_id>& winning() const { return winning_; }
  bool contains(bid_id b) const { return in_winning_[static_cast<std::size_t>(b)] != 0; }
  bool empty() const { return winning_.empty(); }
  std::size_t size() const { return winning_.size(); }

  void add(bid_id b);     // no-op when already winning
  void remove(bid_id b);  // no-op when not winning

  bool feasible() const { return uncovered_ == 0; }
  std::int32_t uncovered_count() const { return uncovered_; }
  std::int32_t cover_count(contract_id t) const {
    return cover_count_[static_cast<std::size_t>(t)];
  }
  // Best quality currently achieved on t; 0 while t is uncovered.
  std::int32_t covered_quality(contract_id t) const {
    return best_quality_[static_cast<std::size_t>(t)];
  }
  // Sum of |bundle| over all winning bids (denominator of the Q rating).
  std::int64_t bundle_size_sum() const { return bundle_size_sum_; }

  double f1() const;  // total price, canonical ascending-id summation
  double f2() const { return quality_sum_ == 0 ? 0.0 : -static_cast<double>(quality_sum_); }
  std::int64_t quality_sum() const { return quality_sum_; }
  objective_vector objectives() const { return {f1(), f2()}; }

  // Recomputes every cached field from the winning set and compares;
  // returns false when any cache disagrees with a fresh evaluation.
  bool caches_consistent() const;

 private:
  const instance* inst_;
  std::vector<bid_id> winning_;        // sorted ascending
  std::vector<std::uint8_t> in_winning_;
  std::vector<std::int32_t> cover_count_;
  std::vector<std::int32_t> best_quality_;
  std::int32_t uncovered_;
  std::int64_t quality_sum_ = 0;
  std::int64_t bundle_size_sum_ = 0;
  mutable double f1_cache_ = 0.0;
  mutable bool f1_dirty_ = false;
};

enum class insert_outcome { accepted, rejected };

struct archive_entry {
  solution sol;
  objective_vector vec;
  std::uint32_t sigma1 = 0;  // failed improvement attempts under the P repair
  std::uint32_t sigma2 = 0;  // failed improvement attempts under the Q repair
};

// Mutually non-dominated set of feasible solutions. No two members share an
// objective vector; on equal vectors the first inserted solution is kept.
class archive {
 public:
  // mode selects the acceptance guard: strict admits candidates no member
  // strictly dominates, weak admits candidates no member weakly dominates.
  // Accepted candidates evict every member they strictly dominate and enter
  // with zeroed failure counters. Candidates whose objective vector already
  // appears in the archive are rejected. Throws std::invalid_argument for
  // infeasible candidates.
  insert_outcome insert(solution candidate, dominance mode);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const archive_entry& operator[](std::size_t i) const { return entries_[i]; }
  archive_entry& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<archive_entry>& entries() const { return entries_; }

  // Objective vectors sorted by (f1, f2); canonical form for comparisons.
  std::vector<objective_vector> objective_vectors() const;

 private:
  std::vector<archive_entry> entries_;
};

// Strips duplicates and strictly dominated vectors; result sorted by (f1, f2).
std::vector<objective_vector> non_dominated_subset(std::vector<objective_vector> vectors);

}  // namespace pns
