#include "pns/model.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pns {

bool bid::covers(contract_id t) const {
  return std::binary_search(bundle.begin(), bundle.end(), t);
}

instance::instance(std::int32_t num_contracts, std::int32_t num_carriers,
                   std::vector<std::vector<std::int32_t>> quality,
                   std::vector<bid> bids)
    : num_contracts_(num_contracts),
      num_carriers_(num_carriers),
      quality_(std::move(quality)),
      bids_(std::move(bids)) {
  if (num_contracts_ < 1) throw std::invalid_argument("instance needs at least one contract");
  if (num_carriers_ < 1) throw std::invalid_argument("instance needs at least one carrier");
  if (quality_.size() != static_cast<std::size_t>(num_contracts_))
    throw std::invalid_argument("quality matrix must have one row per contract");
  for (std::int32_t t = 0; t < num_contracts_; ++t) {
    const auto& row = quality_[static_cast<std::size_t>(t)];
    if (row.size() != static_cast<std::size_t>(num_carriers_))
      throw std::invalid_argument("quality row for contract " + std::to_string(t) +
                                  " must have one entry per carrier");
    for (std::int32_t c = 0; c < num_carriers_; ++c) {
      if (row[static_cast<std::size_t>(c)] < 1)
        throw std::invalid_argument("quality of contract " + std::to_string(t) + " by carrier " +
                                    std::to_string(c) + " must be >= 1");
    }
  }

  std::vector<std::uint8_t> covered(static_cast<std::size_t>(num_contracts_), 0);
  for (std::size_t b = 0; b < bids_.size(); ++b) {
    auto& bd = bids_[b];
    const std::string name = "bid " + std::to_string(b);
    if (bd.carrier < 0 || bd.carrier >= num_carriers_)
      throw std::invalid_argument(name + ": unknown carrier " + std::to_string(bd.carrier));
    if (!(bd.price > 0.0) || !std::isfinite(bd.price))
      throw std::invalid_argument(name + ": price must be finite and > 0");
    if (bd.bundle.empty()) throw std::invalid_argument(name + ": empty bundle");
    std::sort(bd.bundle.begin(), bd.bundle.end());
    if (std::adjacent_find(bd.bundle.begin(), bd.bundle.end()) != bd.bundle.end())
      throw std::invalid_argument(name + ": duplicate contract in bundle");
    for (contract_id t : bd.bundle) {
      if (t < 0 || t >= num_contracts_)
        throw std::invalid_argument(name + ": unknown contract " + std::to_string(t));
      covered[static_cast<std::size_t>(t)] = 1;
    }
  }
  for (std::int32_t t = 0; t < num_contracts_; ++t) {
    if (!covered[static_cast<std::size_t>(t)])
      throw std::invalid_argument("contract " + std::to_string(t) +
                                  " is not covered by any bid; no feasible solution exists");
  }

  for (const auto& bd : bids_) total_price_ += bd.price;
  std::int64_t q = 0;
  for (std::int32_t t = 0; t < num_contracts_; ++t) {
    std::int32_t best = 0;
    for (const auto& bd : bids_)
      if (bd.covers(t))
        best = std::max(best, quality_[static_cast<std::size_t>(t)]
                                      [static_cast<std::size_t>(bd.carrier)]);
    q += best;
  }
  total_negated_quality_ = -static_cast<double>(q);
}

bool weakly_dominates(const objective_vector& a, const objective_vector& b) {
  return a.f1 <= b.f1 && a.f2 <= b.f2;
}

bool strictly_dominates(const objective_vector& a, const objective_vector& b) {
  return weakly_dominates(a, b) && (a.f1 < b.f1 || a.f2 < b.f2);
}

bool dominates(const objective_vector& a, const objective_vector& b, dominance mode) {
  return mode == dominance::weak ? weakly_dominates(a, b) : strictly_dominates(a, b);
}

namespace {

std::vector<bid_id> checked_sorted_ids(const instance& inst, std::span<const bid_id> winning) {
  std::vector<bid_id> ids(winning.begin(), winning.end());
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw std::invalid_argument("winning set contains a duplicate bid id");
  for (bid_id b : ids) {
    if (b < 0 || b >= inst.num_bids())
      throw std::invalid_argument("invalid bid id " + std::to_string(b));
  }
  return ids;
}

}  // namespace

double evaluate_f1(const instance& inst, std::span<const bid_id> winning) {
  double sum = 0.0;
  for (bid_id b : checked_sorted_ids(inst, winning)) sum += inst.bid_at(b).price;
  return sum;
}

double evaluate_f2(const instance& inst, std::span<const bid_id> winning) {
  const auto ids = checked_sorted_ids(inst, winning);
  std::int64_t total = 0;
  for (contract_id t = 0; t < inst.num_contracts(); ++t) {
    std::int32_t best = 0;  // a contract no winning bid covers contributes 0
    for (bid_id b : ids)
      if (inst.bid_at(b).covers(t)) best = std::max(best, inst.bid_quality(b, t));
    total += best;
  }
  return total == 0 ? 0.0 : -static_cast<double>(total);
}

bool is_feasible(const instance& inst, std::span<const bid_id> winning) {
  const auto ids = checked_sorted_ids(inst, winning);
  std::vector<std::uint8_t> covered(static_cast<std::size_t>(inst.num_contracts()), 0);
  for (bid_id b : ids)
    for (contract_id t : inst.bid_at(b).bundle) covered[static_cast<std::size_t>(t)] = 1;
  return std::find(covered.begin(), covered.end(), 0) == covered.end();
}

solution::solution(const instance& inst)
    : inst_(&inst),
      in_winning_(static_cast<std::size_t>(inst.num_bids()), 0),
      cover_count_(static_cast<std::size_t>(inst.num_contracts()), 0),
      best_quality_(static_cast<std::size_t>(inst.num_contracts()), 0),
      uncovered_(inst.num_contracts()) {}

solution::solution(const instance& inst, std::span<const bid_id> winning) : solution(inst) {
  for (bid_id b : checked_sorted_ids(inst, winning)) add(b);
}

void solution::add(bid_id b) {
  const auto idx = static_cast<std::size_t>(b);
  assert(b >= 0 && idx < in_winning_.size());
  if (in_winning_[idx]) return;
  in_winning_[idx] = 1;
  winning_.insert(std::lower_bound(winning_.begin(), winning_.end(), b), b);
  const bid& bd = inst_->bid_at(b);
  bundle_size_sum_ += static_cast<std::int64_t>(bd.bundle.size());
  for (contract_id t : bd.bundle) {
    const auto ti = static_cast<std::size_t>(t);
    if (cover_count_[ti]++ == 0) --uncovered_;
    const std::int32_t q = inst_->bid_quality(b, t);
    if (q > best_quality_[ti]) {
      quality_sum_ += q - best_quality_[ti];
      best_quality_[ti] = q;
    }
  }
  f1_dirty_ = true;
}

void solution::remove(bid_id b) {
  const auto idx = static_cast<std::size_t>(b);
  assert(b >= 0 && idx < in_winning_.size());
  if (!in_winning_[idx]) return;
  in_winning_[idx] = 0;
  winning_.erase(std::lower_bound(winning_.begin(), winning_.end(), b));
  const bid& bd = inst_->bid_at(b);
  bundle_size_sum_ -= static_cast<std::int64_t>(bd.bundle.size());
  for (contract_id t : bd.bundle) {
    const auto ti = static_cast<std::size_t>(t);
    if (--cover_count_[ti] == 0) {
      ++uncovered_;
      quality_sum_ -= best_quality_[ti];
      best_quality_[ti] = 0;
    } else if (inst_->bid_quality(b, t) == best_quality_[ti]) {
      std::int32_t best = 0;
      for (bid_id w : winning_)
        if (inst_->bid_at(w).covers(t)) best = std::max(best, inst_->bid_quality(w, t));
      quality_sum_ += best - best_quality_[ti];
      best_quality_[ti] = best;
    }
  }
  f1_dirty_ = true;
}

double solution::f1() const {
  if (f1_dirty_) {
    double sum = 0.0;
    for (bid_id b : winning_) sum += inst_->bid_at(b).price;
    f1_cache_ = sum;
    f1_dirty_ = false;
  }
  return f1_cache_;
}

bool solution::caches_consistent() const {
  solution fresh(*inst_, winning_);
  return fresh.cover_count_ == cover_count_ && fresh.best_quality_ == best_quality_ &&
         fresh.uncovered_ == uncovered_ && fresh.quality_sum_ == quality_sum_ &&
         fresh.bundle_size_sum_ == bundle_size_sum_ && fresh.f1() == f1() && fresh.f2() == f2();
}

insert_outcome archive::insert(solution candidate, dominance mode) {
  if (!candidate.feasible())
    throw std::invalid_argument("archive rejects infeasible solutions");
  const objective_vector vec = candidate.objectives();
  for (const auto& e : entries_) {
    if (dominates(e.vec, vec, mode)) return insert_outcome::rejected;
    if (e.vec == vec) return insert_outcome::rejected;  // first-inserted wins on equal vectors
  }
  std::erase_if(entries_, [&](const archive_entry& e) { return strictly_dominates(vec, e.vec); });
  entries_.push_back(archive_entry{std::move(candidate), vec, 0, 0});
  return insert_outcome::accepted;
}

std::vector<objective_vector> archive::objective_vectors() const {
  std::vector<objective_vector> v;
  v.reserve(entries_.size());
  for (const auto& e : entries_) v.push_back(e.vec);
  std::sort(v.begin(), v.end(), [](const objective_vector& a, const objective_vector& b) {
    return a.f1 != b.f1 ? a.f1 < b.f1 : a.f2 < b.f2;
  });
  return v;
}

std::vector<objective_vector> non_dominated_subset(std::vector<objective_vector> vectors) {
  std::vector<objective_vector> front;
  for (const auto& v : vectors) {
    bool keep = true;
    for (const auto& f : front) {
      if (f == v || strictly_dominates(f, v)) {
        keep = false;
        break;
      }
    }
    if (!keep) continue;
    std::erase_if(front, [&](const objective_vector& f) { return strictly_dominates(v, f); });
    front.push_back(v);
  }
  std::sort(front.begin(), front.end(), [](const objective_vector& a, const objective_vector& b) {
    return a.f1 != b.f1 ? a.f1 < b.f1 : a.f2 < b.f2;
  });
  return front;
}

}  // namespace pns
