#include "pns/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pns {

namespace {

struct front_entry {
  objective_vector vec;
  std::vector<bid_id> witness;
};

bool better_witness(const std::vector<bid_id>& a, const std::vector<bid_id>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

exact_front enumerate_front(const instance& inst, std::int32_t bid_limit) {
  const std::int32_t n = inst.num_bids();
  if (n > bid_limit || n > 62)
    throw std::invalid_argument("enumerate_front: instance has " + std::to_string(n) +
                                " bids, above the exhaustive-scan limit of " +
                                std::to_string(std::min(bid_limit, 62)));

  const std::size_t words = (static_cast<std::size_t>(inst.num_contracts()) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> masks(static_cast<std::size_t>(n),
                                                std::vector<std::uint64_t>(words, 0));
  for (std::int32_t b = 0; b < n; ++b)
    for (contract_id t : inst.bid_at(b).bundle)
      masks[static_cast<std::size_t>(b)][static_cast<std::size_t>(t) / 64] |=
          std::uint64_t{1} << (static_cast<std::size_t>(t) % 64);
  std::vector<std::uint64_t> full(words, 0);
  for (std::int32_t t = 0; t < inst.num_contracts(); ++t)
    full[static_cast<std::size_t>(t) / 64] |= std::uint64_t{1}
                                              << (static_cast<std::size_t>(t) % 64);

  std::vector<front_entry> front;
  std::vector<std::uint64_t> covered(words);
  std::vector<bid_id> ids;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t subset = 1; subset < subsets; ++subset) {
    std::fill(covered.begin(), covered.end(), 0);
    ids.clear();
    for (std::int32_t b = 0; b < n; ++b) {
      if (!(subset >> b & 1)) continue;
      ids.push_back(b);
      const auto& m = masks[static_cast<std::size_t>(b)];
      for (std::size_t w = 0; w < words; ++w) covered[w] |= m[w];
    }
    if (covered != full) continue;

    double cost = 0.0;
    for (bid_id b : ids) cost += inst.bid_at(b).price;
    std::int64_t quality = 0;
    for (contract_id t = 0; t < inst.num_contracts(); ++t) {
      std::int32_t best = 0;
      for (bid_id b : ids)
        if (inst.bid_at(b).covers(t)) best = std::max(best, inst.bid_quality(b, t));
      quality += best;
    }
    const objective_vector vec{cost, -static_cast<double>(quality)};

    bool keep = true;
    for (auto& e : front) {
      if (e.vec == vec) {
        if (better_witness(ids, e.witness)) e.witness = ids;
        keep = false;
        break;
      }
      if (strictly_dominates(e.vec, vec)) {
        keep = false;
        break;
      }
    }
    if (!keep) continue;
    std::erase_if(front, [&](const front_entry& e) { return strictly_dominates(vec, e.vec); });
    front.push_back({vec, ids});
  }

  std::sort(front.begin(), front.end(), [](const front_entry& a, const front_entry& b) {
    return a.vec.f1 != b.vec.f1 ? a.vec.f1 < b.vec.f1 : a.vec.f2 < b.vec.f2;
  });
  exact_front result;
  result.vectors.reserve(front.size());
  result.witnesses.reserve(front.size());
  for (auto& e : front) {
    result.vectors.push_back(e.vec);
    result.witnesses.push_back(std::move(e.witness));
  }
  return result;
}

}  // namespace pns
