#include "pns/generator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pns/rng.hpp"

namespace pns {

void validate(const generator_config& config) {
  if (config.contracts < 1) throw std::invalid_argument("generator: contracts must be >= 1");
  if (config.carriers < 1) throw std::invalid_argument("generator: carriers must be >= 1");
  if (config.bids < config.contracts)
    throw std::invalid_argument(
        "generator: need at least one bid per contract to guarantee coverage");
  if (config.bundle_min < 1 || config.bundle_max < config.bundle_min ||
      config.bundle_max > config.contracts)
    throw std::invalid_argument("generator: bundle size range must satisfy 1 <= min <= max <= contracts");
  if (!(config.gamma > 0.0) || config.gamma > 1.0)
    throw std::invalid_argument("generator: gamma must lie in (0, 1]");
  if (config.quality_min < 1 || config.quality_max < config.quality_min)
    throw std::invalid_argument("generator: quality range must satisfy 1 <= min <= max");
}

instance generate_instance(const generator_config& config) {
  validate(config);
  rng random(config.seed);

  std::vector<std::vector<std::int32_t>> quality(
      static_cast<std::size_t>(config.contracts),
      std::vector<std::int32_t>(static_cast<std::size_t>(config.carriers)));
  for (auto& row : quality)
    for (auto& q : row)
      q = static_cast<std::int32_t>(random.uniform_int(config.quality_min, config.quality_max));

  std::vector<double> base_cost(static_cast<std::size_t>(config.contracts));
  for (auto& c : base_cost) c = 20.0 + 80.0 * random.uniform01();

  const auto priced = [&](const std::vector<contract_id>& bundle) {
    double base = 0.0;
    for (contract_id t : bundle) base += base_cost[static_cast<std::size_t>(t)];
    const double synergy =
        std::pow(static_cast<double>(bundle.size()), config.gamma - 1.0);
    const double noise = 0.9 + 0.2 * random.uniform01();
    return base * synergy * noise;
  };

  std::vector<bid> bids;
  bids.reserve(static_cast<std::size_t>(config.bids));
  for (contract_id t = 0; t < config.contracts; ++t) {
    bid b;
    b.carrier = static_cast<carrier_id>(random.uniform_index(
        static_cast<std::size_t>(config.carriers)));
    b.bundle = {t};
    b.price = priced(b.bundle);
    bids.push_back(std::move(b));
  }
  for (std::int32_t i = config.contracts; i < config.bids; ++i) {
    bid b;
    b.carrier = static_cast<carrier_id>((i - config.contracts) % config.carriers);
    const auto size = static_cast<std::int32_t>(
        random.uniform_int(config.bundle_min, config.bundle_max));
    const auto start = static_cast<contract_id>(
        random.uniform_index(static_cast<std::size_t>(config.contracts)));
    b.bundle.reserve(static_cast<std::size_t>(size));
    for (std::int32_t off = 0; off < size; ++off)
      b.bundle.push_back(static_cast<contract_id>((start + off) % config.contracts));
    std::sort(b.bundle.begin(), b.bundle.end());
    b.price = priced(b.bundle);
    bids.push_back(std::move(b));
  }

  return instance(config.contracts, config.carriers, std::move(quality), std::move(bids));
}

std::string instance_class_name(std::int32_t bids, std::int32_t contracts) {
  std::string name;
  if (bids == 500) name += 'A';
  else if (bids == 1000) name += 'B';
  else if (bids == 2000) name += 'C';
  if (contracts == 125) name += 'a';
  else if (contracts == 250) name += 'b';
  else if (contracts == 500) name += 'c';
  if (name.size() == 2) return name;
  return "T" + std::to_string(contracts) + "B" + std::to_string(bids);
}

}  // namespace pns
