#pragma once

#include <cstdint>
#include <string>

#include "pns/model.hpp"

namespace pns {

// Synthetic instance configuration. Bundles are contiguous runs on a ring
// of contracts (lane synergy); prices follow a per-contract base cost with
// a size synergy discount, so bigger bundles get cheaper per contract and
// sub-bundles never look more expensive in expectation.
struct generator_config {
  std::int32_t contracts = 125;
  std::int32_t bids = 500;
  std::int32_t carriers = 25;
  std::int32_t bundle_min = 1;
  std::int32_t bundle_max = 8;
  double gamma = 0.7;  // synergy exponent in (0,1]; 1 disables the discount
  std::int32_t quality_min = 1;
  std::int32_t quality_max = 10;
  std::uint64_t seed = 1;
};
void validate(const generator_config& config);  // throws std::invalid_argument

// Deterministic for a given config. One singleton bid per contract is
// seeded first (ids 0..contracts-1), guaranteeing full coverage; the
// remaining bids are random ring-contiguous bundles with round-robin
// carriers.
instance generate_instance(const generator_config& config);

// Benchmark-style class label, e.g. 500 bids / 125 contracts -> "Aa".
// Sizes outside the named classes yield "T<contracts>B<bids>".
std::string instance_class_name(std::int32_t bids, std::int32_t contracts);

}  // namespace pns
