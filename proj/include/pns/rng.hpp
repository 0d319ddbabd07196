#pragma once

#include <cassert>
#include <cstdint>
#include <random>

namespace pns {

// Deterministic random stream used by every stochastic component.
//
// std::mt19937_64 output is pinned by the standard; the bounded draws below
// avoid std::uniform_int_distribution, whose mapping is implementation
// defined, so identical seeds give identical streams on every platform.
class rng {
 public:
  explicit rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi], both ends inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    assert(lo <= hi);
    const auto range = static_cast<std::uint64_t>(hi - lo) + 1u;
    return lo + static_cast<std::int64_t>(engine_() % range);
  }

  // Uniform index in [0, n); n must be positive.
  std::size_t uniform_index(std::size_t n) {
    assert(n > 0);
    return static_cast<std::size_t>(engine_() % n);
  }

  // Uniform double in [0, 1).
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pns
