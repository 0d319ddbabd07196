#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pns/model.hpp"

namespace pns {

// Normalization anchors: the reference point (r1, r2) is the objective
// vector of the all-bids solution paired with zero quality, and the lower
// anchors map the unit box. Derived once per instance.
struct normalization_bounds {
  double r1 = 1.0;      // f1 of the all-bids solution
  double r2 = 0.0;      // reference quality level
  double f1_min = 0.0;
  double f2_min = -1.0;  // f2 of the all-bids solution minus one

  static normalization_bounds from_instance(const instance& inst);
};
void validate(const normalization_bounds& bounds);  // throws std::invalid_argument

// Affine map sending (f1_min, f2_min) to (0,0) and (r1, r2) to (1,1).
objective_vector normalize(const normalization_bounds& bounds, const objective_vector& point);

// Area of the normalized objective subspace weakly dominated by the points
// and bounded by (1,1). Points at or beyond the reference corner contribute
// nothing; with strict=true they raise std::domain_error instead. Result is
// in [0,1]; the empty set has hypervolume 0.
double hypervolume_normalized(std::span<const objective_vector> normalized_points,
                              bool strict = false);
double hypervolume(const normalization_bounds& bounds, std::span<const objective_vector> set,
                   bool strict = false);

// Multiplicative binary epsilon indicator: the smallest factor by which
// every point of b must be scaled so that some point of a epsilon-dominates
// it. Requires strictly positive coordinates (std::domain_error otherwise)
// and non-empty sets (std::invalid_argument).
double epsilon_binary(std::span<const objective_vector> a, std::span<const objective_vector> b);

// Unary epsilon against a reference set containing no point strictly
// dominated by `a`; >= 1 whenever `a` contributed to the reference union.
double epsilon_unary(std::span<const objective_vector> a,
                     std::span<const objective_vector> reference);

// Fraction of b weakly dominated by at least one point of a. b must be
// non-empty.
double coverage(std::span<const objective_vector> a, std::span<const objective_vector> b);

// Union of the given sets with duplicates collapsed and strictly dominated
// vectors removed; sorted by (f1, f2).
std::vector<objective_vector> reference_union(
    std::span<const std::vector<objective_vector>> sets);

// Normalizes every point and shifts both coordinates by delta, yielding the
// strictly positive representation the epsilon indicator is evaluated on.
std::vector<objective_vector> normalize_shifted(const normalization_bounds& bounds,
                                                std::span<const objective_vector> set,
                                                double delta = 1e-9);

// One row of the indicator CSV emitted by the evaluation harness.
struct indicator_report {
  std::string instance_id;
  std::string algorithm;
  std::uint64_t seed = 0;
  double i_hv = 0.0;
  double i_eps = 0.0;
  double i_c = 0.0;
  std::size_t set_size = 0;
  double wall_time_s = 0.0;

  static std::string csv_header();
  std::string csv_row() const;
};

}  // namespace pns
