#include <stdexcept>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "pns/indicators.hpp"
#include "pns/rng.hpp"

using namespace pns;

namespace {

// Independent area oracle: uniform samples over the unit box, counting
// points weakly dominated by some front member.
double hypervolume_monte_carlo(const std::vector<objective_vector>& front, int samples,
                               std::uint64_t seed) {
  rng random(seed);
  int dominated = 0;
  for (int i = 0; i < samples; ++i) {
    const objective_vector u{random.uniform01(), random.uniform01()};
    for (const auto& p : front) {
      if (p.f1 <= u.f1 && p.f2 <= u.f2) {
        ++dominated;
        break;
      }
    }
  }
  return static_cast<double>(dominated) / samples;
}

std::vector<objective_vector> random_front(rng& random, int max_points) {
  std::vector<objective_vector> pts;
  const int n = static_cast<int>(random.uniform_int(1, max_points));
  for (int i = 0; i < n; ++i) pts.push_back({random.uniform01(), random.uniform01()});
  return non_dominated_subset(std::move(pts));
}

}  // namespace

TEST_CASE("normalize maps the anchors onto the unit box") {
  const normalization_bounds bounds{100.0, 0.0, 0.0, -51.0};  // f1(B)=100, f2(B)=-50
  CHECK(normalize(bounds, {40.0, -30.0}) == objective_vector{0.4, 21.0 / 51.0});
  CHECK(normalize(bounds, {0.0, -50.0}) == objective_vector{0.0, 1.0 / 51.0});
  CHECK(normalize(bounds, {100.0, 0.0}) == objective_vector{1.0, 1.0});

  CHECK_THROWS_AS(normalize({0.0, 0.0, 0.0, -1.0}, {1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(normalize({1.0, -1.0, 0.0, -1.0}, {1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("hypervolume sweep on normalized points") {
  const std::vector<objective_vector> two = {{0.2, 0.6}, {0.5, 0.3}};
  CHECK(hypervolume_normalized(two) == doctest::Approx(0.47).epsilon(1e-12));

  CHECK(hypervolume_normalized(std::vector<objective_vector>{{1.0, 1.0}}) == 0.0);
  CHECK(hypervolume_normalized(std::vector<objective_vector>{{0.0, 0.0}}) == 1.0);
  CHECK(hypervolume_normalized(std::vector<objective_vector>{}) == 0.0);

  SUBCASE("monte carlo cross-check of the worked example") {
    const double mc = hypervolume_monte_carlo(two, 1000000, 9001);
    CHECK(std::abs(mc - 0.47) < 1e-3);
  }
  SUBCASE("dominated inputs do not change the area") {
    const std::vector<objective_vector> redundant = {{0.2, 0.6}, {0.5, 0.3}, {0.6, 0.7}};
    CHECK(hypervolume_normalized(redundant) == doctest::Approx(0.47).epsilon(1e-12));
  }
  SUBCASE("points beyond the reference corner are clipped or rejected") {
    const std::vector<objective_vector> outside = {{1.2, 0.5}, {0.5, 0.3}};
    CHECK(hypervolume_normalized(outside) ==
          doctest::Approx(0.5 * 0.7).epsilon(1e-12));
    CHECK_THROWS_AS(hypervolume_normalized(outside, true), std::domain_error);
  }
}

TEST_CASE("hypervolume via instance bounds") {
  const normalization_bounds bounds{10.0, 0.0, 0.0, -10.0};
  // raw (2,-4) -> (0.2, 0.6); raw (5,-7) -> (0.5, 0.3)
  const std::vector<objective_vector> raw = {{2.0, -4.0}, {5.0, -7.0}};
  CHECK(hypervolume(bounds, raw) == doctest::Approx(0.47).epsilon(1e-12));
}

TEST_CASE("hypervolume strictly grows when a non-dominated point arrives") {
  rng random(33);
  for (int round = 0; round < 50; ++round) {
    auto front = random_front(random, 30);
    const double before = hypervolume_normalized(front);
    const objective_vector candidate{random.uniform01(), random.uniform01()};
    bool weakly_dominated = false;
    for (const auto& p : front)
      if (weakly_dominates(p, candidate)) {
        weakly_dominated = true;
        break;
      }
    front.push_back(candidate);
    const double after = hypervolume_normalized(front);
    if (weakly_dominated) {
      CHECK(after == doctest::Approx(before).epsilon(1e-12));
    } else if (candidate.f1 < 1.0 && candidate.f2 < 1.0) {
      CHECK(after > before);
    }
  }
}

TEST_CASE("hypervolume sweep agrees with monte carlo on random fronts") {
  rng random(77);
  for (int round = 0; round < 5; ++round) {
    const auto front = random_front(random, 50);
    const int samples = 100000;
    const double sweep = hypervolume_normalized(front);
    const double mc = hypervolume_monte_carlo(front, samples,
                                              1000 + static_cast<std::uint64_t>(round));
    const double sigma = std::sqrt(std::max(sweep * (1.0 - sweep), 1e-6) / samples);
    CHECK(std::abs(sweep - mc) < 3.0 * sigma + 1e-9);
  }
}

TEST_CASE("epsilon indicator") {
  const std::vector<objective_vector> a = {{2, 4}};
  const std::vector<objective_vector> ab = {{2, 4}, {4, 2}};
  CHECK(epsilon_binary(a, a) == 1.0);
  CHECK(epsilon_binary(a, ab) == 2.0);
  CHECK(epsilon_binary(std::vector<objective_vector>{{1, 1}},
                       std::vector<objective_vector>{{2, 2}}) == 0.5);

  CHECK_THROWS_AS(epsilon_binary({}, a), std::invalid_argument);
  CHECK_THROWS_AS(epsilon_binary(a, std::vector<objective_vector>{{0.0, 1.0}}),
                  std::domain_error);
  CHECK_THROWS_AS(epsilon_binary(std::vector<objective_vector>{{-1.0, 1.0}}, a),
                  std::domain_error);
}

TEST_CASE("unary epsilon against a reference set") {
  const std::vector<objective_vector> reference = {{1, 4}, {2, 2}, {4, 1}};
  CHECK(epsilon_unary(reference, reference) == 1.0);
  CHECK(epsilon_unary(std::vector<objective_vector>{{2, 4}},
                      std::vector<objective_vector>{{2, 4}, {4, 2}}) == 2.0);

  // drop one extreme of the three-point reference; exhaustive ratio scan
  const std::vector<objective_vector> missing_extreme = {{2, 2}, {4, 1}};
  double expected = 0.0;
  for (const auto& b : reference) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : missing_extreme)
      best = std::min(best, std::max(p.f1 / b.f1, p.f2 / b.f2));
    expected = std::max(expected, best);
  }
  CHECK(expected == 2.0);
  CHECK(epsilon_unary(missing_extreme, reference) == expected);
}

TEST_CASE("unary epsilon is at least one for contributors to the union") {
  rng random(55);
  for (int round = 0; round < 40; ++round) {
    std::vector<objective_vector> a, b;
    for (int i = 0; i < 8; ++i) {
      a.push_back({0.1 + random.uniform01(), 0.1 + random.uniform01()});
      b.push_back({0.1 + random.uniform01(), 0.1 + random.uniform01()});
    }
    a = non_dominated_subset(std::move(a));
    b = non_dominated_subset(std::move(b));
    const std::vector<std::vector<objective_vector>> sets = {a, b};
    const auto reference = reference_union(sets);
    CHECK(epsilon_unary(a, reference) >= 1.0);
    CHECK(epsilon_unary(b, reference) >= 1.0);
    CHECK(epsilon_binary(a, a) == 1.0);
  }
}

TEST_CASE("coverage counts weakly dominated points") {
  const std::vector<objective_vector> a = {{1, 1}};
  const std::vector<objective_vector> b = {{2, 2}, {0, 3}};
  CHECK(coverage(a, b) == 0.5);
  CHECK(coverage(b, b) == 1.0);
  CHECK(coverage(std::vector<objective_vector>{{5, 5}}, b) == 0.0);
  CHECK_THROWS_AS(coverage(a, {}), std::invalid_argument);

  SUBCASE("coverage is not symmetric") {
    const std::vector<objective_vector> strong = {{1, 3}, {3, 1}};
    const std::vector<objective_vector> weak = {{2, 4}, {4, 2}};
    CHECK(coverage(strong, weak) == 1.0);
    CHECK(coverage(weak, strong) == 0.0);
  }
}

TEST_CASE("reference union merges and filters") {
  using set = std::vector<objective_vector>;
  const auto make = [](std::vector<set> sets) {
    return reference_union(std::span<const set>(sets));
  };
  CHECK(make({{{1, 3}}, {{3, 1}}}) == set{{1, 3}, {3, 1}});
  CHECK(make({{{1, 3}}, {{2, 4}}}) == set{{1, 3}});
  CHECK(make({{{1, 3}}, {{1, 3}}}) == set{{1, 3}});
  CHECK_THROWS_AS(make({}), std::invalid_argument);
}

TEST_CASE("normalize_shifted produces strictly positive coordinates") {
  const normalization_bounds bounds{100.0, 0.0, 0.0, -51.0};
  const std::vector<objective_vector> raw = {{0.0, -50.0}, {100.0, 0.0}};
  const auto shifted = normalize_shifted(bounds, raw);
  for (const auto& p : shifted) {
    CHECK(p.f1 > 0.0);
    CHECK(p.f2 > 0.0);
  }
  CHECK_NOTHROW(epsilon_binary(shifted, shifted));
}

TEST_CASE("indicator report serializes to a CSV row") {
  indicator_report r;
  r.instance_id = "Aa_s1";
  r.algorithm = "pns";
  r.seed = 7;
  r.i_hv = 0.5;
  r.i_eps = 1.25;
  r.i_c = 1.0;
  r.set_size = 12;
  r.wall_time_s = 2.5;
  CHECK(indicator_report::csv_header() ==
        "instance,algorithm,seed,i_hv,i_eps,i_c,set_size,wall_time_s");
  CHECK(r.csv_row() == "Aa_s1,pns,7,0.5,1.25,1,12,2.5");
}
