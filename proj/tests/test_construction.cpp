#include <stdexcept>
#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "pns/construction.hpp"
#include "pns/model.hpp"
#include "pns/oracle.hpp"

using namespace pns;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("rate_p averages cost over newly covered contracts") {
  std::vector<std::vector<std::int32_t>> quality = {{1}, {1}, {1}};
  std::vector<bid> bids;
  bids.push_back({0, 12.0, {0, 1, 2}});
  bids.push_back({0, 1.0, {0}});
  const instance inst(3, 1, std::move(quality), std::move(bids));

  solution covers_one(inst, std::vector<bid_id>{1});
  CHECK(rate_p(inst, 0, covers_one) == 6.0);  // 12 / |{1,2}|

  solution covers_all(inst, std::vector<bid_id>{0});
  CHECK(rate_p(inst, 1, covers_all) == kInf);
  CHECK(rate_p(inst, 0, covers_all) == kInf);  // bid already winning

  solution empty(inst);
  std::vector<std::vector<std::int32_t>> q2 = {{1}, {1}, {1}};
  std::vector<bid> b2;
  b2.push_back({0, 9.0, {0, 1, 2}});
  const instance inst2(3, 1, std::move(q2), std::move(b2));
  CHECK(rate_p(inst2, 0, solution(inst2)) == 3.0);
}

TEST_CASE("rate_q divides the quality increment by covered-contract slots") {
  // carrier 0 delivers quality 5 on contract 0; carrier 1 delivers 3 and 4
  std::vector<std::vector<std::int32_t>> quality = {{5, 3}, {1, 4}};
  std::vector<bid> bids;
  bids.push_back({0, 1.0, {0}});
  bids.push_back({1, 1.0, {0, 1}});
  const instance inst(2, 2, std::move(quality), std::move(bids));

  solution x(inst, std::vector<bid_id>{0});
  CHECK(rate_q(inst, 1, x) == doctest::Approx(-4.0 / 3.0));  // gain 4, slots 1+2

  solution empty(inst);
  CHECK(rate_q(inst, 0, empty) == -5.0);

  // a bid whose contracts are already covered at better quality adds nothing
  std::vector<std::vector<std::int32_t>> q2 = {{8, 2}};
  std::vector<bid> b2;
  b2.push_back({0, 1.0, {0}});
  b2.push_back({1, 1.0, {0}});
  const instance inst2(1, 2, std::move(q2), std::move(b2));
  solution covered(inst2, std::vector<bid_id>{0});
  CHECK(rate_q(inst2, 1, covered) == kInf);
  CHECK(rate_q(inst2, 0, solution(inst2)) == -8.0);
}

TEST_CASE("candidate list keeps exactly the non-dominated ratings") {
  const auto run = [](const std::vector<rating_vector>& ratings) {
    std::vector<candidate> list;
    for (std::size_t i = 0; i < ratings.size(); ++i)
      candidate_list_insert(list, {static_cast<bid_id>(i), ratings[i]});
    return list;
  };

  SUBCASE("five ratings, three survivors") {
    const auto list = run({{1, 5}, {2, 4}, {3, 3}, {2, 6}, {4, 4}});
    REQUIRE(list.size() == 3);
    std::set<bid_id> ids;
    for (const auto& c : list) ids.insert(c.id);
    CHECK(ids == std::set<bid_id>{0, 1, 2});
  }
  SUBCASE("seventeen ratings, ten survivors") {
    std::vector<rating_vector> ratings;
    for (int i = 1; i <= 10; ++i)
      ratings.push_back({static_cast<double>(i), static_cast<double>(11 - i)});
    const std::vector<rating_vector> dominated = {{5, 10}, {6, 9}, {7, 8}, {8, 7},
                                                  {9, 6},  {10, 5}, {11, 11}};
    ratings.insert(ratings.begin() + 3, dominated.begin(), dominated.end());
    REQUIRE(ratings.size() == 17);
    CHECK(run(ratings).size() == 10);
  }
  SUBCASE("equal ratings keep the first bid") {
    const auto list = run({{2, 2}, {2, 2}, {1, 3}});
    REQUIRE(list.size() == 2);
    CHECK(list[0].id == 0);
  }
}

TEST_CASE("gen_cand_list prunes bids that contribute nothing") {
  std::vector<std::vector<std::int32_t>> quality = {{5, 3}};
  std::vector<bid> bids;
  bids.push_back({0, 1.0, {0}});
  bids.push_back({1, 2.0, {0}});
  const instance inst(1, 2, std::move(quality), std::move(bids));

  solution x(inst, std::vector<bid_id>{0});
  std::vector<bid_id> pool = {0, 1};
  const auto candidates = gen_cand_list(inst, pool, x);
  CHECK(candidates.empty());                     // bid 1 neither covers nor improves
  CHECK(pool == std::vector<bid_id>{0});         // pruned permanently; bid 0 stays (it is in X)
}

TEST_CASE("gen_cand_list output is mutually non-dominated") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto inst = fixtures::small_random(seed, 8, 18);
    rng random(seed);
    auto partial = fixtures::random_feasible(inst, random);
    partial.remove(partial.winning().front());
    std::vector<bid_id> pool(static_cast<std::size_t>(inst.num_bids()));
    std::iota(pool.begin(), pool.end(), 0);
    const auto candidates = gen_cand_list(inst, pool, partial);
    for (const auto& a : candidates)
      for (const auto& b : candidates) {
        if (a.id == b.id) continue;
        CHECK_FALSE(strictly_dominates(a.rating, b.rating));
        CHECK_FALSE(a.rating == b.rating);
      }
  }
}

TEST_CASE("sector bounds partition the sorted candidate list") {
  SUBCASE("worked example: ten candidates, three sectors") {
    CHECK(sector_bounds(10, 3, 1) == std::pair<std::size_t, std::size_t>{0, 4});   // m1 = 4
    CHECK(sector_bounds(10, 3, 2) == std::pair<std::size_t, std::size_t>{4, 7});   // positions 5-7
    CHECK(sector_bounds(10, 3, 3) == std::pair<std::size_t, std::size_t>{7, 10});  // k mod s = 0
    CHECK(sector_bounds(10, 3, 4) == std::pair<std::size_t, std::size_t>{0, 4});
  }
  SUBCASE("sector count clamped to the list size") {
    CHECK(sector_bounds(2, 3, 1) == std::pair<std::size_t, std::size_t>{0, 1});
    CHECK(sector_bounds(2, 3, 2) == std::pair<std::size_t, std::size_t>{1, 2});
  }
  SUBCASE("partition property over many shapes") {
    for (std::size_t n = 1; n <= 40; ++n)
      for (std::int32_t s = 1; s <= 6; ++s) {
        std::size_t covered = 0;
        std::size_t first_size = 0;
        const auto s_eff = std::min<std::size_t>(static_cast<std::size_t>(s), n);
        std::size_t prev_end = 0;
        for (std::int64_t k = 1; k <= static_cast<std::int64_t>(s_eff); ++k) {
          const auto [lo, hi] = sector_bounds(n, s, k);
          REQUIRE(lo < hi);
          CHECK(lo == prev_end);  // contiguous runs of the sorted list
          prev_end = hi;
          if (k == 1)
            first_size = hi - lo;
          else
            CHECK(hi - lo <= first_size);  // leftovers always in the first sector
          covered += hi - lo;
        }
        CHECK(covered == n);
      }
  }
}

TEST_CASE("sel_cand_sector draws uniformly from the addressed sector") {
  std::vector<candidate> base;
  for (int i = 0; i < 10; ++i)
    base.push_back({static_cast<bid_id>(100 + i), {static_cast<double>(i), 0.0}});
  rng random(21);
  std::set<bid_id> seen;
  for (int draw = 0; draw < 200; ++draw) {
    auto candidates = base;
    const bid_id picked = sel_cand_sector(candidates, 2, 3, random);
    CHECK(picked >= 104);
    CHECK(picked <= 106);
    seen.insert(picked);
  }
  CHECK(seen.size() == 3);

  SUBCASE("ties in the P rating break by Q rating then id") {
    std::vector<candidate> ties = {{9, {1.0, -2.0}}, {4, {1.0, -5.0}}, {2, {1.0, -5.0}}};
    rng r2(1);
    // single sector of size 1 when s is clamped: k=1 addresses the first position
    const bid_id first = sel_cand_sector(ties, 1, 3, r2);
    CHECK(first == 2);  // (1,-5) sorts first; id 2 beats id 4
  }
  SUBCASE("empty list refused") {
    std::vector<candidate> none;
    rng r3(1);
    CHECK_THROWS_AS(sel_cand_sector(none, 1, 3, r3), std::invalid_argument);
  }
}

TEST_CASE("drc_run finds the front of a single-point instance") {
  const auto inst = fixtures::single_point_front();
  rng random(17);
  const auto a = drc_run(inst, {.sectors = 3, .l_max = 5, .rng_seed = 17}, random);
  REQUIRE(a.size() == 1);
  CHECK(a[0].vec == objective_vector{5.0, -18.0});
  const auto front = enumerate_front(inst);
  CHECK(a.objective_vectors() == front.vectors);
}

TEST_CASE("drc_run discovers both points of the two-point front") {
  const auto inst = fixtures::two_point_front();
  rng random(4);
  const auto a = drc_run(inst, {.sectors = 3, .l_max = 50, .rng_seed = 4}, random);
  CHECK(a.objective_vectors() ==
        std::vector<objective_vector>{{10.0, -6.0}, {12.0, -10.0}});
}

TEST_CASE("drc_run with l_max = 1 keeps exactly the first construction") {
  const auto inst = fixtures::two_point_front();
  rng random(9);
  const auto a = drc_run(inst, {.sectors = 3, .l_max = 1, .rng_seed = 9}, random);
  CHECK(a.size() == 1);
}

TEST_CASE("drc_run emits feasible solutions and is deterministic") {
  const auto inst = fixtures::small_random(31, 7, 16);
  const drc_params params{.sectors = 3, .l_max = 20, .rng_seed = 31};
  rng r1(params.rng_seed), r2(params.rng_seed);
  const auto a = drc_run(inst, params, r1);
  const auto b = drc_run(inst, params, r2);
  CHECK(a.objective_vectors() == b.objective_vectors());
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(is_feasible(inst, a[i].sol.winning()));
    CHECK(a[i].sol.winning() == b[i].sol.winning());
  }
}

TEST_CASE("pool pruning is sound within one construction") {
  const auto inst = fixtures::small_random(53, 8, 18);
  rng random(53);
  for (int construction = 0; construction < 25; ++construction) {
    solution x(inst);
    std::vector<bid_id> pool(static_cast<std::size_t>(inst.num_bids()));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<bid_id> pruned;
    while (!x.feasible()) {
      const auto before = pool;
      auto candidates = gen_cand_list(inst, pool, x);
      for (bid_id b : before)
        if (!std::binary_search(pool.begin(), pool.end(), b)) pruned.push_back(b);
      // once pruned, a bid must stay worthless for the rest of this construction
      for (bid_id b : pruned) {
        CHECK(rate_p(inst, b, x) == kInf);
        CHECK(rate_q(inst, b, x) == kInf);
      }
      REQUIRE_FALSE(candidates.empty());
      x.add(sel_cand_sector(candidates, construction + 1, 3, random));
    }
  }
}
