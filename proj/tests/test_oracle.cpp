#include "helpers.hpp"

using namespace pmx;
using namespace pmx::testing;

TEST_CASE("enumeration fixtures") {
  const auto uniform = enumerate_base(BasePolytope{uniform_rank(2, 8), 2}, {});
  REQUIRE(uniform.size() == 3);
  CHECK(uniform[0] == alloc({0, 2}));
  CHECK(uniform[1] == alloc({1, 1}));
  CHECK(uniform[2] == alloc({2, 0}));

  const auto k3 = enumerate_base(BasePolytope{k3_rank(), 2}, {});
  REQUIRE(k3.size() == 3);
  for (const auto& x : k3) {
    CHECK(x.total() == 2);
    CHECK(popcount(x.support()) == 2);
  }

  CHECK(enumerate_base(BasePolytope{k3_rank(), 3}, {}).empty());
}

TEST_CASE("enumeration equals a plain grid scan on small instances") {
  Rng rng(21);
  for (int round = 0; round < 25; ++round) {
    const int m = static_cast<int>(rng.range(2, 4));
    const auto f = random_submodular_rank(rng, GroundSet::indexed(m));
    const std::int64_t d = rng.range(0, 4);
    const BasePolytope b{f, d};
    const auto fast = enumerate_base(b, {});

    std::vector<Allocation> grid;
    std::vector<std::int64_t> v(m, 0);
    for (;;) {
      Allocation x(v);
      if (x.total() == d && member(b, x)) grid.push_back(x);
      int e = m - 1;
      while (e >= 0 && ++v[e] > d) v[e--] = 0;
      if (e < 0) break;
    }
    CHECK(fast.size() == grid.size());
    for (std::size_t i = 0; i < std::min(fast.size(), grid.size()); ++i)
      CHECK(fast[i] == grid[i]);
    for (const auto& x : fast) CHECK(member(b, x));
  }
}

TEST_CASE("budgets abort cleanly") {
  EnumerationBudget tight;
  tight.max_ground = 2;
  CHECK_THROWS_AS(enumerate_base(BasePolytope{k3_rank(), 2}, tight), CapacityError);
  tight = {};
  tight.max_demand = 1;
  CHECK_THROWS_AS(enumerate_base(BasePolytope{k3_rank(), 2}, tight), CapacityError);
  tight = {};
  tight.max_points = 2;
  CHECK_THROWS_AS(enumerate_base(BasePolytope{uniform_rank(3, 9), 6}, tight), CapacityError);
}

TEST_CASE("brute optimum takes the lexicographically smallest tie") {
  // Linear symmetric costs: every point of the uniform rank-2 region costs 2.
  const CostFunction lin = CostFunction::polynomial({}, {ExactValue(0), ExactValue(1)});
  const ProblemInstance p(BasePolytope{uniform_rank(2, 8), 2}, {0, 0}, {lin, lin});
  const BruteOptimum best = brute_optimum(p, {});
  CHECK(best.x == alloc({0, 2}));
  CHECK(best.value == ExactValue(2));

  const ProblemInstance squares = two_element_square_instance(2);
  const BruteOptimum unique = brute_optimum(squares, {});
  CHECK(unique.x == alloc({1, 1}));
  CHECK(unique.value == ExactValue(2));

  const ProblemInstance capped(BasePolytope{uniform_rank(2, 3), 5}, {0, 0},
                               {square_of_usage(), square_of_usage()});
  CHECK_THROWS_AS(brute_optimum(capped, {}), InfeasibleError);
}

TEST_CASE("equilibrium search certifies the zero-demand game") {
  const GroundSet r = GroundSet::indexed(2);
  const Game g = singleton_integer_splittable_game(
      r, {{"p0", 0b11, 0}, {"p1", 0b11, 0}},
      {UsageCost::poly({ExactValue(0), ExactValue(1)}),
       UsageCost::poly({ExactValue(0), ExactValue(1)})});
  const auto found = brute_pne(g, {});
  REQUIRE(found.has_value());
  CHECK((*found)[0].total() == 0);
  CHECK((*found)[1].total() == 0);
}
