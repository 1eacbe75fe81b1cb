#include "helpers.hpp"

using namespace pmx;
using namespace pmx::testing;

TEST_CASE("discrete derivatives of the quadratic family") {
  const CostFunction sq = square_of_sum();  // (x+t)^2
  CHECK(sq.left_derivative(2, 0) == ExactValue(3));
  CHECK(sq.right_derivative(1, 0) == ExactValue(3));
  CHECK_THROWS_AS(sq.left_derivative(0, 0), DomainError);
}

TEST_CASE("reciprocal capacity family") {
  const CostFunction c = CostFunction::mm1(3);
  CHECK(c.value(1, 1) == ExactValue(1));
  CHECK(c.value(2, 1).is_infinite());
  CHECK(c.right_derivative(1, 0) == ExactValue::fraction(1, 2));  // 1 - 1/2
  CHECK(c.right_derivative(2, 0).is_infinite());
  CHECK(c.left_derivative(3, 1).is_infinite());  // fully saturated
  CHECK_THROWS_AS(CostFunction::mm1(0), InputError);
}

TEST_CASE("the two right/left derivative views agree") {
  const std::vector<CostFunction> costs = {
      square_of_sum(),
      square_of_usage(),
      CostFunction::mm1(4),
      CostFunction::scaled_congestion(UsageCost::poly({ExactValue(0), ExactValue(1)})),
      CostFunction::polynomial({ExactValue(0), ExactValue(1)},
                               {ExactValue(0), ExactValue(0), ExactValue::fraction(1, 2)}),
  };
  for (const auto& c : costs)
    for (std::int64_t x = 0; x <= 3; ++x)
      for (std::int64_t t = 0; t <= 3; ++t)
        CHECK(c.right_derivative(x, t) == c.left_derivative(x + 1, t));
}

TEST_CASE("congestion families evaluate their closed forms") {
  const CostFunction lin = CostFunction::scaled_congestion(UsageCost::poly({ExactValue(0), ExactValue(1)}));
  CHECK(lin.value(2, 1) == ExactValue(6));  // c(3) * 2
  CHECK(lin.value(0, 5).is_zero());

  const CostFunction bin =
      CostFunction::matroid_binary(UsageCost::affine_clamp(ExactValue(3), ExactValue(3)));
  CHECK(bin.value(1, 1) == ExactValue(3));  // max(0, 3*2-3)
  CHECK(bin.value(0, 7).is_zero());
  CHECK_THROWS_AS(bin.value(2, 0), DomainError);

  CHECK_THROWS_AS(
      CostFunction::scaled_congestion(UsageCost::poly({ExactValue(1), ExactValue(-1)})),
      InputError);
}

TEST_CASE("regularity of the built-in families") {
  CHECK(is_regular(CostFunction::mm1(1), 4, 5));
  CHECK(is_regular(CostFunction::mm1(4), 4, 5));
  CHECK(is_regular(CostFunction::scaled_congestion(
                       UsageCost::poly({ExactValue(0), ExactValue(1), ExactValue(1)})),
                   4, 5));
  CHECK(is_regular(CostFunction::matroid_binary(UsageCost::affine_clamp(ExactValue(2), ExactValue(2))),
                   3, 5));
  CHECK(is_regular(square_of_usage(), 4, 5));
}

TEST_CASE("a parameter bump that beats the argument bump is caught") {
  // C(1;1) - C(0;1) = 3 > 1 = C(2;0) - C(1;0).
  const CostFunction bad = CostFunction::custom_table(
      2, 1,
      {ExactValue(0), ExactValue(0), ExactValue(1), ExactValue(3), ExactValue(2), ExactValue(6)});
  const auto witness = find_regularity_violation(bad, 1, 0);
  REQUIRE(witness.has_value());
  CHECK(witness->x == 1);
  CHECK(witness->t == 0);
  CHECK(witness->condition == RegularityWitness::Condition::ShiftDominance);
}

TEST_CASE("regular implies discrete convex on the same box") {
  Rng rng(5);
  int regular_seen = 0;
  for (int i = 0; i < 60; ++i) {
    const CostFunction c = random_regular_cost(rng, true);
    if (is_regular(c, 4, 5)) {
      ++regular_seen;
      CHECK(is_discrete_convex(c, 4, 5));
    }
  }
  CHECK(regular_seen == 60);  // every built-in family is regular by construction

  CHECK(is_discrete_convex(square_of_usage(), 5, 2));
  // A concave three-point profile fails.
  const CostFunction concave = CostFunction::custom_table(
      2, 0, {ExactValue(0), ExactValue(10), ExactValue(12)});
  CHECK_FALSE(is_discrete_convex(concave, 1, 0));
}

TEST_CASE("custom tables are bounded and exact") {
  const CostFunction table =
      CostFunction::custom_table(1, 1, {ExactValue(0), ExactValue::fraction(1, 2),
                                        ExactValue(1), ExactValue::infinity()});
  CHECK(table.value(0, 1) == ExactValue::fraction(1, 2));
  CHECK(table.value(1, 1).is_infinite());
  CHECK_THROWS_AS(table.value(2, 0), DomainError);
}
