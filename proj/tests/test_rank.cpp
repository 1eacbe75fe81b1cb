#include "helpers.hpp"

using namespace pmx;
using namespace pmx::testing;

namespace {

// Fixed monotone table on 4 elements for the exhaustive composite checks.
RankFunction sample_table() {
  std::vector<std::int64_t> t(16, 0);
  for (SubsetMask u = 1; u < 16; ++u) t[u] = popcount(u) + (u & 1);
  return RankFunction::explicit_table(GroundSet::indexed(4), std::move(t));
}

}  // namespace

TEST_CASE("evaluation fixtures") {
  CHECK(sample_table().value(0) == 0);

  const RankFunction k3 = k3_rank();
  CHECK(k3.value(full_mask(3)) == 2);  // the whole triangle
  CHECK(k3.value(0b011) == 2);         // two adjacent edges
  CHECK(k3.value(0b001) == 1);

  const RankFunction path = RankFunction::graphic_matroid(GroundSet::indexed(3), 4,
                                                          {{0, 1}, {1, 2}, {2, 3}});
  CHECK(path.value(full_mask(3)) == 3);

  const GroundSet abc({"a", "b", "c"});
  const RankFunction cover = RankFunction::singleton_cover(abc, 0b011, 4);
  CHECK(cover.value(0b001) == 4);
  CHECK(cover.value(0b100) == 0);
}

TEST_CASE("truncation is a pointwise minimum and preserves structure") {
  const RankFunction k3x3 = RankFunction::scaled(k3_rank(), 3);
  const RankFunction cut = RankFunction::truncated(k3x3, 2);
  CHECK(cut.value(0b001) == 2);  // min(2, 3)

  const RankFunction zero = RankFunction::truncated(k3x3, 0);
  for (SubsetMask u = 0; u <= full_mask(3); ++u) CHECK(zero.value(u) == 0);

  const RankFunction f = sample_table();
  const RankFunction f3 = RankFunction::truncated(f, 3);
  for (SubsetMask u = 0; u < 16; ++u) CHECK(f3.value(u) == std::min<std::int64_t>(3, f.value(u)));

  CHECK(is_submodular(RankFunction::truncated(k3_rank(), 1)));
  CHECK(is_monotone_normalized(cut));
}

TEST_CASE("scaling multiplies every value") {
  const RankFunction f = sample_table();
  CHECK(RankFunction::scaled(f, 1).value(13) == f.value(13));
  CHECK(RankFunction::scaled(k3_rank(), 2).value(0b100) == 2);
  const RankFunction f3 = RankFunction::scaled(f, 3);
  for (SubsetMask u = 0; u < 16; ++u) CHECK(f3.value(u) == 3 * f.value(u));
  CHECK_THROWS_AS(RankFunction::scaled(f, 0), InputError);
}

TEST_CASE("composite laws hold pointwise") {
  const RankFunction f = sample_table();
  const RankFunction t2 = RankFunction::truncated(f, 2);
  const RankFunction t2_then_4 = RankFunction::truncated(t2, 4);
  for (SubsetMask u = 0; u < 16; ++u) CHECK(t2_then_4.value(u) == t2.value(u));

  const RankFunction s6 = RankFunction::scaled(RankFunction::scaled(f, 2), 3);
  const RankFunction s6_direct = RankFunction::scaled(f, 6);
  for (SubsetMask u = 0; u < 16; ++u) CHECK(s6.value(u) == s6_direct.value(u));
}

TEST_CASE("submodularity check and its witness") {
  CHECK(is_submodular(k3_rank()));

  const RankFunction bad = canonical_violation();
  const auto witness = find_submodularity_violation(bad);
  REQUIRE(witness.has_value());
  CHECK(witness->s == 0b0110);  // {2,3}
  CHECK(witness->t == 0b1010);  // {2,4}
  CHECK(bad.value(witness->s) + bad.value(witness->t) <
        bad.value(witness->s & witness->t) + bad.value(witness->s | witness->t));
}

TEST_CASE("random submodular constructions stay submodular and monotone") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto f = random_submodular_rank(rng, GroundSet::indexed(static_cast<int>(rng.range(2, 5))));
    CHECK(is_submodular(f));
    CHECK(is_monotone_normalized(f));
  }
}

TEST_CASE("monotone and strictly positive checks") {
  CHECK(is_monotone_normalized(k3_rank()));
  CHECK(is_strictly_positive(k3_rank()));
  CHECK_FALSE(is_strictly_positive(RankFunction::singleton_cover(GroundSet::indexed(2), 0b01, 3)));
  CHECK_THROWS_AS(
      RankFunction::explicit_table(GroundSet::indexed(2), std::vector<std::int64_t>{0, 2, 1, 1}),
      InputError);
  CHECK_THROWS_AS(
      RankFunction::explicit_table(GroundSet::indexed(2), std::vector<std::int64_t>{1, 1, 1, 1}),
      InputError);
}

TEST_CASE("matroid tables are validated") {
  // Uniform matroid of rank 2 on three elements.
  std::vector<std::int64_t> uniform(8);
  for (SubsetMask u = 0; u < 8; ++u) uniform[u] = std::min(2, popcount(u));
  CHECK(RankFunction::matroid_table(GroundSet::indexed(3), uniform).value(7) == 2);

  std::vector<std::int64_t> jump{0, 2, 1, 2};  // increment of 2 on one element
  CHECK_THROWS_AS(RankFunction::matroid_table(GroundSet::indexed(2), jump), InputError);
}

TEST_CASE("wider ground sets stay exact through the subset machinery") {
  // Wheel-ish multigraph on 12 edges: hub spokes plus a rim with a chord.
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= 6; ++v) edges.emplace_back(0, v);
  for (int v = 1; v <= 5; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(1, 4);
  const RankFunction wheel = RankFunction::graphic_matroid(GroundSet::indexed(12), 7, edges);
  CHECK(wheel.value_of_all() == 6);
  CHECK(is_submodular(wheel));

  const ProblemInstance p(BasePolytope{RankFunction::scaled(wheel, 2), 3},
                          std::vector<std::int64_t>(12, 0),
                          std::vector<CostFunction>(12, square_of_usage()));
  const Allocation x = solve(p);
  CHECK(x.total() == 3);
  CHECK(verify_optimal(p, x).optimal);
}

TEST_CASE("ground sets reject duplicates and respect the size cap") {
  CHECK_THROWS_AS(GroundSet({"a", "a"}), InputError);
  CHECK_THROWS_AS(GroundSet::indexed(21), InputError);
  CHECK_THROWS_AS(GroundSet(std::vector<std::string>{}), InputError);
  CHECK(GroundSet::indexed(20).size() == 20);
}
