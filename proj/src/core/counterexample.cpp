#include "core/counterexample.hpp"

#include <algorithm>
#include <string>

namespace pmx {

namespace {

ExactValue half() { return ExactValue::fraction(1, 2); }

CostFunction squared_shift() {  // (x + t)^2
  return CostFunction::polynomial({ExactValue(0), ExactValue(0), ExactValue(1)}, {});
}

CostFunction squared_shift_plus_half_usage() {  // (x + t)^2 + x^2 / 2
  return CostFunction::polynomial({ExactValue(0), ExactValue(0), ExactValue(1)},
                                  {ExactValue(0), ExactValue(0), half()});
}

CostFunction prohibitive_linear() {  // 20 x
  return CostFunction::polynomial({}, {ExactValue(0), ExactValue(20)});
}

// Unique minimizer over an enumerated region; InternalError on a tie, since
// uniqueness is part of the construction's guarantee.
Allocation unique_optimum(const ProblemInstance& p, const std::vector<Allocation>& region,
                          const char* what) {
  if (region.empty()) throw InternalError(std::string(what) + ": empty region");
  const Allocation* best = nullptr;
  ExactValue best_value(0);
  bool tie = false;
  for (const auto& x : region) {
    const ExactValue v = objective(p, x);
    if (!best || v < best_value) {
      best = &x;
      best_value = v;
      tie = false;
    } else if (v == best_value) {
      tie = true;
    }
  }
  if (tie) throw InternalError(std::string(what) + ": optimum is not unique");
  return *best;
}

}  // namespace

TightenedViolation tighten_to_violation(const RankFunction& f, std::int64_t rank,
                                        const EnumerationBudget& budget) {
  if (rank == 1)
    throw InputError(
        "tightening at rank 1 is refused: every strictly positive single-unit "
        "region is a polymatroid region");
  if (rank != 2) throw InputError("tightening is only supported at rank 2");
  if (auto w = find_monotonicity_violation(f))
    throw InputError("tighten: function must be normalized and monotone");
  if (!is_strictly_positive(f))
    throw InputError("tighten: function must be strictly positive on non-empty sets");
  if (is_submodular(f))
    throw InputError("tighten: function is submodular; no counterexample exists");

  std::vector<Allocation> region = enumerate_base(BasePolytope{f, rank}, budget);
  if (region.empty()) throw InputError("tighten: the two-unit region is empty");

  // Lower every constraint to its attained maximum; the region is unchanged
  // and every constraint becomes tight at some point.
  const int m = f.ground().size();
  std::vector<std::int64_t> table(std::size_t{1} << m, 0);
  for (SubsetMask u = 1; u <= full_mask(m); ++u) {
    std::int64_t attained = 0;
    for (const auto& x : region) attained = std::max(attained, x.sum_over(u));
    table[u] = attained;
  }
  RankFunction tightened = RankFunction::explicit_table(f.ground(), std::move(table));

  if (is_submodular(tightened))
    throw InputError(
        "tighten: the tightened function is submodular, so the region is a "
        "polymatroid region and no counterexample exists for it");

  // Lexicographically smallest violating pair. Tightness forces the
  // canonical value pattern 1,1,1,2 on any violating pair.
  for (SubsetMask s = 1; s <= full_mask(m); ++s) {
    for (SubsetMask t = s + 1; t <= full_mask(m); ++t) {
      if (tightened.value(s) + tightened.value(t) <
          tightened.value(s & t) + tightened.value(s | t)) {
        if (tightened.value(s) != 1 || tightened.value(t) != 1 ||
            tightened.value(s & t) != 1 || tightened.value(s | t) != 2)
          throw InternalError("tighten: violating pair without the canonical values");
        return TightenedViolation{std::move(tightened), s, t, std::move(region)};
      }
    }
  }
  throw InternalError("tighten: non-submodular function without a violating pair");
}

CriticalQuadruple find_critical_quadruple(const TightenedViolation& tv) {
  const SubsetMask s = tv.s, t = tv.t;
  const SubsetMask meet = s & t, join = s | t;

  // Each point supported inside S|T must avoid S&T.
  for (const auto& z : tv.region) {
    const SubsetMask sup = z.support();
    if ((sup & ~join) == 0 && (sup & meet) != 0)
      throw InternalError("critical quadruple: a point inside the union touches the meet");
  }

  CriticalQuadruple out{-1, -1, -1, -1, tv.region.front(), tv.region.front()};
  bool have_x = false, have_y = false;
  for (const auto& z : tv.region) {
    if (!have_x && z.sum_over(meet) == 1) {
      have_x = true;
      out.x_witness = z;
      for (int e = 0; e < z.size(); ++e) {
        if (z[e] == 0) continue;
        if (mask_contains(meet, e)) out.core = e;
        if (!mask_contains(join, e)) out.outside = e;
      }
    }
    if (!have_y && z.sum_over(join) == 2) {
      have_y = true;
      out.y_witness = z;
      for (int e = 0; e < z.size(); ++e) {
        if (z[e] == 0) continue;
        if (mask_contains(s & ~t, e)) out.left = e;
        if (mask_contains(t & ~s, e)) out.right = e;
      }
    }
    if (have_x && have_y) break;
  }
  if (!have_x || !have_y || out.outside < 0 || out.core < 0 || out.left < 0 || out.right < 0)
    throw InternalError("critical quadruple: witnesses missing despite tight constraints");
  if (out.x_witness != Allocation(out.x_witness.size()).plus_unit(out.outside).plus_unit(out.core))
    throw InternalError("critical quadruple: malformed meet witness");
  if (out.y_witness != Allocation(out.y_witness.size()).plus_unit(out.left).plus_unit(out.right))
    throw InternalError("critical quadruple: malformed union witness");

  // Any other point inside the quadruple must be outside+left, outside+right,
  // or two units on outside.
  const SubsetMask quad = (SubsetMask{1} << out.outside) | (SubsetMask{1} << out.core) |
                          (SubsetMask{1} << out.left) | (SubsetMask{1} << out.right);
  for (const auto& z : tv.region) {
    if (z == out.x_witness || z == out.y_witness) continue;
    const SubsetMask sup = z.support();
    if ((sup & ~quad) != 0) continue;
    const SubsetMask ol = (SubsetMask{1} << out.outside) | (SubsetMask{1} << out.left);
    const SubsetMask orr = (SubsetMask{1} << out.outside) | (SubsetMask{1} << out.right);
    const SubsetMask oo = SubsetMask{1} << out.outside;
    if (sup != ol && sup != orr && sup != oo)
      throw InternalError("critical quadruple: unexpected point inside the quadruple");
  }
  return out;
}

SensitivityCounterexample build_sensitivity_counterexample(const RankFunction& f,
                                                           const EnumerationBudget& budget) {
  TightenedViolation tv = tighten_to_violation(f, 2, budget);
  const CriticalQuadruple quad = find_critical_quadruple(tv);

  const int m = f.ground().size();
  std::vector<CostFunction> costs;
  costs.reserve(m);
  for (int e = 0; e < m; ++e) {
    if (e == quad.outside || e == quad.core)
      costs.push_back(squared_shift());
    else if (e == quad.left || e == quad.right)
      costs.push_back(squared_shift_plus_half_usage());
    else
      costs.push_back(prohibitive_linear());
  }
  std::vector<std::int64_t> t_base(m, 0);
  std::vector<std::int64_t> t_shifted(m, 0);
  t_shifted[quad.outside] = 1;
  ProblemInstance instance(BasePolytope{tv.tightened, 2}, t_base, std::move(costs));

  // Shifting one unit of load onto the outside element prices out every
  // point that uses it, which is every point except the union witness.
  const Allocation opt_base = unique_optimum(instance, tv.region, "base optimum");
  const ProblemInstance shifted = instance.with_t(t_shifted);
  const Allocation opt_shifted = unique_optimum(shifted, tv.region, "shifted optimum");
  if (opt_base != quad.x_witness)
    throw InternalError("sensitivity counterexample: base optimum is not the meet witness");
  if (opt_shifted != quad.y_witness)
    throw InternalError("sensitivity counterexample: shifted optimum is not the union witness");
  const std::int64_t t_dist = opt_base.l1_distance(opt_shifted);
  if (t_dist != 4)
    throw InternalError("sensitivity counterexample: parameter-shift distance is not 4");

  const ProblemInstance low = shifted.with_d(1);
  const Allocation opt_low = unique_optimum(low, enumerate_base(low.base, budget),
                                            "single-unit optimum");
  if (opt_low != Allocation(m).plus_unit(quad.core))
    throw InternalError("sensitivity counterexample: single-unit optimum is not the core");
  const std::int64_t d_dist = opt_low.l1_distance(opt_shifted);
  if (d_dist != 3)
    throw InternalError("sensitivity counterexample: rank-shift distance is not 3");

  return SensitivityCounterexample{std::move(tv), quad,      std::move(instance),
                                   std::move(t_base),        std::move(t_shifted),
                                   opt_base,      opt_shifted, opt_low,
                                   t_dist,        d_dist};
}

NoPneGame build_no_pne_game(const RankFunction& f, const EnumerationBudget& budget) {
  TightenedViolation tv = tighten_to_violation(f, 2, budget);
  const CriticalQuadruple quad = find_critical_quadruple(tv);

  const int m = f.ground().size();
  const auto& labels = f.ground().labels();

  // Shared resources: the two quadruples interleave as
  //   player 1: outside->g core->h left->a right->b
  //   player 2: outside->g core->b left->a right->h
  // and every non-critical element gets a private per-player resource.
  std::vector<std::string> resource_labels = {"a", "b", "g", "h"};
  std::vector<int> p1_map(m, -1), p2_map(m, -1);
  p1_map[quad.outside] = 2;  // g
  p1_map[quad.core] = 3;     // h
  p1_map[quad.left] = 0;     // a
  p1_map[quad.right] = 1;    // b
  p2_map[quad.outside] = 2;  // g
  p2_map[quad.core] = 1;     // b
  p2_map[quad.left] = 0;     // a
  p2_map[quad.right] = 3;    // h
  for (int e = 0; e < m; ++e) {
    if (p1_map[e] >= 0) continue;
    p1_map[e] = static_cast<int>(resource_labels.size());
    resource_labels.push_back("p1:" + labels[e]);
  }
  for (int e = 0; e < m; ++e) {
    if (p2_map[e] >= 0) continue;
    p2_map[e] = static_cast<int>(resource_labels.size());
    resource_labels.push_back("p2:" + labels[e]);
  }
  GroundSet resources{resource_labels};
  const int rm = resources.size();

  auto embed_rank = [&](const std::vector<int>& map) {
    // f_i(U) = value of the original function on the preimage of U.
    std::vector<std::int64_t> table(std::size_t{1} << rm, 0);
    for (SubsetMask u = 0; u <= full_mask(rm); ++u) {
      SubsetMask pre = 0;
      for (int e = 0; e < m; ++e)
        if (mask_contains(u, map[e])) pre |= SubsetMask{1} << e;
      table[u] = tv.tightened.value(pre);
    }
    return RankFunction::explicit_table(resources, std::move(table));
  };

  const UsageCost twenty = UsageCost::constant(ExactValue(20));
  // Per-resource usage costs of the two players on a, b, g, h.
  std::vector<UsageCost> c1 = {
      UsageCost::affine_clamp(ExactValue(1), ExactValue(1)),  // a: max(0, y-1)
      UsageCost::constant(ExactValue(1)),                     // b
      UsageCost::affine_clamp(ExactValue(3), ExactValue(3)),  // g: max(0, 3y-3)
      UsageCost::constant(ExactValue(0)),                     // h
  };
  std::vector<UsageCost> c2 = {
      UsageCost::constant(ExactValue(1)),                     // a
      UsageCost::constant(ExactValue(0)),                     // b
      UsageCost::constant(ExactValue(2)),                     // g
      UsageCost::affine_clamp(ExactValue(2), ExactValue(2)),  // h: max(0, 2y-2)
  };
  auto build_costs = [&](const std::vector<UsageCost>& crit) {
    std::vector<CostFunction> costs;
    costs.reserve(rm);
    for (int r = 0; r < rm; ++r)
      costs.push_back(CostFunction::scaled_congestion(r < 4 ? crit[r] : twenty));
    return costs;
  };

  Game game(resources, {Player{"p1", 2, embed_rank(p1_map), build_costs(c1)},
                        Player{"p2", 2, embed_rank(p2_map), build_costs(c2)}});

  // The shared resource set is wider than the input ground set; widen the
  // search budget accordingly (the point counts stay tiny at rank 2).
  EnumerationBudget search = budget;
  search.max_ground = std::max(search.max_ground, rm);
  const auto strategies = static_cast<std::int64_t>(tv.region.size());
  if (brute_pne(game, search))
    throw InternalError("no-equilibrium game: exhaustive search found an equilibrium");
  return NoPneGame{std::move(tv), quad, std::move(game), strategies * strategies};
}

}  // namespace pmx
