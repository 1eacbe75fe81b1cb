#include "core/oracle.hpp"

#include <string>

#include "core/game.hpp"

namespace pmx {

namespace {

struct Enumerator {
  const RankFunction& f;
  std::int64_t d;
  std::int64_t max_points;
  int m;
  std::vector<std::int64_t> partial;
  std::vector<Allocation> out;
  std::int64_t visited = 0;

  // Constraints over the assigned prefix 0..last are final once x_last is
  // set: check every subset whose maximum element is `last`.
  bool prefix_ok(int last) const {
    const SubsetMask bit = SubsetMask{1} << last;
    const SubsetMask below = bit - 1;
    SubsetMask rest = below;
    for (;;) {
      const SubsetMask u = rest | bit;
      std::int64_t sum = 0;
      for (int e = 0; e <= last; ++e)
        if (mask_contains(u, e)) sum += partial[e];
      if (sum > f.value(u)) return false;
      if (rest == 0) break;
      rest = (rest - 1) & below;
    }
    return true;
  }

  void recurse(int e, std::int64_t remaining) {
    if (++visited > max_points)
      throw CapacityError("enumeration exceeded the point budget");
    if (e == m - 1) {
      partial[e] = remaining;
      if (prefix_ok(e)) out.emplace_back(partial);
      partial[e] = 0;
      return;
    }
    const std::int64_t cap = std::min(remaining, f.value(SubsetMask{1} << e));
    for (std::int64_t v = 0; v <= cap; ++v) {
      partial[e] = v;
      if (!prefix_ok(e)) break;  // the failing sums only grow with v
      recurse(e + 1, remaining - v);
    }
    partial[e] = 0;
  }
};

}  // namespace

std::vector<Allocation> enumerate_base(const BasePolytope& b, const EnumerationBudget& budget) {
  const int m = b.f.ground().size();
  if (m > budget.max_ground)
    throw CapacityError("ground set larger than the enumeration budget (" +
                        std::to_string(budget.max_ground) + ")");
  if (b.d > budget.max_demand)
    throw CapacityError("demand larger than the enumeration budget");
  Enumerator en{b.f, b.d, budget.max_points, m, std::vector<std::int64_t>(m, 0), {}, 0};
  en.recurse(0, b.d);
  return std::move(en.out);
}

BruteOptimum brute_optimum(const ProblemInstance& p, const EnumerationBudget& budget) {
  const auto points = enumerate_base(p.base, budget);
  if (points.empty()) throw InfeasibleError("brute_optimum: empty base polytope");
  std::optional<BruteOptimum> best;
  for (const auto& x : points) {
    ExactValue v = objective(p, x);
    if (!best || v < best->value) best = BruteOptimum{x, v};
  }
  return *best;
}

std::optional<std::vector<Allocation>> brute_pne(const Game& g, const EnumerationBudget& budget) {
  const int n = g.num_players();
  std::vector<std::vector<Allocation>> strategies;
  strategies.reserve(n);
  std::int64_t profiles = 1;
  for (const auto& pl : g.players) {
    strategies.push_back(enumerate_base(BasePolytope{pl.rank, pl.demand}, budget));
    if (strategies.back().empty())
      throw InfeasibleError("brute_pne: player \"" + pl.name + "\" has no strategy");
    if (profiles > budget.max_points / static_cast<std::int64_t>(strategies.back().size()))
      throw CapacityError("brute_pne: profile space exceeds the point budget");
    profiles *= static_cast<std::int64_t>(strategies.back().size());
  }

  const int m = g.resources.size();
  // Direct cost evaluation, independent of the game module's helpers.
  auto player_cost = [&](const std::vector<std::size_t>& pick, int i) {
    ExactValue sum(0);
    const Allocation& mine = strategies[i][pick[i]];
    for (int e = 0; e < m; ++e) {
      std::int64_t others = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) others += strategies[j][pick[j]][e];
      sum += g.players[i].costs[e].value(mine[e], others);
    }
    return sum;
  };

  std::vector<std::size_t> pick(n, 0);
  for (;;) {
    bool is_equilibrium = true;
    for (int i = 0; i < n && is_equilibrium; ++i) {
      const ExactValue mine = player_cost(pick, i);
      auto probe = pick;
      for (std::size_t alt = 0; alt < strategies[i].size(); ++alt) {
        if (alt == pick[i]) continue;
        probe[i] = alt;
        if (player_cost(probe, i) < mine) {
          is_equilibrium = false;
          break;
        }
      }
    }
    if (is_equilibrium) {
      std::vector<Allocation> profile;
      profile.reserve(n);
      for (int i = 0; i < n; ++i) profile.push_back(strategies[i][pick[i]]);
      return profile;
    }
    int carry = n - 1;
    while (carry >= 0 && ++pick[carry] == strategies[carry].size()) pick[carry--] = 0;
    if (carry < 0) return std::nullopt;
  }
}

}  // namespace pmx
