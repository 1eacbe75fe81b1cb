#include "core/game.hpp"

#include <algorithm>
#include <string>

namespace pmx {

Game::Game(GroundSet resources_, std::vector<Player> players_)
    : resources(std::move(resources_)), players(std::move(players_)) {
  if (players.empty()) throw InputError("game needs at least one player");
  for (const auto& p : players) {
    if (p.demand < 0) throw InputError("player \"" + p.name + "\": negative demand");
    if (!(p.rank.ground() == resources))
      throw InputError("player \"" + p.name + "\": rank is not over the shared resources");
    if (p.costs.size() != static_cast<std::size_t>(resources.size()))
      throw InputError("player \"" + p.name + "\": one cost per resource required");
    if (p.demand > p.rank.value_of_all())
      throw InputError("player \"" + p.name + "\": demand exceeds the rank of the resource set");
  }
}

std::int64_t Game::total_demand() const {
  std::int64_t s = 0;
  for (const auto& p : players) s += p.demand;
  return s;
}

std::int64_t Game::max_demand() const {
  std::int64_t s = 0;
  for (const auto& p : players) s = std::max(s, p.demand);
  return s;
}

Profile zero_profile(const Game& g) {
  return Profile(g.players.size(), Allocation(g.resources.size()));
}

bool profile_feasible(const Game& g, const Profile& x) {
  if (x.size() != g.players.size()) return false;
  for (int i = 0; i < g.num_players(); ++i)
    if (!member(BasePolytope{g.players[i].rank, g.players[i].demand}, x[i])) return false;
  return true;
}

std::vector<std::int64_t> opponent_load(const Game& g, const Profile& x, int i) {
  std::vector<std::int64_t> t(g.resources.size(), 0);
  for (int j = 0; j < g.num_players(); ++j) {
    if (j == i) continue;
    for (int e = 0; e < g.resources.size(); ++e) t[e] += x[j][e];
  }
  return t;
}

ExactValue private_cost(const Game& g, const Profile& x, int i) {
  const auto t = opponent_load(g, x, i);
  ExactValue sum(0);
  for (int e = 0; e < g.resources.size(); ++e)
    sum += g.players[i].costs[e].value(x[i][e], t[e]);
  return sum;
}

ProblemInstance induced_instance(const Game& g, const Profile& x, int i, std::int64_t demand) {
  return ProblemInstance(BasePolytope{g.players[i].rank, demand}, opponent_load(g, x, i),
                         g.players[i].costs);
}

Allocation best_response(const Game& g, const Profile& x, int i, std::int64_t demand) {
  if (demand > g.players[i].demand)
    throw DomainError("best_response: demand above the player's demand");
  return solve(induced_instance(g, x, i, demand));
}

void validate_for_pne(const Game& g) {
  std::int64_t others_total = 0;
  for (const auto& p : g.players) others_total += p.demand;
  for (const auto& p : g.players) {
    if (auto w = find_submodularity_violation(p.rank))
      throw InputError("player \"" + p.name +
                       "\": rank is not submodular; equilibria may not exist "
                       "(use the counterexample constructions for such inputs)");
    const std::int64_t t_max = others_total - p.demand;
    if (p.demand >= 1) {
      for (int e = 0; e < g.resources.size(); ++e) {
        if (auto w = find_regularity_violation(p.costs[e], p.demand, t_max))
          throw InputError("player \"" + p.name + "\": cost on resource \"" +
                           g.resources.label(e) + "\" is not regular on the operational box");
      }
    }
  }
}

std::optional<DeviationWitness> find_improving_deviation(const Game& g, const Profile& x,
                                                         const EnumerationBudget& budget) {
  if (!profile_feasible(g, x)) throw DomainError("find_improving_deviation: infeasible profile");
  for (int i = 0; i < g.num_players(); ++i) {
    const ExactValue mine = private_cost(g, x, i);
    const auto options =
        enumerate_base(BasePolytope{g.players[i].rank, g.players[i].demand}, budget);
    const auto t = opponent_load(g, x, i);
    for (const auto& alt : options) {
      ExactValue cost(0);
      for (int e = 0; e < g.resources.size(); ++e)
        cost += g.players[i].costs[e].value(alt[e], t[e]);
      if (cost < mine) return DeviationWitness{i, alt};
    }
  }
  return std::nullopt;
}

std::vector<ExactValue> MarginalVector::sorted_desc() const {
  std::vector<ExactValue> flat;
  for (const auto& en : entries)
    for (std::int64_t u = 0; u < en.units; ++u) flat.push_back(en.value);
  std::sort(flat.begin(), flat.end(), [](const ExactValue& a, const ExactValue& b) { return b < a; });
  return flat;
}

MarginalVector unit_marginals(const Game& g, const Profile& x, int overloaded_resource) {
  MarginalVector out;
  for (int i = 0; i < g.num_players(); ++i) {
    const auto t = opponent_load(g, x, i);
    for (int e = 0; e < g.resources.size(); ++e) {
      if (x[i][e] == 0) continue;
      const std::int64_t bump = e == overloaded_resource ? 0 : 1;
      out.entries.push_back(MarginalEntry{
          i, e, x[i][e], g.players[i].costs[e].left_derivative(x[i][e], t[e] + bump)});
    }
  }
  return out;
}

namespace {

// Elements where the local optimality certificate fails for player i.
std::vector<int> certificate_violations(const ProblemInstance& inst, const Allocation& xi) {
  std::vector<int> out;
  for (int e = 0; e < inst.size(); ++e) {
    if (xi[e] == 0) continue;
    if (inst.costs[e].left_derivative(xi[e], inst.t[e]) >
        min_exchange_cost(inst, xi, e).value)
      out.push_back(e);
  }
  return out;
}

struct MoveDecision {
  int player;
  int target;
};

// Lowest-index player with a single-unit move that strictly lowers their
// private cost (exact comparison, so a saturated resource whose cost stays
// infinite after the move does not count as an improvement). The theory
// behind the run guarantees genuine improvements only ever exist on the
// overloaded resource; anything else is an invariant breach.
std::optional<MoveDecision> pick_mover(const Game& g, const Profile& x,
                                       const std::vector<std::int64_t>& demands,
                                       int overloaded) {
  for (int j = 0; j < g.num_players(); ++j) {
    if (demands[j] == 0) continue;
    const ProblemInstance inst = induced_instance(g, x, j, demands[j]);
    const ExactValue current = objective(inst, x[j]);
    for (int e : certificate_violations(inst, x[j])) {
      const DeltaValue delta = min_exchange_cost(inst, x[j], e);
      if (!delta.argmin) continue;
      const Allocation candidate = x[j].exchanged(e, *delta.argmin);
      if (!(objective(inst, candidate) < current)) continue;
      if (e != overloaded)
        throw InternalError("equilibrium run: improvement away from the overloaded resource");
      return MoveDecision{j, *delta.argmin};
    }
  }
  return std::nullopt;
}

}  // namespace

PneOutcome compute_pne(const Game& g) {
  validate_for_pne(g);
  const int n = g.num_players();
  const int m = g.resources.size();
  const std::int64_t delta_max = g.max_demand();

  PneOutcome out{zero_profile(g), {}};
  PneLog& log = out.log;
  log.move_bound_total = static_cast<std::int64_t>(n) * n * m * delta_max * delta_max * delta_max;
  for (const auto& p : g.players) log.move_bound_per_round += m * p.demand * p.demand;

  std::vector<std::int64_t> demands(n, 0);
  for (std::int64_t k = 0; k < g.total_demand(); ++k) {
    int raiser = -1;
    for (int i = 0; i < n; ++i)
      if (demands[i] < g.players[i].demand) {
        raiser = i;
        break;
      }

    // Place the new unit with the incremental rank-raise rule; the result is
    // a best response one unit up.
    const ProblemInstance before = induced_instance(g, out.profile, raiser, demands[raiser]);
    const Allocation raised = reoptimize_d(before, out.profile[raiser], +1);
    int overloaded = -1;
    for (int e = 0; e < m; ++e)
      if (raised[e] == out.profile[raiser][e] + 1) overloaded = e;
    ++demands[raiser];
    out.profile[raiser] = raised;
    log.rounds.push_back(PneLog::Round{PneLog::Raise{raiser, overloaded}, {}});
    auto& round = log.rounds.back();

    std::int64_t round_moves = 0;
    while (auto mv = pick_mover(g, out.profile, demands, overloaded)) {
      PneLog::Move rec{mv->player, overloaded, mv->target,
                       unit_marginals(g, out.profile, overloaded).sorted_desc(),
                       {}};
      out.profile[mv->player] = out.profile[mv->player].exchanged(overloaded, mv->target);
      overloaded = mv->target;
      rec.potential_after = unit_marginals(g, out.profile, overloaded).sorted_desc();
      if (!lex_less(rec.potential_after, rec.potential_before))
        throw InternalError(
            "equilibrium run: sorted marginal vector did not strictly decrease");
      round.moves.push_back(std::move(rec));
      ++round_moves;
      ++log.total_moves;
      if (round_moves > log.move_bound_per_round)
        throw InternalError("equilibrium run: per-round move bound exceeded");
      if (log.total_moves > log.move_bound_total)
        throw InternalError("equilibrium run: total move bound exceeded");
    }
  }

  // Final certificate: every player best-responds.
  for (int i = 0; i < n; ++i) {
    const ProblemInstance inst = induced_instance(g, out.profile, i, demands[i]);
    if (!is_optimal(inst, out.profile[i]))
      throw InternalError("equilibrium run: final profile failed the best-response certificate");
  }
  return out;
}

Profile replay_pne_log(const Game& g, const PneLog& log) {
  validate_for_pne(g);
  const int n = g.num_players();
  Profile x = zero_profile(g);
  std::vector<std::int64_t> demands(n, 0);
  std::int64_t moves_seen = 0;

  for (const auto& round : log.rounds) {
    const auto& raise = round.raise;
    for (int i = 0; i < raise.player; ++i)
      if (demands[i] < g.players[i].demand)
        throw InternalError("replay: raise skipped a lower-index player");
    if (demands[raise.player] >= g.players[raise.player].demand)
      throw InternalError("replay: raise beyond the player's demand");

    const ProblemInstance before = induced_instance(g, x, raise.player, demands[raise.player]);
    const Allocation raised = reoptimize_d(before, x[raise.player], +1);
    if (raised != x[raise.player].plus_unit(raise.resource))
      throw InternalError("replay: raise landed on a different resource");
    ++demands[raise.player];
    x[raise.player] = raised;
    int overloaded = raise.resource;

    for (const auto& mv : round.moves) {
      if (mv.from != overloaded) throw InternalError("replay: move not from the overloaded resource");
      const ProblemInstance inst = induced_instance(g, x, mv.player, demands[mv.player]);
      const DeltaValue delta = min_exchange_cost(inst, x[mv.player], overloaded);
      if (!delta.argmin || *delta.argmin != mv.to)
        throw InternalError("replay: move target mismatch");
      if (!(objective(inst, x[mv.player].exchanged(mv.from, mv.to)) <
            objective(inst, x[mv.player])))
        throw InternalError("replay: logged move does not strictly improve");
      const auto pre = unit_marginals(g, x, overloaded).sorted_desc();
      if (pre != mv.potential_before) throw InternalError("replay: potential_before mismatch");
      x[mv.player] = x[mv.player].exchanged(mv.from, mv.to);
      overloaded = mv.to;
      const auto post = unit_marginals(g, x, overloaded).sorted_desc();
      if (post != mv.potential_after) throw InternalError("replay: potential_after mismatch");
      if (!lex_less(post, pre)) throw InternalError("replay: potential did not decrease");
      ++moves_seen;
    }
  }
  if (moves_seen != log.total_moves) throw InternalError("replay: move counter mismatch");
  for (int i = 0; i < n; ++i)
    if (demands[i] != g.players[i].demand)
      throw InternalError("replay: demands not fully raised");
  for (int i = 0; i < n; ++i) {
    const ProblemInstance inst = induced_instance(g, x, i, demands[i]);
    if (!is_optimal(inst, x[i]))
      throw InternalError("replay: final profile is not an equilibrium");
  }
  return x;
}

Game singleton_integer_splittable_game(GroundSet resources,
                                       std::vector<SingletonPlayerSpec> players,
                                       std::vector<UsageCost> shared_costs) {
  if (shared_costs.size() != static_cast<std::size_t>(resources.size()))
    throw InputError("singleton game: one shared cost per resource required");
  std::int64_t total = 0;
  for (const auto& p : players) total += p.demand;
  for (const auto& c : shared_costs) c.check_nondecreasing_convex(total + 1);

  std::vector<Player> out;
  out.reserve(players.size());
  for (const auto& spec : players) {
    std::vector<CostFunction> costs;
    costs.reserve(resources.size());
    for (int e = 0; e < resources.size(); ++e)
      costs.push_back(CostFunction::scaled_congestion(shared_costs[e]));
    out.push_back(Player{spec.name, spec.demand,
                         RankFunction::singleton_cover(resources, spec.members, spec.demand),
                         std::move(costs)});
  }
  return Game(std::move(resources), std::move(out));
}

Game matroid_congestion_game(GroundSet resources, std::vector<MatroidPlayerSpec> players) {
  std::vector<Player> out;
  out.reserve(players.size());
  for (const auto& spec : players) {
    const int k = static_cast<int>(spec.members.size());
    if (spec.matroid.ground().size() != k)
      throw InputError("matroid game: matroid ground must match the member list");
    if (spec.member_costs.size() != spec.members.size())
      throw InputError("matroid game: one cost per member required");

    std::vector<int> member_index(k);
    for (int j = 0; j < k; ++j) member_index[j] = resources.index(spec.members[j]);

    // Embed: f(U) = rank of the members inside U; validated as a matroid
    // rank by construction of the input (unit increments + submodularity).
    const int m = resources.size();
    std::vector<std::int64_t> table(std::size_t{1} << m, 0);
    for (SubsetMask u = 0; u <= full_mask(m); ++u) {
      SubsetMask proj = 0;
      for (int j = 0; j < k; ++j)
        if (mask_contains(u, member_index[j])) proj |= SubsetMask{1} << j;
      table[u] = spec.matroid.value(proj);
    }
    for (int j = 0; j < k; ++j)
      if (spec.matroid.value(SubsetMask{1} << j) > 1)
        throw InputError("matroid game: member rank above 1 is not a matroid");
    if (find_submodularity_violation(spec.matroid))
      throw InputError("matroid game: member rank function is not submodular");

    std::vector<CostFunction> costs;
    costs.reserve(m);
    for (int e = 0; e < m; ++e) {
      int j = -1;
      for (int jj = 0; jj < k; ++jj)
        if (member_index[jj] == e) j = jj;
      costs.push_back(CostFunction::matroid_binary(
          j >= 0 ? spec.member_costs[j] : UsageCost::constant(ExactValue(0))));
    }
    const std::int64_t demand = spec.matroid.value_of_all();
    out.push_back(Player{spec.name, demand,
                         RankFunction::explicit_table(resources, std::move(table)),
                         std::move(costs)});
  }
  return Game(std::move(resources), std::move(out));
}

}  // namespace pmx
