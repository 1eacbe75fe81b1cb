#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/instance.hpp"
#include "core/oracle.hpp"
#include "core/optimize.hpp"

namespace pmx {

struct Player {
  std::string name;
  std::int64_t demand = 0;
  RankFunction rank;                // over the shared resource set
  std::vector<CostFunction> costs;  // one per resource
};

// Finite game: each player distributes an integral demand over the shared
// resources inside a player-specific base polytope; private cost on a
// resource depends on own usage and the combined usage of the others.
struct Game {
  GroundSet resources;
  std::vector<Player> players;

  Game(GroundSet resources_, std::vector<Player> players_);

  int num_players() const { return static_cast<int>(players.size()); }
  std::int64_t total_demand() const;
  std::int64_t max_demand() const;
};

using Profile = std::vector<Allocation>;

Profile zero_profile(const Game& g);
bool profile_feasible(const Game& g, const Profile& x);

std::vector<std::int64_t> opponent_load(const Game& g, const Profile& x, int i);
ExactValue private_cost(const Game& g, const Profile& x, int i);

// The single-player minimization a best response solves: f_i, the given
// demand, t = opponents' loads, the player's own costs.
ProblemInstance induced_instance(const Game& g, const Profile& x, int i, std::int64_t demand);

Allocation best_response(const Game& g, const Profile& x, int i, std::int64_t demand);

// Rejects games the equilibrium algorithm is not defined for: a
// non-submodular player rank (the counterexample constructions are the
// sanctioned path for those), or costs that fail the regularity check on the
// operational box [1..d_i] x [0..sum of other demands].
void validate_for_pne(const Game& g);

struct DeviationWitness {
  int player;
  Allocation better;
};

// Exhaustive improving-deviation search over the enumerated strategy sets.
std::optional<DeviationWitness> find_improving_deviation(const Game& g, const Profile& x,
                                                         const EnumerationBudget& budget);
inline bool is_pne(const Game& g, const Profile& x, const EnumerationBudget& budget) {
  return !find_improving_deviation(g, x, budget);
}

// Per-unit marginal cost vector with a designated overloaded resource (the
// one carrying a unit above the settled profile). Units on the overloaded
// resource report their plain saving; units elsewhere report the saving as
// if one foreign unit were added to their resource. All units a player has
// on one resource share one value.
struct MarginalEntry {
  int player;
  int resource;
  std::int64_t units;
  ExactValue value;
};

struct MarginalVector {
  std::vector<MarginalEntry> entries;
  std::vector<ExactValue> sorted_desc() const;  // one value per unit
};

MarginalVector unit_marginals(const Game& g, const Profile& x, int overloaded_resource);

// Execution log of the equilibrium computation; replayable.
struct PneLog {
  struct Raise {
    int player;
    int resource;  // where the new unit landed
  };
  struct Move {
    int player;
    int from;
    int to;
    std::vector<ExactValue> potential_before;  // sorted unit marginals
    std::vector<ExactValue> potential_after;
  };
  struct Round {
    Raise raise;
    std::vector<Move> moves;
  };
  std::vector<Round> rounds;
  std::int64_t total_moves = 0;
  std::int64_t move_bound_per_round = 0;  // sum_i m * d_i^2
  std::int64_t move_bound_total = 0;      // n^2 * m * delta^3
};

struct PneOutcome {
  Profile profile;
  PneLog log;
};

// Demand-raising equilibrium computation. Demands rise one unit at a time
// (always the lowest-index player with remaining demand); each new unit is
// placed by an incremental best response, then players take turns moving
// single units off the overloaded resource until nobody improves. The sorted
// unit-marginal vector strictly lexicographically decreases at every move
// and the move counters stay inside their certified bounds; violations abort
// with InternalError. The returned profile is re-verified exhaustively.
PneOutcome compute_pne(const Game& g);

// Re-executes a log from the zero profile, re-deriving every decision and
// re-checking every certificate; throws InternalError on any mismatch.
// Returns the final profile.
Profile replay_pne_log(const Game& g, const PneLog& log);

struct SingletonPlayerSpec {
  std::string name;
  SubsetMask members;  // resources the demand may be placed on
  std::int64_t demand;
};

// Integer-splittable singleton game: shared per-resource usage costs,
// player cost c_e(x_e) * own usage; ranks are demand-on-member-cover.
Game singleton_integer_splittable_game(GroundSet resources,
                                       std::vector<SingletonPlayerSpec> players,
                                       std::vector<UsageCost> shared_costs);

struct MatroidPlayerSpec {
  std::string name;
  std::vector<std::string> members;     // resource labels, in matroid order
  RankFunction matroid;                 // over exactly those members
  std::vector<UsageCost> member_costs;  // c_{i,e}, one per member
};

// Matroid congestion game: bases as 0/1 strategies, demand = rank of the
// member set, binary per-resource costs c_{i,e}(total load).
Game matroid_congestion_game(GroundSet resources, std::vector<MatroidPlayerSpec> players);

}  // namespace pmx
