#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "core/counterexample.hpp"

namespace pmx {

// Deterministic random source for the test corpora. All sampling goes
// through these helpers so runs are reproducible across platforms (the
// standard distributions are not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t below(std::int64_t n) {
    return static_cast<std::int64_t>(engine_() % static_cast<std::uint64_t>(n));
  }
  std::int64_t range(std::int64_t lo, std::int64_t hi) { return lo + below(hi - lo + 1); }
  bool chance(int num, int den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

// The 4-element violating function: value 1 on non-empty subsets of {2,3}
// and of {2,4}, value 2 on every other non-empty subset.
RankFunction canonical_violation();

// Normalized, monotone, submodular rank over the given ground set, with
// f(E) >= 1. Mix of coverage functions, graphic matroids, scaled and
// truncated variants, and cover functions.
RankFunction random_submodular_rank(Rng& rng, const GroundSet& ground);

// Strictly positive, normalized, monotone, non-submodular function whose
// tightening keeps a violation, on 4..max_elements elements.
RankFunction random_usable_violation(Rng& rng, int max_elements);

// Regular cost drawn from the built-in families (optionally including the
// reciprocal-capacity family, whose values can be infinite).
CostFunction random_regular_cost(Rng& rng, bool allow_infinite);

// Instance with a random submodular rank, d <= d_max (and <= f(E)),
// parameters <= t_max, and per-element random regular costs.
ProblemInstance random_instance(Rng& rng, int max_elements, std::int64_t d_max,
                                std::int64_t t_max, bool allow_infinite);

// Game with <= n_max players, <= m_max resources and demands <= d_max; mixes
// generic polymatroid players with the singleton and matroid constructions.
Game random_polymatroid_game(Rng& rng, int n_max, int m_max, std::int64_t d_max);

// Verifies the constructed two-player no-equilibrium game of the canonical
// violation against the reference bimatrix, cell for cell and per resource.
// Throws InternalError on any mismatch.
void check_canonical_game_cells(const Game& game);

struct CriterionResult {
  std::string name;
  bool pass;
  std::int64_t cases;
  std::string detail;
  std::int64_t millis;
};

// The full acceptance battery. Criteria never throw; failures are reported
// with the first offending case in `detail`.
std::vector<CriterionResult> run_selftest(std::uint64_t seed);

}  // namespace pmx
