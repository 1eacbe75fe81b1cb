#pragma once

#include <optional>
#include <vector>

#include "core/instance.hpp"

namespace pmx {

struct Game;

// Enumeration limits; exceeding any of them raises CapacityError.
struct EnumerationBudget {
  int max_ground = 6;
  std::int64_t max_demand = 6;
  std::int64_t max_points = 1'000'000;
};

// Every integer point of the base polytope, in lexicographic order.
// Naive recursive generation with prefix pruning; deliberately shares no
// code with the membership / solver paths it is used to validate.
std::vector<Allocation> enumerate_base(const BasePolytope& b, const EnumerationBudget& budget);

struct BruteOptimum {
  Allocation x;
  ExactValue value;
};

// Global minimum by enumeration; ties resolve to the lexicographically
// smallest point. InfeasibleError when the base polytope is empty.
BruteOptimum brute_optimum(const ProblemInstance& p, const EnumerationBudget& budget);

// Some pure equilibrium in deterministic (lexicographic) order, or verified
// absence. The product of the strategy-set sizes must fit the budget.
std::optional<std::vector<Allocation>> brute_pne(const Game& g, const EnumerationBudget& budget);

}  // namespace pmx
