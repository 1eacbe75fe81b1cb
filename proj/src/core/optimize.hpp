#pragma once

#include <optional>
#include <vector>

#include "core/instance.hpp"

namespace pmx {

// Minimum alternative cost of moving one unit off element e: the cheapest
// right derivative over the feasible local exchanges, +infinity when there
// are none. Ties break to the lowest element index.
struct DeltaValue {
  ExactValue value;
  std::optional<int> argmin;
};

DeltaValue min_exchange_cost(const ProblemInstance& p, const Allocation& x, int e);

// Local optimality certificate: x in the base polytope is optimal iff for
// every element with x_e >= 1 the cost saved by dropping a unit does not
// exceed the cheapest feasible replacement. Sound and complete for
// submodular f with regular costs.
struct OptimalityCheck {
  bool optimal;
  std::optional<int> violator;  // first failing element
};

OptimalityCheck verify_optimal(const ProblemInstance& p, const Allocation& x);

// Exact optimality, covering saturated instances: the certificate decides
// whenever the value is finite; an infinite value is compared against a
// fresh greedy optimum instead (all-infinite instances have every point
// optimal, which the local certificate alone cannot see).
bool is_optimal(const ProblemInstance& p, const Allocation& x);

// Greedy solver: d unit increments, each placed on the slack element with the
// cheapest right derivative (ties to the lowest index). The result is
// verified against the local optimality certificate before returning.
// InfeasibleError when the base polytope is empty.
Allocation solve(const ProblemInstance& p);

// Reoptimization after a unit increase of t on element e. Compares the old
// optimum with the single local exchange off e and returns the cheaper under
// the new parameters (ties keep the old solution). The winner provably
// satisfies the optimality conditions for t + chi_e; this is re-verified.
// p carries the OLD parameters; x_opt must be optimal for them.
Allocation reoptimize_t_increase(const ProblemInstance& p, const Allocation& x_opt, int e);

// Reoptimization after a unit decrease of t on element e (t_e >= 1). The
// local candidate pulls one unit onto e from the feasible element with the
// largest left derivative. Gated: if the winner fails verification the
// instance is re-solved from scratch and *used_fallback is set.
Allocation reoptimize_t_decrease(const ProblemInstance& p, const Allocation& x_opt, int e,
                                 bool* used_fallback = nullptr);

// Reoptimization after d -> d + step for step in {+1, -1}. +1 adds a unit on
// the slack element with the cheapest right derivative (provably optimal);
// -1 removes the unit with the largest left derivative (gated + fallback).
Allocation reoptimize_d(const ProblemInstance& p, const Allocation& x_opt, int step,
                        bool* used_fallback = nullptr);

// One elementary step of a reoptimization trace, with the state after it.
struct TraceStep {
  enum class Kind { Exchange, Increment, Decrement };
  Kind kind;
  int from = -1;  // Exchange, Decrement
  int to = -1;    // Exchange, Increment
  Allocation after;
  ExactValue objective_after;
  std::vector<std::int64_t> t_after;
  std::int64_t d_after;
};

struct ReoptResult {
  Allocation x;
  std::vector<TraceStep> trace;
  int fallbacks = 0;
};

// Chains unit shifts from (t, d) to (t_new, d_new): all d-shifts first, then
// t-decreases in ascending element order, then t-increases in ascending
// element order. Every stage re-verifies optimality; the trace records one
// step per unit shift that changed the allocation.
ReoptResult reoptimize_general(const ProblemInstance& p, const Allocation& x_opt,
                               const std::vector<std::int64_t>& t_new, std::int64_t d_new);

}  // namespace pmx
