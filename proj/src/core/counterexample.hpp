#pragma once

#include <vector>

#include "core/game.hpp"
#include "core/oracle.hpp"

namespace pmx {

// A tightened two-unit region with a recorded submodularity violation.
// The tightened function describes the same set of two-unit points, every
// constraint is attained by some point, values on non-empty sets are at most
// 2, and the violating pair satisfies f(S)=f(T)=f(S&T)=1, f(S|T)=2.
struct TightenedViolation {
  RankFunction tightened;
  SubsetMask s = 0;
  SubsetMask t = 0;
  std::vector<Allocation> region;  // the two-unit points, lexicographic
};

// Tightens f at rank 2 and locates the lexicographically smallest violating
// pair. InputError when f is submodular (no counterexample exists), not
// strictly positive, has an empty two-unit region, or when the tightened
// function turns out submodular (the region is a polymatroid after all and
// no counterexample exists for it). Only rank 2 is supported: with a single
// unit every strictly positive region is a polymatroid region.
TightenedViolation tighten_to_violation(const RankFunction& f, std::int64_t rank = 2,
                                        const EnumerationBudget& budget = {});

// Four distinct elements around a violation (S, T), with the two witness
// points that must exist: x = outside + core uses the one permitted unit of
// S&T plus an element outside S|T; y = left + right fills S|T with one unit
// on each side. Every other two-unit point supported inside the quadruple
// uses the outside element.
struct CriticalQuadruple {
  int outside;  // element of E minus (S|T)
  int core;     // element of S&T
  int left;     // element of S minus T
  int right;    // element of T minus S
  Allocation x_witness;
  Allocation y_witness;
};

CriticalQuadruple find_critical_quadruple(const TightenedViolation& tv);

// Instance family on which a one-unit parameter change moves every optimum
// by four units, and a one-unit rank change by three: quadratic costs on the
// quadruple (with a half-unit usage surcharge on left/right), linear cost 20
// per unit elsewhere. All optima are certified unique by enumeration.
struct SensitivityCounterexample {
  TightenedViolation violation;
  CriticalQuadruple quad;
  ProblemInstance instance;             // t = 0, d = 2
  std::vector<std::int64_t> t_base;     // all-zero
  std::vector<std::int64_t> t_shifted;  // one unit on the outside element
  Allocation opt_base;                  // unique optimum at (t_base, 2)
  Allocation opt_shifted;               // unique optimum at (t_shifted, 2)
  Allocation opt_low;                   // unique optimum at (t_shifted, 1)
  std::int64_t t_shift_distance = 0;    // 4 > 2
  std::int64_t d_shift_distance = 0;    // 3 > 1
};

SensitivityCounterexample build_sensitivity_counterexample(const RankFunction& f,
                                                           const EnumerationBudget& budget = {});

// Two-player game, both strategy sets isomorphic to the two-unit region of
// f, with no pure equilibrium. The players' quadruples interleave on four
// shared resources; everything else lands on per-player private resources
// at a prohibitive linear cost. Absence is certified by exhaustive search.
struct NoPneGame {
  TightenedViolation violation;
  CriticalQuadruple quad;
  Game game;
  std::int64_t profiles_examined = 0;
};

NoPneGame build_no_pne_game(const RankFunction& f, const EnumerationBudget& budget = {});

}  // namespace pmx
