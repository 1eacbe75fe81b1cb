#pragma once

#include <doctest.h>

#include "core/counterexample.hpp"
#include "core/selftest.hpp"

namespace pmx::testing {

// Triangle graph: edges ab, bc, ac over vertices {0,1,2}.
inline RankFunction k3_rank() {
  return RankFunction::graphic_matroid(GroundSet({"ab", "bc", "ac"}), 3,
                                       {{0, 1}, {1, 2}, {0, 2}});
}

// Unconstraining rank: f(U) = cap for non-empty U.
inline RankFunction uniform_rank(int m, std::int64_t cap) {
  const GroundSet g = GroundSet::indexed(m);
  return RankFunction::singleton_cover(g, full_mask(m), cap);
}

inline CostFunction square_of_usage() {  // x^2
  return CostFunction::polynomial({}, {ExactValue(0), ExactValue(0), ExactValue(1)});
}

inline CostFunction square_of_sum() {  // (x+t)^2
  return CostFunction::polynomial({ExactValue(0), ExactValue(0), ExactValue(1)}, {});
}

inline ProblemInstance two_element_square_instance(std::int64_t d) {
  return ProblemInstance(BasePolytope{uniform_rank(2, 8), d}, {0, 0},
                         {square_of_usage(), square_of_usage()});
}

inline Allocation alloc(std::vector<std::int64_t> v) { return Allocation(std::move(v)); }

}  // namespace pmx::testing
