#pragma once

#include <cstdint>
#include <vector>

#include "core/cost.hpp"
#include "core/polytope.hpp"

namespace pmx {

// One parametrized minimization instance: distribute d units over the ground
// set inside the base polytope of f, paying sum_e C_e(x_e; t_e).
struct ProblemInstance {
  BasePolytope base;
  std::vector<std::int64_t> t;      // external load per element, >= 0
  std::vector<CostFunction> costs;  // one per element

  ProblemInstance(BasePolytope b, std::vector<std::int64_t> t_, std::vector<CostFunction> c);

  int size() const { return base.f.ground().size(); }

  ProblemInstance with_t(std::vector<std::int64_t> t_new) const;
  ProblemInstance with_d(std::int64_t d_new) const;
};

ExactValue objective(const ProblemInstance& p, const Allocation& x);

// Regularity of every per-element cost on the box [1..x_max] x [0..t_e+margin].
// Throws InputError naming the element and witness point on failure.
void check_costs_regular(const ProblemInstance& p, std::int64_t x_max, std::int64_t t_margin);

}  // namespace pmx
