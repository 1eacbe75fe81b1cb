#include "core/instance.hpp"

#include <string>

namespace pmx {

ProblemInstance::ProblemInstance(BasePolytope b, std::vector<std::int64_t> t_,
                                 std::vector<CostFunction> c)
    : base(std::move(b)), t(std::move(t_)), costs(std::move(c)) {
  const std::size_t m = base.f.ground().size();
  if (t.size() != m) throw InputError("instance: t must index the ground set");
  if (costs.size() != m) throw InputError("instance: one cost per element required");
  if (base.d < 0) throw InputError("instance: d must be nonnegative");
  for (auto v : t)
    if (v < 0) throw InputError("instance: t entries must be nonnegative");
}

ProblemInstance ProblemInstance::with_t(std::vector<std::int64_t> t_new) const {
  return ProblemInstance(base, std::move(t_new), costs);
}

ProblemInstance ProblemInstance::with_d(std::int64_t d_new) const {
  return ProblemInstance(BasePolytope{base.f, d_new}, t, costs);
}

ExactValue objective(const ProblemInstance& p, const Allocation& x) {
  if (x.size() != p.size()) throw DomainError("objective: allocation size mismatch");
  ExactValue sum(0);
  for (int e = 0; e < p.size(); ++e) sum += p.costs[e].value(x[e], p.t[e]);
  return sum;
}

void check_costs_regular(const ProblemInstance& p, std::int64_t x_max, std::int64_t t_margin) {
  if (x_max < 1) return;
  for (int e = 0; e < p.size(); ++e) {
    if (auto w = find_regularity_violation(p.costs[e], x_max, p.t[e] + t_margin)) {
      const char* cond = w->condition == RegularityWitness::Condition::DerivativeMonotone
                             ? "derivative-monotone"
                             : "shift-dominance";
      throw InputError("cost on element \"" + p.base.f.ground().label(e) +
                       "\" is not regular (" + cond + " fails at x=" + std::to_string(w->x) +
                       ", t=" + std::to_string(w->t) + ")");
    }
  }
}

}  // namespace pmx
