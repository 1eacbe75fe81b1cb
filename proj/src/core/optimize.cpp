#include "core/optimize.hpp"

#include <string>

namespace pmx {

namespace {

void require_feasible(const ProblemInstance& p, const Allocation& x, const char* who) {
  if (!member(p.base, x))
    throw DomainError(std::string(who) + ": allocation is not in the base polytope");
}

// Optimality that also covers saturated instances. The local certificate
// characterizes optimality whenever the minimum is finite; a feasible point
// with infinite cost is optimal exactly when a fresh greedy run is infinite
// too, so that case falls back to an exact objective comparison.
bool certified_or_exactly_optimal(const ProblemInstance& p, const Allocation& x) {
  if (verify_optimal(p, x).optimal) return true;
  if (!objective(p, x).is_infinite()) return false;
  return objective(p, solve(p)).is_infinite();
}

void require_optimal(const ProblemInstance& p, const Allocation& x, const char* who) {
  if (!certified_or_exactly_optimal(p, x))
    throw DomainError(std::string(who) + ": starting allocation is not optimal");
}

}  // namespace

bool is_optimal(const ProblemInstance& p, const Allocation& x) {
  return certified_or_exactly_optimal(p, x);
}

DeltaValue min_exchange_cost(const ProblemInstance& p, const Allocation& x, int e) {
  require_feasible(p, x, "min_exchange_cost");
  DeltaValue best{ExactValue::infinity(), std::nullopt};
  for (int g : exchange_targets(p.base, x, e)) {
    const ExactValue cost = p.costs[g].right_derivative(x[g], p.t[g]);
    if (!best.argmin || cost < best.value) {
      best.value = cost;
      best.argmin = g;
    }
  }
  return best;
}

OptimalityCheck verify_optimal(const ProblemInstance& p, const Allocation& x) {
  require_feasible(p, x, "verify_optimal");
  for (int e = 0; e < p.size(); ++e) {
    if (x[e] == 0) continue;
    const ExactValue drop = p.costs[e].left_derivative(x[e], p.t[e]);
    if (drop > min_exchange_cost(p, x, e).value) return {false, e};
  }
  return {true, std::nullopt};
}

namespace {

// One greedy increment: cheapest right derivative over the slack elements.
// Returns the chosen element, or nullopt when nothing can be added.
std::optional<int> cheapest_slack_increment(const ProblemInstance& p, const Allocation& x,
                                            std::int64_t reached) {
  const BasePolytope stage{p.base.f, reached};
  std::optional<int> best;
  ExactValue best_cost = ExactValue::infinity();
  for (int g : slack_elements(stage, x)) {
    const ExactValue cost = p.costs[g].right_derivative(x[g], p.t[g]);
    if (!best || cost < best_cost) {
      best = g;
      best_cost = cost;
    }
  }
  return best;
}

}  // namespace

Allocation solve(const ProblemInstance& p) {
  if (p.base.d > p.base.f.value_of_all())
    throw InfeasibleError("empty base polytope: d exceeds f(E)");
  Allocation x(p.size());
  for (std::int64_t placed = 0; placed < p.base.d; ++placed) {
    const auto g = cheapest_slack_increment(p, x, placed);
    if (!g)
      throw InfeasibleError("empty base polytope: no feasible increment at " +
                            std::to_string(placed) + " of " + std::to_string(p.base.d) +
                            " units");
    x = x.plus_unit(*g);
  }
  // A greedy result with finite cost must pass the certificate. An infinite
  // one is a saturated instance: every completion is infinite (a finite one
  // would have offered a finite marginal at each stage), so it is optimal
  // and returned flagged by its objective.
  if (!verify_optimal(p, x).optimal && !objective(p, x).is_infinite())
    throw InternalError("greedy result failed the optimality certificate");
  return x;
}

Allocation reoptimize_t_increase(const ProblemInstance& p, const Allocation& x_opt, int e) {
  require_optimal(p, x_opt, "reoptimize_t_increase");
  auto t_new = p.t;
  ++t_new[e];
  const ProblemInstance shifted = p.with_t(t_new);

  Allocation result = x_opt;
  const DeltaValue delta = min_exchange_cost(p, x_opt, e);
  if (delta.argmin) {
    const Allocation candidate = x_opt.exchanged(e, *delta.argmin);
    if (objective(shifted, candidate) < objective(shifted, x_opt)) result = candidate;
  }
  if (!certified_or_exactly_optimal(shifted, result))
    throw InternalError("reoptimize_t_increase: winner failed the optimality certificate");
  return result;
}

Allocation reoptimize_t_decrease(const ProblemInstance& p, const Allocation& x_opt, int e,
                                 bool* used_fallback) {
  if (p.t[e] < 1) throw DomainError("reoptimize_t_decrease: t is already zero on the element");
  require_optimal(p, x_opt, "reoptimize_t_decrease");
  auto t_new = p.t;
  --t_new[e];
  const ProblemInstance shifted = p.with_t(t_new);

  // Pull one unit onto e from the costliest feasible donor.
  std::optional<int> donor;
  ExactValue donor_cost(0);
  const Allocation raised = x_opt.plus_unit(e);
  for (int g = 0; g < p.size(); ++g) {
    if (g == e || x_opt[g] == 0) continue;
    if (!member(p.base, raised.minus_unit(g))) continue;
    const ExactValue cost = p.costs[g].left_derivative(x_opt[g], p.t[g]);
    if (!donor || cost > donor_cost) {
      donor = g;
      donor_cost = cost;
    }
  }
  Allocation result = x_opt;
  if (donor) {
    const Allocation candidate = raised.minus_unit(*donor);
    if (objective(shifted, candidate) < objective(shifted, x_opt)) result = candidate;
  }
  if (certified_or_exactly_optimal(shifted, result)) return result;
  if (used_fallback) *used_fallback = true;
  return solve(shifted);
}

Allocation reoptimize_d(const ProblemInstance& p, const Allocation& x_opt, int step,
                        bool* used_fallback) {
  if (step != 1 && step != -1) throw DomainError("reoptimize_d: step must be +1 or -1");
  require_optimal(p, x_opt, "reoptimize_d");
  const ProblemInstance next = p.with_d(p.base.d + step);

  if (step == 1) {
    if (next.base.d > p.base.f.value_of_all())
      throw InfeasibleError("reoptimize_d: base polytope is empty at d+1");
    const auto g = cheapest_slack_increment(p, x_opt, p.base.d);
    if (!g) throw InfeasibleError("reoptimize_d: no slack element at d+1");
    const Allocation result = x_opt.plus_unit(*g);
    if (!certified_or_exactly_optimal(next, result))
      throw InternalError("reoptimize_d(+1): result failed the optimality certificate");
    return result;
  }

  if (p.base.d == 0) throw InfeasibleError("reoptimize_d: d is already zero");
  // Dropping any used unit stays feasible; the costliest drop is cheapest.
  std::optional<int> drop;
  ExactValue drop_cost(0);
  for (int e = 0; e < p.size(); ++e) {
    if (x_opt[e] == 0) continue;
    const ExactValue cost = p.costs[e].left_derivative(x_opt[e], p.t[e]);
    if (!drop || cost > drop_cost) {
      drop = e;
      drop_cost = cost;
    }
  }
  const Allocation result = x_opt.minus_unit(*drop);
  if (certified_or_exactly_optimal(next, result)) return result;
  if (used_fallback) *used_fallback = true;
  return solve(next);
}

ReoptResult reoptimize_general(const ProblemInstance& p, const Allocation& x_opt,
                               const std::vector<std::int64_t>& t_new, std::int64_t d_new) {
  if (t_new.size() != static_cast<std::size_t>(p.size()))
    throw InputError("reoptimize_general: t has the wrong length");
  for (auto v : t_new)
    if (v < 0) throw InputError("reoptimize_general: t entries must be nonnegative");
  if (d_new < 0) throw InputError("reoptimize_general: d must be nonnegative");
  require_optimal(p, x_opt, "reoptimize_general");

  ReoptResult out{x_opt, {}, 0};
  ProblemInstance cur = p;

  auto record = [&](TraceStep::Kind kind, int from, int to) {
    out.trace.push_back(TraceStep{kind, from, to, out.x, objective(cur, out.x), cur.t,
                                  cur.base.d});
  };

  // Rank shifts first, one unit at a time.
  while (cur.base.d != d_new) {
    const int step = d_new > cur.base.d ? 1 : -1;
    const std::int64_t d_next = cur.base.d + step;
    if (d_next > cur.base.f.value_of_all())
      throw InfeasibleError("reoptimize_general: base polytope is empty at d=" +
                            std::to_string(d_next));
    bool fell_back = false;
    const Allocation next = reoptimize_d(cur, out.x, step, &fell_back);
    if (fell_back) ++out.fallbacks;
    if (next.l1_distance(out.x) != 1)
      throw InternalError("reoptimize_general: rank shift was not an elementary step");
    cur = cur.with_d(d_next);
    if (step == 1) {
      int to = -1;
      for (int e = 0; e < p.size(); ++e)
        if (next[e] == out.x[e] + 1) to = e;
      out.x = next;
      record(TraceStep::Kind::Increment, -1, to);
    } else {
      int from = -1;
      for (int e = 0; e < p.size(); ++e)
        if (next[e] == out.x[e] - 1) from = e;
      out.x = next;
      record(TraceStep::Kind::Decrement, from, -1);
    }
  }

  // Parameter shifts: decreases then increases, ascending element order.
  for (int pass = 0; pass < 2; ++pass) {
    const bool decreasing = pass == 0;
    for (int e = 0; e < p.size(); ++e) {
      while (decreasing ? cur.t[e] > t_new[e] : cur.t[e] < t_new[e]) {
        bool fell_back = false;
        const Allocation next = decreasing
                                    ? reoptimize_t_decrease(cur, out.x, e, &fell_back)
                                    : reoptimize_t_increase(cur, out.x, e);
        if (fell_back) ++out.fallbacks;
        auto t_cur = cur.t;
        t_cur[e] += decreasing ? -1 : 1;
        cur = cur.with_t(t_cur);
        if (next != out.x) {
          if (next.l1_distance(out.x) != 2)
            throw InternalError("reoptimize_general: parameter shift was not an elementary step");
          int from = -1, to = -1;
          for (int g = 0; g < p.size(); ++g) {
            if (next[g] == out.x[g] - 1) from = g;
            if (next[g] == out.x[g] + 1) to = g;
          }
          out.x = next;
          record(TraceStep::Kind::Exchange, from, to);
        }
      }
    }
  }

  if (!certified_or_exactly_optimal(cur, out.x))
    throw InternalError("reoptimize_general: final allocation failed the certificate");
  return out;
}

}  // namespace pmx
