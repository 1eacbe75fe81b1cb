#include "core/report.hpp"

#include <chrono>

#include "core/counterexample.hpp"
#include "core/selftest.hpp"

namespace pmx {

namespace {

using Clock = std::chrono::steady_clock;

class AssertionList {
 public:
  void check(const std::string& name, bool ok) {
    items_.push_back(Json{{"name", name}, {"ok", ok}});
    if (!ok) throw InternalError("assertion failed: " + name);
  }
  Json take() { return std::move(items_); }

 private:
  Json items_ = Json::array();
};

Json report_skeleton(const char* command, const std::string& input, const RunOptions& opts) {
  return Json{{"schema", kReportSchema},
              {"command", command},
              {"input_digest", input_digest(input)},
              {"options", Json{{"oracle", opts.oracle}, {"trace", opts.trace}, {"seed", opts.seed}}},
              {"status", "ok"}};
}

void finish(Json& report, AssertionList& assertions, const Clock::time_point& start,
            const RunOptions& opts) {
  report["assertions"] = assertions.take();
  if (opts.timing)
    report["wall_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

Json exact_or_inf(const ExactValue& v) { return v.str(); }

Json trace_to_json(const std::vector<TraceStep>& trace) {
  Json out = Json::array();
  for (const auto& step : trace) {
    Json j;
    switch (step.kind) {
      case TraceStep::Kind::Exchange:
        j["kind"] = "exchange";
        j["from"] = step.from;
        j["to"] = step.to;
        break;
      case TraceStep::Kind::Increment:
        j["kind"] = "increment";
        j["to"] = step.to;
        break;
      case TraceStep::Kind::Decrement:
        j["kind"] = "decrement";
        j["from"] = step.from;
        break;
    }
    j["after"] = allocation_to_json(step.after);
    j["objective_after"] = exact_or_inf(step.objective_after);
    j["d_after"] = step.d_after;
    out.push_back(std::move(j));
  }
  return out;
}

Json potentials_to_json(const std::vector<ExactValue>& potential) {
  Json out = Json::array();
  for (const auto& v : potential) out.push_back(v.str());
  return out;
}

}  // namespace

std::string input_digest(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RunOptions parse_run_options(const std::string& text) {
  RunOptions opts;
  if (text.empty()) return opts;
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("options: ") + e.what());
  }
  if (!j.is_object()) throw InputError("options: expected an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "oracle")
      opts.oracle = value.get<bool>();
    else if (key == "trace")
      opts.trace = value.get<bool>();
    else if (key == "timing")
      opts.timing = value.get<bool>();
    else if (key == "seed")
      opts.seed = value.get<std::uint64_t>();
    else if (key == "budget") {
      if (!value.is_object()) throw InputError("options.budget: expected an object");
      for (const auto& [bk, bv] : value.items()) {
        if (bk == "max_ground")
          opts.budget.max_ground = bv.get<int>();
        else if (bk == "max_demand")
          opts.budget.max_demand = bv.get<std::int64_t>();
        else if (bk == "max_points")
          opts.budget.max_points = bv.get<std::int64_t>();
        else
          throw InputError("options.budget: unknown field \"" + bk + "\"");
      }
    } else {
      throw InputError("options: unknown field \"" + key + "\"");
    }
  }
  return opts;
}

ShiftSpec parse_shift_spec(const std::string& text) {
  ShiftSpec spec;
  if (text.empty()) return spec;
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("shift: ") + e.what());
  }
  if (!j.is_object()) throw InputError("shift: expected an object");
  for (const auto& [key, value] : j.items()) {
    if (key == "t_inc" || key == "t_dec") {
      if (!value.is_array()) throw InputError("shift." + key + ": expected an array of labels");
      for (const auto& v : value)
        (key == "t_inc" ? spec.t_inc : spec.t_dec).push_back(v.get<std::string>());
    } else if (key == "d") {
      spec.d = value.get<std::int64_t>();
      if (*spec.d < 0) throw InputError("shift.d: expected a nonnegative integer");
    } else {
      throw InputError("shift: unknown field \"" + key + "\"");
    }
  }
  return spec;
}

Json run_solve(const std::string& input_text, const RunOptions& opts) {
  const auto start = Clock::now();
  const ProblemInstance p = parse_instance(input_text);
  Json report = report_skeleton("solve", input_text, opts);
  AssertionList assertions;
  try {
    Allocation x(p.size());
    ExactValue value(0);
    if (opts.oracle) {
      const BruteOptimum ref = brute_optimum(p, opts.budget);
      x = ref.x;
      value = ref.value;
      assertions.check("enumerated_point_is_feasible", member(p.base, x));
    } else {
      x = solve(p);
      value = objective(p, x);
      assertions.check("optimality_certificate", verify_optimal(p, x).optimal);
    }
    report["result"] = Json{{"allocation", allocation_to_json(x)},
                            {"elements", p.base.f.ground().labels()},
                            {"objective", value.str()},
                            {"objective_infinite", value.is_infinite()}};
  } catch (const InfeasibleError& e) {
    report["status"] = "infeasible";
    report["result"] = Json{{"error", e.what()}};
  }
  finish(report, assertions, start, opts);
  return report;
}

Json run_reopt(const std::string& input_text, const ShiftSpec& shift, const RunOptions& opts) {
  const auto start = Clock::now();
  const ProblemInstance p = parse_instance(input_text);
  Json report = report_skeleton("reopt", input_text, opts);
  AssertionList assertions;
  try {
    const Allocation x0 = solve(p);
    auto t_new = p.t;
    for (const auto& label : shift.t_inc) ++t_new[p.base.f.ground().index(label)];
    for (const auto& label : shift.t_dec) {
      auto& v = t_new[p.base.f.ground().index(label)];
      if (v == 0) throw InputError("shift: t on \"" + label + "\" would drop below zero");
      --v;
    }
    const std::int64_t d_new = shift.d.value_or(p.base.d);

    const ReoptResult res = reoptimize_general(p, x0, t_new, d_new);
    std::int64_t t_dist = 0;
    for (int e = 0; e < p.size(); ++e) t_dist += std::abs(t_new[e] - p.t[e]);
    const std::int64_t d_dist = std::abs(d_new - p.base.d);
    const ProblemInstance target = p.with_t(t_new).with_d(d_new);

    assertions.check("final_optimality_certificate", verify_optimal(target, res.x).optimal);
    assertions.check("distance_within_bound",
                     res.x.l1_distance(x0) <= 2 * t_dist + d_dist);
    assertions.check("trace_within_bound",
                     static_cast<std::int64_t>(res.trace.size()) <= t_dist + d_dist);

    const ExactValue value = objective(target, res.x);
    report["result"] =
        Json{{"initial_allocation", allocation_to_json(x0)},
             {"initial_objective", objective(p, x0).str()},
             {"allocation", allocation_to_json(res.x)},
             {"elements", p.base.f.ground().labels()},
             {"objective", value.str()},
             {"objective_infinite", value.is_infinite()},
             {"distance", res.x.l1_distance(x0)},
             {"distance_bound", 2 * t_dist + d_dist},
             {"trace_length", res.trace.size()},
             {"trace_bound", t_dist + d_dist},
             {"fallback_resolves", res.fallbacks}};
    if (opts.trace) report["result"]["trace"] = trace_to_json(res.trace);
  } catch (const InfeasibleError& e) {
    report["status"] = "infeasible";
    report["result"] = Json{{"error", e.what()}};
  }
  finish(report, assertions, start, opts);
  return report;
}

namespace {

Json rank_properties(const RankFunction& f) {
  Json out;
  const auto sub = find_submodularity_violation(f);
  out["submodular"] = !sub.has_value();
  if (sub)
    out["submodularity_witness"] = Json{{"s", f.ground().label_list(sub->s)},
                                        {"t", f.ground().label_list(sub->t)}};
  const auto mono = find_monotonicity_violation(f);
  out["monotone_normalized"] = !mono.has_value();
  if (mono)
    out["monotonicity_witness"] = Json{{"u", f.ground().label_list(mono->u)},
                                       {"t", f.ground().label_list(mono->t)}};
  out["strictly_positive"] = is_strictly_positive(f);
  out["rank_of_all"] = f.value_of_all();
  return out;
}

Json cost_regularity(const GroundSet& ground, const std::vector<CostFunction>& costs,
                     const std::vector<std::int64_t>& t, std::int64_t x_max,
                     std::int64_t t_margin) {
  Json out = Json::array();
  for (int e = 0; e < ground.size(); ++e) {
    Json entry{{"element", ground.label(e)}};
    if (x_max >= 1) {
      const std::int64_t t_hi = t[e] + t_margin;
      const auto w = find_regularity_violation(costs[e], x_max, t_hi);
      entry["box"] = Json{{"x_max", x_max}, {"t_max", t_hi}};
      entry["regular"] = !w.has_value();
      if (w)
        entry["witness"] =
            Json{{"x", w->x},
                 {"t", w->t},
                 {"condition", w->condition == RegularityWitness::Condition::DerivativeMonotone
                                   ? "derivative-monotone"
                                   : "shift-dominance"}};
      else
        entry["discrete_convex"] = is_discrete_convex(costs[e], x_max, t_hi);
    } else {
      entry["note"] = "skipped: no units to place";
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace

Json run_check(const std::string& input_text, const RunOptions& opts) {
  const auto start = Clock::now();
  const std::string schema = peek_schema(input_text);
  Json report = report_skeleton("check", input_text, opts);
  AssertionList assertions;
  if (schema == kGameSchema) {
    const Game g = parse_game(input_text);
    Json players = Json::array();
    std::int64_t others_total = g.total_demand();
    for (const auto& p : g.players) {
      Json entry{{"name", p.name}, {"demand", p.demand}};
      entry["rank"] = rank_properties(p.rank);
      entry["costs"] = cost_regularity(g.resources, p.costs,
                                       std::vector<std::int64_t>(g.resources.size(), 0),
                                       p.demand, others_total - p.demand);
      players.push_back(std::move(entry));
    }
    report["result"] = Json{{"kind", "game"}, {"players", std::move(players)}};
  } else {
    const ProblemInstance p = parse_instance(input_text);
    report["result"] = Json{{"kind", "instance"},
                            {"rank", rank_properties(p.base.f)},
                            {"costs", cost_regularity(p.base.f.ground(), p.costs, p.t,
                                                      p.base.d, p.base.d)}};
  }
  finish(report, assertions, start, opts);
  return report;
}

Json run_pne(const std::string& input_text, const RunOptions& opts) {
  const auto start = Clock::now();
  const Game g = parse_game(input_text);
  Json report = report_skeleton("pne", input_text, opts);
  AssertionList assertions;

  auto profile_json = [&](const Profile& profile) {
    Json players = Json::array();
    for (int i = 0; i < g.num_players(); ++i)
      players.push_back(Json{{"name", g.players[i].name},
                             {"allocation", allocation_to_json(profile[i])},
                             {"cost", private_cost(g, profile, i).str()}});
    return Json{{"resources", g.resources.labels()}, {"players", std::move(players)}};
  };

  if (opts.oracle) {
    const auto found = brute_pne(g, opts.budget);
    if (!found) {
      report["status"] = "absent";
      report["result"] = Json{{"equilibrium", nullptr},
                              {"note", "exhaustive search found no pure equilibrium"}};
    } else {
      assertions.check("exhaustive_equilibrium_check",
                       !find_improving_deviation(g, *found, opts.budget));
      report["result"] = Json{{"profile", profile_json(*found)}};
    }
    finish(report, assertions, start, opts);
    return report;
  }

  const PneOutcome outcome = compute_pne(g);
  bool exhaustive = true;
  try {
    assertions.check("exhaustive_equilibrium_check",
                     !find_improving_deviation(g, outcome.profile, opts.budget));
  } catch (const CapacityError&) {
    exhaustive = false;
    bool all = true;
    for (int i = 0; i < g.num_players(); ++i) {
      const ProblemInstance inst = induced_instance(g, outcome.profile, i, g.players[i].demand);
      all = all && verify_optimal(inst, outcome.profile[i]).optimal;
    }
    assertions.check("certificate_equilibrium_check", all);
  }
  assertions.check("move_bound_total",
                   outcome.log.total_moves <= outcome.log.move_bound_total);

  const int m = g.resources.size();
  const std::int64_t delta_max = g.max_demand();
  Json rounds = Json::array();
  if (opts.trace) {
    for (const auto& round : outcome.log.rounds) {
      Json moves = Json::array();
      for (const auto& mv : round.moves)
        moves.push_back(Json{{"player", mv.player},
                             {"from", g.resources.label(mv.from)},
                             {"to", g.resources.label(mv.to)},
                             {"potential_before", potentials_to_json(mv.potential_before)},
                             {"potential_after", potentials_to_json(mv.potential_after)}});
      rounds.push_back(Json{{"raise_player", round.raise.player},
                            {"raise_resource", g.resources.label(round.raise.resource)},
                            {"moves", std::move(moves)}});
    }
  }
  report["result"] = Json{
      {"profile", profile_json(outcome.profile)},
      {"verified", exhaustive ? "exhaustive" : "certificate"},
      {"rounds", outcome.log.rounds.size()},
      {"improvement_moves", outcome.log.total_moves},
      {"move_bound_total", outcome.log.move_bound_total},
      {"move_bound_note",
       "n^2 m delta^3 = " +
           std::to_string(static_cast<std::int64_t>(g.num_players()) * g.num_players() * m *
                          delta_max * delta_max * delta_max)}};
  if (opts.trace) report["result"]["trace"] = std::move(rounds);
  finish(report, assertions, start, opts);
  return report;
}

Json run_counterexample(const std::string& input_text, const RunOptions& opts) {
  const auto start = Clock::now();
  const RankFunction f = parse_rank_input(input_text);
  Json report = report_skeleton("counterexample", input_text, opts);
  AssertionList assertions;

  const SensitivityCounterexample cx = build_sensitivity_counterexample(f, opts.budget);
  const NoPneGame nopne = build_no_pne_game(f, opts.budget);
  const GroundSet& ground = f.ground();

  assertions.check("parameter_shift_distance_is_4", cx.t_shift_distance == 4);
  assertions.check("rank_shift_distance_is_3", cx.d_shift_distance == 3);
  EnumerationBudget wide = opts.budget;
  wide.max_ground = std::max(wide.max_ground, nopne.game.resources.size());
  assertions.check("game_has_no_equilibrium", !brute_pne(nopne.game, wide).has_value());

  Json certificate{
      {"violating_pair",
       Json{{"s", ground.label_list(cx.violation.s)}, {"t", ground.label_list(cx.violation.t)}}},
      {"critical_elements", Json{{"outside", ground.label(cx.quad.outside)},
                                 {"core", ground.label(cx.quad.core)},
                                 {"left", ground.label(cx.quad.left)},
                                 {"right", ground.label(cx.quad.right)}}},
      {"region_size", cx.violation.region.size()},
      {"optimum_base", allocation_to_json(cx.opt_base)},
      {"optimum_base_objective", objective(cx.instance, cx.opt_base).str()},
      {"optimum_shifted", allocation_to_json(cx.opt_shifted)},
      {"optimum_shifted_objective",
       objective(cx.instance.with_t(cx.t_shifted), cx.opt_shifted).str()},
      {"optimum_single_unit", allocation_to_json(cx.opt_low)},
      {"parameter_shift_distance", cx.t_shift_distance},
      {"rank_shift_distance", cx.d_shift_distance},
      {"equilibrium_search", Json{{"profiles_examined", nopne.profiles_examined},
                                  {"equilibrium", nullptr}}}};

  report["result"] = Json{{"tightened_rank", rank_to_json(cx.violation.tightened)},
                          {"certificate", std::move(certificate)}};
  report["emit"] = Json{{"instance", instance_to_json(cx.instance)},
                        {"game", game_to_json(nopne.game)}};
  finish(report, assertions, start, opts);
  return report;
}

Json run_selftest_report(const RunOptions& opts) {
  const auto start = Clock::now();
  Json report = report_skeleton("selftest", "", opts);
  AssertionList assertions;
  const auto results = run_selftest(opts.seed);
  Json criteria = Json::array();
  bool all_pass = true;
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    criteria.push_back(Json{{"name", r.name},
                            {"pass", r.pass},
                            {"cases", r.cases},
                            {"detail", r.detail},
                            {"millis", r.millis}});
  }
  report["result"] = Json{{"criteria", std::move(criteria)}, {"all_pass", all_pass}};
  if (!all_pass) report["status"] = "failed";
  finish(report, assertions, start, opts);
  return report;
}

int report_exit_status(const Json& report) {
  const std::string status = report.at("status").get<std::string>();
  if (status == "ok") return 0;
  if (status == "infeasible" || status == "absent") return 1;
  return 3;
}

}  // namespace pmx
