#include "helpers.hpp"
#include "core/io.hpp"
#include "core/report.hpp"

using namespace pmx;
using namespace pmx::testing;

namespace {

const char* kTinyInstance = R"({
  "schema": "pmx-instance-v1",
  "ground_set": ["a", "b"],
  "rank": {"kind": "singleton-cover", "members": ["a", "b"], "demand": 8},
  "d": 2,
  "t": {"b": 1},
  "costs": {"*": {"family": "polynomial", "sum_coeffs": [], "x_coeffs": ["0", "0", "1"]}}
})";

std::string canonical_rank_text() {
  const RankFunction f = canonical_violation();
  Json j{{"schema", kRankSchema},
         {"ground_set", f.ground().labels()},
         {"rank", rank_to_json(f)}};
  return j.dump();
}

}  // namespace

TEST_CASE("instances parse with defaults and per-element overrides") {
  const ProblemInstance p = parse_instance(kTinyInstance);
  CHECK(p.base.d == 2);
  CHECK(p.t == std::vector<std::int64_t>({0, 1}));
  CHECK(p.costs[0].value(2, 0) == ExactValue(4));
  CHECK(solve(p) == alloc({1, 1}));
}

TEST_CASE("unknown fields and labels are rejected with their path") {
  std::string text = kTinyInstance;
  text.insert(text.rfind('}'), R"(, "extra": 1)");
  CHECK_THROWS_WITH_AS(parse_instance(text), doctest::Contains("extra"), InputError);

  const char* bad_label = R"({
    "schema": "pmx-instance-v1",
    "ground_set": ["a"],
    "rank": {"kind": "singleton-cover", "members": ["a"], "demand": 2},
    "d": 1,
    "t": {"zz": 1},
    "costs": {"*": {"family": "mm1", "u": 2}}
  })";
  CHECK_THROWS_WITH_AS(parse_instance(bad_label), doctest::Contains("zz"), InputError);

  CHECK_THROWS_AS(parse_instance("{"), InputError);
  CHECK_THROWS_AS(parse_instance(R"({"schema": "nope"})"), InputError);
}

TEST_CASE("explicit tables require every non-empty subset exactly once") {
  const char* missing = R"({
    "schema": "pmx-rank-v1",
    "ground_set": ["a", "b"],
    "rank": {"kind": "explicit-table", "table": [{"subset": ["a"], "value": 1}]}
  })";
  CHECK_THROWS_WITH_AS(parse_rank_input(missing), doctest::Contains("missing subset"),
                       InputError);
}

TEST_CASE("instances round-trip bit-exactly through serialization") {
  Rng rng(61);
  for (int i = 0; i < 25; ++i) {
    const ProblemInstance p = random_instance(rng, 4, 4, 3, true);
    const std::string text = instance_to_json(p).dump();
    const ProblemInstance q = parse_instance(text);
    CHECK(q.base.d == p.base.d);
    CHECK(q.t == p.t);
    for (SubsetMask u = 0; u <= full_mask(p.size()); ++u)
      CHECK(q.base.f.value(u) == p.base.f.value(u));
    for (int e = 0; e < p.size(); ++e)
      for (std::int64_t x = 0; x <= 2; ++x)
        for (std::int64_t t = 0; t <= 2; ++t)
          CHECK(q.costs[e].value(x, t) == p.costs[e].value(x, t));
    CHECK(instance_to_json(q).dump() == text);
  }
}

TEST_CASE("games round-trip through serialization") {
  Rng rng(62);
  for (int i = 0; i < 10; ++i) {
    const Game g = random_polymatroid_game(rng, 3, 4, 3);
    const Game h = parse_game(game_to_json(g).dump());
    REQUIRE(h.num_players() == g.num_players());
    for (int pl = 0; pl < g.num_players(); ++pl) {
      CHECK(h.players[pl].demand == g.players[pl].demand);
      for (SubsetMask u = 0; u <= full_mask(g.resources.size()); ++u)
        CHECK(h.players[pl].rank.value(u) == g.players[pl].rank.value(u));
    }
    CHECK(game_to_json(h).dump() == game_to_json(g).dump());
  }
}

TEST_CASE("constructor game files build through the special-case reductions") {
  const char* singleton = R"({
    "schema": "pmx-game-v1",
    "kind": "singleton-integer-splittable",
    "resources": ["r0", "r1"],
    "shared_costs": {"*": {"kind": "poly", "coeffs": ["0", "1"]}},
    "players": [
      {"name": "p0", "members": ["r0", "r1"], "demand": 2},
      {"name": "p1", "members": ["r0", "r1"], "demand": 2}
    ]
  })";
  const Game g = parse_game(singleton);
  CHECK(g.players[0].rank.value(0b01) == 2);
  CHECK(is_pne(g, compute_pne(g).profile, {}));

  const char* matroid = R"({
    "schema": "pmx-game-v1",
    "kind": "matroid-congestion",
    "resources": ["ab", "bc", "ac"],
    "players": [
      {"name": "p0", "members": ["ab", "bc", "ac"],
       "matroid": {"kind": "graphic-matroid", "vertices": 3, "edges": [[0,1],[1,2],[0,2]]},
       "costs": {"*": {"kind": "poly", "coeffs": ["0", "1"]}}}
    ]
  })";
  const Game m = parse_game(matroid);
  CHECK(m.players[0].demand == 2);
  CHECK(is_pne(m, compute_pne(m).profile, {}));
}

TEST_CASE("reports are deterministic and carry their assertion list") {
  const RunOptions opts;
  const Json a = run_solve(kTinyInstance, opts);
  const Json b = run_solve(kTinyInstance, opts);
  CHECK(a.dump() == b.dump());
  CHECK(a.at("status") == "ok");
  CHECK(a.at("result").at("objective") == "2");
  CHECK(a.at("input_digest").get<std::string>().rfind("fnv1a64:", 0) == 0);
  bool saw_certificate = false;
  for (const auto& item : a.at("assertions")) {
    CHECK(item.at("ok").get<bool>());
    if (item.at("name") == "optimality_certificate") saw_certificate = true;
  }
  CHECK(saw_certificate);
  CHECK_FALSE(a.contains("wall_ms"));
}

TEST_CASE("solve reports route through the enumeration reference on request") {
  RunOptions opts;
  opts.oracle = true;
  const Json a = run_solve(kTinyInstance, opts);
  CHECK(a.at("result").at("objective") == "2");
  CHECK(a.at("options").at("oracle") == true);
}

TEST_CASE("infeasible instances produce an infeasible report") {
  std::string text = kTinyInstance;
  const auto pos = text.find("\"d\": 2");
  text.replace(pos, 6, "\"d\": 9");
  const Json report = run_solve(text, {});
  CHECK(report.at("status") == "infeasible");
  CHECK(report_exit_status(report) == 1);
}

TEST_CASE("reopt reports check the distance and trace bounds") {
  ShiftSpec shift;
  shift.t_inc = {"a"};
  shift.d = 3;
  const Json report = run_reopt(kTinyInstance, shift, {});
  CHECK(report.at("status") == "ok");
  CHECK(report.at("result").at("distance_bound") == 3);  // 2*1 + 1
  CHECK(report.at("result").at("trace_bound") == 2);
  CHECK(report.at("result").at("fallback_resolves") == 0);
}

TEST_CASE("check reports name the violating pair of a non-submodular rank") {
  const RankFunction f = canonical_violation();
  Json costs = Json::object();
  costs["*"] = Json{{"family", "mm1"}, {"u", 3}};
  const std::string text = Json{{"schema", kInstanceSchema},
                                {"ground_set", f.ground().labels()},
                                {"rank", rank_to_json(f)},
                                {"d", 2},
                                {"t", Json::object()},
                                {"costs", costs}}
                               .dump();
  const Json report = run_check(text, {});
  CHECK(report.at("result").at("kind") == "instance");
  CHECK(report.at("result").at("rank").at("submodular") == false);
  const auto& witness = report.at("result").at("rank").at("submodularity_witness");
  CHECK(witness.at("s") == Json::array({"2", "3"}));
  CHECK(witness.at("t") == Json::array({"2", "4"}));
}

TEST_CASE("counterexample reports embed the emitted documents") {
  const Json report = run_counterexample(canonical_rank_text(), {});
  CHECK(report.at("status") == "ok");
  CHECK(report.at("result").at("certificate").at("parameter_shift_distance") == 4);
  CHECK(report.at("result").at("certificate").at("rank_shift_distance") == 3);

  // The emitted documents parse back and reproduce the certificate.
  const ProblemInstance inst = parse_instance(report.at("emit").at("instance").dump());
  CHECK(inst.base.d == 2);
  const Game game = parse_game(report.at("emit").at("game").dump());
  EnumerationBudget wide;
  wide.max_ground = game.resources.size();
  CHECK_FALSE(brute_pne(game, wide).has_value());
}

TEST_CASE("pne reports summarize rounds and moves") {
  const char* game_text = R"({
    "schema": "pmx-game-v1",
    "kind": "singleton-integer-splittable",
    "resources": ["r0", "r1"],
    "shared_costs": {"*": {"kind": "poly", "coeffs": ["0", "1"]}},
    "players": [
      {"name": "p0", "members": ["r0", "r1"], "demand": 2},
      {"name": "p1", "members": ["r0", "r1"], "demand": 2}
    ]
  })";
  const Json report = run_pne(game_text, {});
  CHECK(report.at("status") == "ok");
  CHECK(report.at("result").at("rounds") == 4);
  CHECK(report.at("result").at("verified") == "exhaustive");

  RunOptions oracle;
  oracle.oracle = true;
  const Json via_oracle = run_pne(game_text, oracle);
  CHECK(via_oracle.at("status") == "ok");
}
