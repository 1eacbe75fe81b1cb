// Black-box checks of the shared-library surface; links only libpmx.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "pmx.h"

namespace {

constexpr const char* kInstance = R"({
  "schema": "pmx-instance-v1",
  "ground_set": ["a", "b"],
  "rank": {"kind": "singleton-cover", "members": ["a", "b"], "demand": 8},
  "d": 2,
  "costs": {"*": {"family": "polynomial", "sum_coeffs": [], "x_coeffs": ["0", "0", "1"]}}
})";

constexpr const char* kGame = R"({
  "schema": "pmx-game-v1",
  "kind": "singleton-integer-splittable",
  "resources": ["r0", "r1"],
  "shared_costs": {"*": {"kind": "poly", "coeffs": ["0", "1"]}},
  "players": [
    {"name": "p0", "members": ["r0", "r1"], "demand": 2},
    {"name": "p1", "members": ["r0", "r1"], "demand": 2}
  ]
})";

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  pmx_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and status names are exposed") {
  CHECK(std::strlen(pmx_version()) > 0);
  CHECK(std::string(pmx_status_name(PMX_OK)) == "ok");
  CHECK(std::string(pmx_status_name(PMX_INTERNAL_ERROR)) == "internal-error");
}

TEST_CASE("instances parse, solve and free through the handle API") {
  pmx_instance* inst = nullptr;
  REQUIRE(pmx_instance_parse(kInstance, std::strlen(kInstance), &inst) == PMX_OK);
  char* report = nullptr;
  CHECK(pmx_solve(inst, nullptr, &report) == PMX_OK);
  const std::string text = take(report);
  CHECK(text.find("\"objective\": \"2\"") != std::string::npos);

  // Identical calls produce byte-identical reports.
  char* again = nullptr;
  CHECK(pmx_solve(inst, nullptr, &again) == PMX_OK);
  CHECK(take(again) == text);
  pmx_instance_free(inst);
}

TEST_CASE("parse failures set the error message and the input status") {
  pmx_instance* inst = nullptr;
  CHECK(pmx_instance_parse("{}", 2, &inst) == PMX_INPUT_ERROR);
  CHECK(std::strlen(pmx_last_error()) > 0);
  CHECK(pmx_instance_parse(kGame, std::strlen(kGame), &inst) == PMX_INPUT_ERROR);
}

TEST_CASE("reopt applies shifts passed as a JSON document") {
  pmx_instance* inst = nullptr;
  REQUIRE(pmx_instance_parse(kInstance, std::strlen(kInstance), &inst) == PMX_OK);
  char* report = nullptr;
  CHECK(pmx_reopt(inst, R"({"t_inc": ["a"], "d": 3})", nullptr, &report) == PMX_OK);
  CHECK(take(report).find("\"trace_bound\": 2") != std::string::npos);
  CHECK(pmx_reopt(inst, R"({"bogus": 1})", nullptr, &report) == PMX_INPUT_ERROR);
  pmx_instance_free(inst);
}

TEST_CASE("games compute equilibria and report the move counters") {
  pmx_game* game = nullptr;
  REQUIRE(pmx_game_parse(kGame, std::strlen(kGame), &game) == PMX_OK);
  char* report = nullptr;
  CHECK(pmx_pne(game, nullptr, &report) == PMX_OK);
  const std::string text = take(report);
  CHECK(text.find("\"improvement_moves\"") != std::string::npos);
  CHECK(pmx_check_game(game, nullptr, &report) == PMX_OK);
  take(report);
  pmx_game_free(game);
}

TEST_CASE("mangled documents error out instead of crashing") {
  const std::string base = kInstance;
  pmx_instance* inst = nullptr;
  // Every proper prefix is malformed.
  for (std::size_t len = 0; len < base.size(); len += 7) {
    if (pmx_instance_parse(base.data(), len, &inst) == PMX_OK) pmx_instance_free(inst);
  }
  // Single-byte corruptions either parse to something valid or error cleanly.
  pmx_game* game = nullptr;
  for (std::size_t i = 0; i < base.size(); i += 3) {
    std::string bad = base;
    bad[i] = '?';
    if (pmx_instance_parse(bad.data(), bad.size(), &inst) == PMX_OK) pmx_instance_free(inst);
    if (pmx_game_parse(bad.data(), bad.size(), &game) == PMX_OK) pmx_game_free(game);
  }
  CHECK(true);  // reaching here without a crash is the point
}

TEST_CASE("enumeration budgets flow through the options document") {
  pmx_instance* inst = nullptr;
  REQUIRE(pmx_instance_parse(kInstance, std::strlen(kInstance), &inst) == PMX_OK);
  char* report = nullptr;
  CHECK(pmx_solve(inst, R"({"oracle": true, "budget": {"max_points": 1}})", &report) ==
        PMX_CAPACITY);
  CHECK(std::string(pmx_last_error()).find("budget") != std::string::npos);
  CHECK(pmx_solve(inst, R"({"oracle": true})", &report) == PMX_OK);
  pmx_string_free(report);
  pmx_instance_free(inst);
}

TEST_CASE("the counterexample entry point emits instance and game documents") {
  const char* rank = R"({
    "schema": "pmx-rank-v1",
    "ground_set": ["1", "2", "3", "4"],
    "rank": {"kind": "explicit-table", "table": [
      {"subset": ["1"], "value": 2}, {"subset": ["2"], "value": 1},
      {"subset": ["1", "2"], "value": 2}, {"subset": ["3"], "value": 1},
      {"subset": ["1", "3"], "value": 2}, {"subset": ["2", "3"], "value": 1},
      {"subset": ["1", "2", "3"], "value": 2}, {"subset": ["4"], "value": 1},
      {"subset": ["1", "4"], "value": 2}, {"subset": ["2", "4"], "value": 1},
      {"subset": ["1", "2", "4"], "value": 2}, {"subset": ["3", "4"], "value": 2},
      {"subset": ["1", "3", "4"], "value": 2}, {"subset": ["2", "3", "4"], "value": 2},
      {"subset": ["1", "2", "3", "4"], "value": 2}
    ]}
  })";
  char* report = nullptr;
  REQUIRE(pmx_counterexample(rank, std::strlen(rank), nullptr, &report) == PMX_OK);
  const std::string text = take(report);
  CHECK(text.find("\"parameter_shift_distance\": 4") != std::string::npos);
  CHECK(text.find("\"rank_shift_distance\": 3") != std::string::npos);
  CHECK(text.find("\"emit\"") != std::string::npos);

  // A submodular input is an input error, not a crash.
  const char* submodular = R"({
    "schema": "pmx-rank-v1",
    "ground_set": ["x", "y"],
    "rank": {"kind": "singleton-cover", "members": ["x", "y"], "demand": 2}
  })";
  CHECK(pmx_counterexample(submodular, std::strlen(submodular), nullptr, &report) ==
        PMX_INPUT_ERROR);
  CHECK(std::string(pmx_last_error()).find("submodular") != std::string::npos);
}
