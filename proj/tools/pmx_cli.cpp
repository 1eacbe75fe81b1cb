// Command-line front end for libpmx. Everything of substance happens behind
// the C API; this file only shuffles files, flags and exit codes.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>

#include "pmx.h"

namespace {

struct CommonFlags {
  bool oracle = false;
  bool trace = false;
  bool timing = false;
  std::uint64_t seed = 1;
  std::int64_t budget_ground = 6;
  std::int64_t budget_demand = 6;
  std::int64_t budget_points = 1'000'000;
  std::string out_file;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_flag("--oracle", flags.oracle, "Route through the brute-force reference paths");
  cmd->add_flag("--trace", flags.trace, "Include the full trace in the report");
  cmd->add_flag("--timing", flags.timing, "Include wall time (reports stop being byte-stable)");
  cmd->add_option("--seed", flags.seed, "Random seed (selftest)");
  cmd->add_option("--budget-ground", flags.budget_ground, "Enumeration cap: ground-set size");
  cmd->add_option("--budget-demand", flags.budget_demand, "Enumeration cap: demand");
  cmd->add_option("--budget-points", flags.budget_points, "Enumeration cap: points");
  cmd->add_option("--out", flags.out_file, "Also write the report to this file");
}

std::string options_json(const CommonFlags& flags) {
  nlohmann::json j{{"oracle", flags.oracle},
                   {"trace", flags.trace},
                   {"timing", flags.timing},
                   {"seed", flags.seed},
                   {"budget",
                    {{"max_ground", flags.budget_ground},
                     {"max_demand", flags.budget_demand},
                     {"max_points", flags.budget_points}}}};
  return j.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write \"" + path + "\"");
  out << content;
}

int exit_code(pmx_status status) {
  switch (status) {
    case PMX_OK: return 0;
    case PMX_INFEASIBLE: return 1;
    case PMX_INPUT_ERROR: return 2;
    case PMX_CAPACITY: return 2;
    case PMX_INTERNAL_ERROR: return 3;
  }
  return 3;
}

// Prints the report, honors --out, frees the string.
int deliver(pmx_status status, char* report, const CommonFlags& flags) {
  if (report) {
    std::fputs(report, stdout);
    if (!flags.out_file.empty()) write_file(flags.out_file, report);
    pmx_string_free(report);
  }
  if (status != PMX_OK && status != PMX_INFEASIBLE)
    std::fprintf(stderr, "pmx: %s: %s\n", pmx_status_name(status), pmx_last_error());
  return exit_code(status);
}

struct InstanceHandle {
  pmx_instance* ptr = nullptr;
  ~InstanceHandle() { pmx_instance_free(ptr); }
};

struct GameHandle {
  pmx_game* ptr = nullptr;
  ~GameHandle() { pmx_game_free(ptr); }
};

int fail_parse(pmx_status status) {
  std::fprintf(stderr, "pmx: %s: %s\n", pmx_status_name(status), pmx_last_error());
  return exit_code(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polymatroid base-polytope optimization, reoptimization and equilibria"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pmx_version());

  std::string file;
  std::vector<std::string> t_inc, t_dec;
  std::int64_t d_target = -1;
  std::string emit_prefix;
  CommonFlags flags;

  auto* cmd_solve = app.add_subcommand("solve", "Minimize over the base polytope");
  cmd_solve->add_option("file", file, "Instance file")->required();
  add_common(cmd_solve, flags);

  auto* cmd_reopt = app.add_subcommand("reopt", "Reoptimize after parameter / rank shifts");
  cmd_reopt->add_option("file", file, "Instance file")->required();
  cmd_reopt->add_option("--t-inc", t_inc, "Element label to raise t on (repeatable)");
  cmd_reopt->add_option("--t-dec", t_dec, "Element label to lower t on (repeatable)");
  cmd_reopt->add_option("--d", d_target, "Target rank");
  add_common(cmd_reopt, flags);

  auto* cmd_pne = app.add_subcommand("pne", "Compute a pure equilibrium");
  cmd_pne->add_option("file", file, "Game file")->required();
  add_common(cmd_pne, flags);

  auto* cmd_check = app.add_subcommand("check", "Property battery for an instance or game");
  cmd_check->add_option("file", file, "Instance or game file")->required();
  add_common(cmd_check, flags);

  auto* cmd_cx = app.add_subcommand("counterexample",
                                    "Build the violation instance and game for a "
                                    "non-submodular rank function");
  cmd_cx->add_option("file", file, "Rank or instance file")->required();
  cmd_cx->add_option("--emit-prefix", emit_prefix,
                     "Write <prefix>.instance.json, <prefix>.game.json and "
                     "<prefix>.certificate.json");
  add_common(cmd_cx, flags);

  auto* cmd_selftest = app.add_subcommand("selftest", "Randomized acceptance battery");
  add_common(cmd_selftest, flags);

  CLI11_PARSE(app, argc, argv);

  try {
    const std::string opts = options_json(flags);

    if (cmd_solve->parsed() || cmd_reopt->parsed() || cmd_check->parsed() ||
        cmd_pne->parsed() || cmd_cx->parsed()) {
      const std::string text = read_file(file);

      if (cmd_cx->parsed()) {
        char* report = nullptr;
        const pmx_status st = pmx_counterexample(text.data(), text.size(), opts.c_str(), &report);
        if (report && !emit_prefix.empty() && st == PMX_OK) {
          const auto doc = nlohmann::json::parse(report);
          write_file(emit_prefix + ".instance.json", doc["emit"]["instance"].dump(2) + "\n");
          write_file(emit_prefix + ".game.json", doc["emit"]["game"].dump(2) + "\n");
          write_file(emit_prefix + ".certificate.json",
                     doc["result"]["certificate"].dump(2) + "\n");
        }
        return deliver(st, report, flags);
      }

      if (cmd_pne->parsed()) {
        GameHandle game;
        if (const auto st = pmx_game_parse(text.data(), text.size(), &game.ptr); st != PMX_OK)
          return fail_parse(st);
        char* report = nullptr;
        const pmx_status st = pmx_pne(game.ptr, opts.c_str(), &report);
        return deliver(st, report, flags);
      }

      if (cmd_check->parsed()) {
        // The check command takes either document kind; dispatch on "schema".
        std::string schema;
        try {
          schema = nlohmann::json::parse(text).value("schema", "");
        } catch (const nlohmann::json::parse_error& e) {
          std::fprintf(stderr, "pmx: input-error: %s\n", e.what());
          return 2;
        }
        if (schema == "pmx-game-v1") {
          GameHandle game;
          if (const auto st = pmx_game_parse(text.data(), text.size(), &game.ptr); st != PMX_OK)
            return fail_parse(st);
          char* report = nullptr;
          const pmx_status st = pmx_check_game(game.ptr, opts.c_str(), &report);
          return deliver(st, report, flags);
        }
        InstanceHandle inst;
        if (const auto st = pmx_instance_parse(text.data(), text.size(), &inst.ptr);
            st != PMX_OK)
          return fail_parse(st);
        char* report = nullptr;
        const pmx_status st = pmx_check_instance(inst.ptr, opts.c_str(), &report);
        return deliver(st, report, flags);
      }

      InstanceHandle inst;
      if (const auto st = pmx_instance_parse(text.data(), text.size(), &inst.ptr); st != PMX_OK)
        return fail_parse(st);
      char* report = nullptr;
      if (cmd_solve->parsed()) {
        const pmx_status st = pmx_solve(inst.ptr, opts.c_str(), &report);
        return deliver(st, report, flags);
      }

      nlohmann::json shift;
      if (!t_inc.empty()) shift["t_inc"] = t_inc;
      if (!t_dec.empty()) shift["t_dec"] = t_dec;
      if (d_target >= 0) shift["d"] = d_target;
      const std::string shift_text = shift.is_null() ? "{}" : shift.dump();
      const pmx_status st = pmx_reopt(inst.ptr, shift_text.c_str(), opts.c_str(), &report);
      return deliver(st, report, flags);
    }

    // selftest
    char* report = nullptr;
    const pmx_status st = pmx_selftest(opts.c_str(), &report);
    if (report) {
      const auto doc = nlohmann::json::parse(report);
      for (const auto& c : doc["result"]["criteria"])
        std::fprintf(stderr, "criterion %-32s %s (%lld cases, %lld ms)%s%s\n",
                     c["name"].get<std::string>().c_str(),
                     c["pass"].get<bool>() ? "PASS" : "FAIL",
                     static_cast<long long>(c["cases"].get<std::int64_t>()),
                     static_cast<long long>(c["millis"].get<std::int64_t>()),
                     c["pass"].get<bool>() ? "" : " — ",
                     c["pass"].get<bool>() ? "" : c["detail"].get<std::string>().c_str());
    }
    return deliver(st, report, flags);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "pmx: %s\n", e.what());
    return 2;
  }
}
