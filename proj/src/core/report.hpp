#pragma once

#include <optional>
#include <string>

#include "core/io.hpp"

namespace pmx {

struct RunOptions {
  bool oracle = false;  // route through the brute-force reference paths
  bool trace = false;   // include full traces / potential dumps
  bool timing = false;  // include wall time (off by default: reports stay byte-identical)
  std::uint64_t seed = 1;
  EnumerationBudget budget;
};

// Options document: {"oracle":bool,"trace":bool,"timing":bool,"seed":N,
// "budget":{"max_ground":N,"max_demand":N,"max_points":N}}; empty means defaults.
RunOptions parse_run_options(const std::string& text);

struct ShiftSpec {
  std::vector<std::string> t_inc;  // element labels, one per unit increase
  std::vector<std::string> t_dec;
  std::optional<std::int64_t> d;
};

// {"t_inc":[labels],"t_dec":[labels],"d":N}
ShiftSpec parse_shift_spec(const std::string& text);

// Reports: deterministic JSON documents with the command echo, an input
// digest, the results with exact values as strings, and the list of
// assertions that were checked. An assertion that fails aborts report
// construction with InternalError, so a success report cannot carry a
// failed assertion. The "status" field is "ok", "infeasible" or "absent".
Json run_solve(const std::string& input_text, const RunOptions& opts);
Json run_reopt(const std::string& input_text, const ShiftSpec& shift, const RunOptions& opts);
Json run_check(const std::string& input_text, const RunOptions& opts);
Json run_pne(const std::string& input_text, const RunOptions& opts);
Json run_counterexample(const std::string& input_text, const RunOptions& opts);
Json run_selftest_report(const RunOptions& opts);

// Exit class of a finished report: 0 ok, 1 infeasible/absent, 3 failed.
int report_exit_status(const Json& report);

// FNV-1a 64 digest of the raw input bytes, as "fnv1a64:<hex>".
std::string input_digest(const std::string& text);

}  // namespace pmx
