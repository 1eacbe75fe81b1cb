#include "pmx.h"

#include <cstring>
#include <new>
#include <string>

#include "core/report.hpp"

using namespace pmx;

struct pmx_instance {
  std::string text;
};

struct pmx_game {
  std::string text;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pmx_status status_of(const Error& e) {
  if (dynamic_cast<const InfeasibleError*>(&e)) return PMX_INFEASIBLE;
  if (dynamic_cast<const CapacityError*>(&e)) return PMX_CAPACITY;
  if (dynamic_cast<const InternalError*>(&e)) return PMX_INTERNAL_ERROR;
  return PMX_INPUT_ERROR;  // InputError, DomainError
}

template <typename Fn>
pmx_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PMX_INTERNAL_ERROR;
  }
}

pmx_status emit_report(Json report, char** report_json) {
  const int exit_class = report_exit_status(report);
  if (report_json) *report_json = dup_string(report.dump(2) + "\n");
  if (exit_class == 1) return PMX_INFEASIBLE;
  if (exit_class == 3) {
    g_last_error = "report status: " + report.at("status").get<std::string>();
    return PMX_INTERNAL_ERROR;
  }
  return PMX_OK;
}

std::string options_text(const char* options_json) {
  return options_json ? std::string(options_json) : std::string();
}

}  // namespace

extern "C" {

const char* pmx_version(void) { return "0.1.0"; }

const char* pmx_status_name(pmx_status status) {
  switch (status) {
    case PMX_OK: return "ok";
    case PMX_INFEASIBLE: return "infeasible";
    case PMX_INPUT_ERROR: return "input-error";
    case PMX_INTERNAL_ERROR: return "internal-error";
    case PMX_CAPACITY: return "capacity";
  }
  return "unknown";
}

const char* pmx_last_error(void) { return g_last_error.c_str(); }

void pmx_string_free(char* s) { delete[] s; }

pmx_status pmx_instance_parse(const char* json, size_t len, pmx_instance** out) {
  if (!json || !out) {
    g_last_error = "null argument";
    return PMX_INPUT_ERROR;
  }
  return guarded([&] {
    std::string text(json, len);
    parse_instance(text);  // validate eagerly
    *out = new pmx_instance{std::move(text)};
    return PMX_OK;
  });
}

void pmx_instance_free(pmx_instance* instance) { delete instance; }

pmx_status pmx_game_parse(const char* json, size_t len, pmx_game** out) {
  if (!json || !out) {
    g_last_error = "null argument";
    return PMX_INPUT_ERROR;
  }
  return guarded([&] {
    std::string text(json, len);
    parse_game(text);  // validate eagerly
    *out = new pmx_game{std::move(text)};
    return PMX_OK;
  });
}

void pmx_game_free(pmx_game* game) { delete game; }

pmx_status pmx_solve(const pmx_instance* instance, const char* options_json,
                     char** report_json) {
  if (!instance) {
    g_last_error = "null instance";
    return PMX_INPUT_ERROR;
  }
  return guarded([&] {
    return emit_report(run_solve(instance->text, parse_run_options(options_text(options_json))),
                       report_json);
  });
}

pmx_status pmx_reopt(const pmx_instance* instance, const char* shift_json,
                     const char* options_json, char** report_json) {
  if (!instance) {
    g_last_error = "null instance";
    return PMX_INPUT_ERROR;
  }
  return guarded([&] {
    return emit_report(
        run_reopt(instance->text, parse_shift_spec(shift_json ? shift_json : ""),
                  parse_run_options(options_text(options_json))),
        report_json);
  });
}

pmx_status pmx_check_instance(const pmx_instance* instance, const char* options_json,
                              char** report_json) {
  if (!instance) {
    g_last_error = "null instance";
    return PMX_INPUT_ERROR;
  }
  return guarded([&] {
    return emit_report(run_check(instance->text, parse_run_options(options_text(options_json))),
                       report_json);
  });
}

pmx_status pmx_check_game(const pmx_game* game, const char* options_json, char** report_json) {
  if (!game) {
    g_last_error = "null game";
    return PMX_INPUT_ERROR;
  }
  return guarded([&] {
    return emit_report(run_check(game->text, parse_run_options(options_text(options_json))),
                       report_json);
  });
}

pmx_status pmx_pne(const pmx_game* game, const char* options_json, char** report_json) {
  if (!game) {
    g_last_error = "null game";
    return PMX_INPUT_ERROR;
  }
  return guarded([&] {
    return emit_report(run_pne(game->text, parse_run_options(options_text(options_json))),
                       report_json);
  });
}

pmx_status pmx_counterexample(const char* json, size_t len, const char* options_json,
                              char** report_json) {
  if (!json) {
    g_last_error = "null input";
    return PMX_INPUT_ERROR;
  }
  return guarded([&] {
    return emit_report(run_counterexample(std::string(json, len),
                                          parse_run_options(options_text(options_json))),
                       report_json);
  });
}

pmx_status pmx_selftest(const char* options_json, char** report_json) {
  return guarded([&] {
    return emit_report(run_selftest_report(parse_run_options(options_text(options_json))),
                       report_json);
  });
}

}  // extern "C"
