/* pmx — exact optimization over integral polymatroid base polytopes:
 * greedy solving, local reoptimization under parameter and rank shifts,
 * pure-equilibrium computation for polymatroid congestion games, and the
 * constructive counterexamples available on non-submodular regions.
 *
 * The C surface works on opaque handles and JSON documents. Every run
 * function produces a deterministic JSON report (free it with
 * pmx_string_free); on errors, pmx_last_error() describes the failure.
 */
#ifndef PMX_H
#define PMX_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pmx_status {
  PMX_OK = 0,
  PMX_INFEASIBLE = 1,     /* empty base polytope / absent equilibrium */
  PMX_INPUT_ERROR = 2,    /* parse, validation or precondition failure */
  PMX_INTERNAL_ERROR = 3, /* a certified invariant failed: a library bug */
  PMX_CAPACITY = 4        /* enumeration budget exceeded */
} pmx_status;

typedef struct pmx_instance pmx_instance;
typedef struct pmx_game pmx_game;

const char* pmx_version(void);
const char* pmx_status_name(pmx_status status);

/* Message for the most recent failure on this thread; empty when the last
 * call succeeded. The pointer stays valid until the next pmx call. */
const char* pmx_last_error(void);

void pmx_string_free(char* s);

/* Parse and validate documents ("pmx-instance-v1" / "pmx-game-v1"). */
pmx_status pmx_instance_parse(const char* json, size_t len, pmx_instance** out);
void pmx_instance_free(pmx_instance* instance);
pmx_status pmx_game_parse(const char* json, size_t len, pmx_game** out);
void pmx_game_free(pmx_game* game);

/* options_json (NULL or "" for defaults):
 *   {"oracle":bool, "trace":bool, "timing":bool, "seed":N,
 *    "budget":{"max_ground":N,"max_demand":N,"max_points":N}}
 * Reports are also produced for PMX_INFEASIBLE outcomes. */
pmx_status pmx_solve(const pmx_instance* instance, const char* options_json,
                     char** report_json);

/* shift_json: {"t_inc":["label",...], "t_dec":["label",...], "d":N} */
pmx_status pmx_reopt(const pmx_instance* instance, const char* shift_json,
                     const char* options_json, char** report_json);

pmx_status pmx_check_instance(const pmx_instance* instance, const char* options_json,
                              char** report_json);
pmx_status pmx_check_game(const pmx_game* game, const char* options_json, char** report_json);

pmx_status pmx_pne(const pmx_game* game, const char* options_json, char** report_json);

/* Accepts a "pmx-rank-v1" or "pmx-instance-v1" document with a strictly
 * positive, monotone, non-submodular rank function. The report embeds the
 * constructed instance and game documents under "emit". */
pmx_status pmx_counterexample(const char* json, size_t len, const char* options_json,
                              char** report_json);

/* The full acceptance battery; one entry per criterion in the report. */
pmx_status pmx_selftest(const char* options_json, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* PMX_H */
