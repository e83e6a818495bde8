/* moddiag.h -- C interface to the modular diagnosability toolkit.
 *
 * All objects are opaque handles created and destroyed by the library.
 * Functions return MODDIAG_OK or an error status; the last error message is
 * available per thread via moddiag_last_error(). Strings returned through
 * char** are owned by the caller and must be released with
 * moddiag_string_free().
 */
#ifndef MODDIAG_H
#define MODDIAG_H

#include <stddef.h>

#if defined _WIN32 || defined __CYGWIN__
#define MODDIAG_API __declspec(dllexport)
#else
#define MODDIAG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum moddiag_status {
  MODDIAG_OK = 0,
  MODDIAG_ERR_PARSE = 1,   /* malformed .fsm text */
  MODDIAG_ERR_MODEL = 2,   /* invalid automaton, partition, mask, ... */
  MODDIAG_ERR_USAGE = 3,   /* null handle or bad argument */
  MODDIAG_ERR_INTERNAL = 4
} moddiag_status;

typedef struct moddiag_automaton moddiag_automaton;
typedef struct moddiag_system moddiag_system;
typedef struct moddiag_report moddiag_report;

/* Message for the most recent failing call on this thread ("" if none). The
 * pointer stays valid until the next failing call on the same thread. */
MODDIAG_API const char* moddiag_last_error(void);

MODDIAG_API void moddiag_string_free(char* s);

/* ---- automata ---- */

/* Parses .fsm text (see the README for the format). */
MODDIAG_API moddiag_status moddiag_automaton_parse(const char* text, moddiag_automaton** out);
MODDIAG_API void moddiag_automaton_free(moddiag_automaton* a);

MODDIAG_API const char* moddiag_automaton_name(const moddiag_automaton* a);
MODDIAG_API int moddiag_automaton_state_count(const moddiag_automaton* a);
MODDIAG_API int moddiag_automaton_event_count(const moddiag_automaton* a);

/* Canonical .fsm text / Graphviz rendering. */
MODDIAG_API moddiag_status moddiag_automaton_serialize(const moddiag_automaton* a, char** out);
MODDIAG_API moddiag_status moddiag_automaton_dot(const moddiag_automaton* a, char** out);

/* Structural well-formedness: report lists violations and warnings; the
 * status is MODDIAG_OK even when violations exist (consult the report). */
MODDIAG_API moddiag_status moddiag_automaton_validate(const moddiag_automaton* a,
                                                      moddiag_report** out);

/* Synchronous composition of n automata (n >= 1). */
MODDIAG_API moddiag_status moddiag_compose(const moddiag_automaton* const* autos, size_t n,
                                           const char* result_name, moddiag_automaton** out);

/* Natural projection onto the named events. */
MODDIAG_API moddiag_status moddiag_project(const moddiag_automaton* a, const char* const* events,
                                           size_t n_events, moddiag_automaton** out);

/* ---- systems ---- */

MODDIAG_API moddiag_status moddiag_system_new(moddiag_system** out);
MODDIAG_API void moddiag_system_free(moddiag_system* s);
/* Copies the automaton into the system under its parsed name. */
MODDIAG_API moddiag_status moddiag_system_add(moddiag_system* s, const moddiag_automaton* a);
MODDIAG_API int moddiag_system_size(const moddiag_system* s);

/* ---- diagnosability ---- */

/* Twin-plant verifier for one module: pair-state space, verdict and, when the
 * module is not diagnosable, a witness. obs may be NULL/0 to use the module's
 * own observable events. The report carries a DOT rendering. */
MODDIAG_API moddiag_status moddiag_verifier(const moddiag_automaton* a, const char* const* obs,
                                            size_t n_obs, moddiag_report** out);

MODDIAG_API moddiag_status moddiag_check_local(const moddiag_automaton* a, moddiag_report** out);
MODDIAG_API moddiag_status moddiag_check_modular(const moddiag_system* s, moddiag_report** out);
/* partition: "a,b|c" (NULL means one block containing every module). */
MODDIAG_API moddiag_status moddiag_check_virtual(const moddiag_system* s, const char* partition,
                                                 moddiag_report** out);

/* ---- structural analysis and synthesis ---- */

MODDIAG_API moddiag_status moddiag_analyze(const moddiag_automaton* faulty,
                                           const moddiag_automaton* candidate, int strict,
                                           moddiag_report** out);

/* exhaustive = 0 for the greedy search. max_modules caps the exhaustive
 * enumeration (pass 0 for the default). */
MODDIAG_API moddiag_status moddiag_synthesize(const moddiag_system* s, int exhaustive,
                                              int max_modules, moddiag_report** out);

/* ---- reports ---- */

/* Suggested process exit code: 0 pass, 1 fail. */
MODDIAG_API int moddiag_report_exit_code(const moddiag_report* r);
MODDIAG_API moddiag_status moddiag_report_text(const moddiag_report* r, char** out);
MODDIAG_API moddiag_status moddiag_report_json(const moddiag_report* r, char** out);
/* Empty string when the command produced no graph. */
MODDIAG_API moddiag_status moddiag_report_dot(const moddiag_report* r, char** out);
MODDIAG_API void moddiag_report_free(moddiag_report* r);

#ifdef __cplusplus
}
#endif

#endif /* MODDIAG_H */
