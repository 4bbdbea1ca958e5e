#ifndef LEMMAFLOW_H
#define LEMMAFLOW_H

/* This file is generated by cbindgen from the lemmaflow-ffi crate; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Status code of a C API call.
 */
typedef enum LfStatus {
  LF_OK = 0,
  LF_NULL_ARGUMENT = 1,
  LF_INVALID_UTF8 = 2,
  LF_PARSE_ERROR = 3,
  LF_PLAN_ERROR = 4,
  LF_INVALID_ARGUMENT = 5,
  LF_INTERNAL_ERROR = 6,
} LfStatus;

/*
 A parsed and validated agent network (opaque).
 */
typedef struct LfNetwork LfNetwork;

/*
 The composed result of a lemma-flow proving run (opaque).
 */
typedef struct LfProof LfProof;

/*
 Search budgets for proving. All fields must be positive.
 */
typedef struct LfLimits {
  uint64_t max_clauses;
  uint64_t max_depth;
  uint64_t timeout_ms;
} LfLimits;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Version of the library, as a static NUL-terminated string.
 */
const char *lf_version(void);

/*
 Message of the last failure on the calling thread, or NULL if none.
 The pointer stays valid until the next failing call on this thread.
 */
const char *lf_last_error(void);

/*
 Parse and validate an agent network from NUL-terminated source text.
 On success stores a handle in `out`; free it with `lf_network_free`.

 # Safety
 `src` must point to a NUL-terminated string and `out` to writable
 pointer storage.
 */
enum LfStatus lf_network_parse(const char *src, struct LfNetwork **out);

/*
 Release a network handle. NULL is ignored.

 # Safety
 `net` must be NULL or a pointer obtained from `lf_network_parse`.
 */
void lf_network_free(struct LfNetwork *net);

/*
 Number of agents in the network; zero if `net` is NULL.

 # Safety
 `net` must be NULL or a live network handle.
 */
uintptr_t lf_network_agent_count(const struct LfNetwork *net);

/*
 Total number of knowledgebase entries across all agents.

 # Safety
 `net` must be NULL or a live network handle.
 */
uintptr_t lf_network_entry_count(const struct LfNetwork *net);

/*
 Render the network in canonical text form.

 # Safety
 `net` must be a live network handle and `out` writable pointer storage.
 */
enum LfStatus lf_network_render(const struct LfNetwork *net, char **out);

/*
 One-line summary of the network and its lemma plan: agent count, entry
 count, lemma task count and execution order.

 # Safety
 `net` must be a live network handle and `out` writable pointer storage.
 */
enum LfStatus lf_check_summary(const struct LfNetwork *net, char **out);

/*
 The default search budgets.
 */
struct LfLimits lf_limits_default(void);

/*
 Prove the network's query via lemma flow. `limits` may be NULL for the
 defaults; `jobs` is the number of concurrent prover tasks (0 means 1).
 On success stores a proof handle in `out`; free it with `lf_proof_free`.
 The call succeeds even when the goal is not proved; inspect the proof.

 # Safety
 `net` must be a live network handle, `limits` NULL or valid, and `out`
 writable pointer storage.
 */
enum LfStatus lf_prove(const struct LfNetwork *net,
                       const struct LfLimits *limits,
                       uint32_t jobs,
                       struct LfProof **out);

/*
 Release a proof handle. NULL is ignored.

 # Safety
 `proof` must be NULL or a pointer obtained from `lf_prove`.
 */
void lf_proof_free(struct LfProof *proof);

/*
 True iff the root and every lemma were proved.

 # Safety
 `proof` must be NULL or a live proof handle.
 */
bool lf_proof_is_proved(const struct LfProof *proof);

/*
 Number of tasks in the run, the root included.

 # Safety
 `proof` must be NULL or a live proof handle.
 */
uintptr_t lf_proof_task_count(const struct LfProof *proof);

/*
 Render the per-task report, optionally with full proof traces.

 # Safety
 `proof` must be a live proof handle and `out` writable pointer storage.
 */
enum LfStatus lf_proof_report(const struct LfProof *proof, bool full_trace, char **out);

/*
 Render the network's lemma flow diagram in DOT format.

 # Safety
 `net` must be a live network handle and `out` writable pointer storage.
 */
enum LfStatus lf_diagram_dot(const struct LfNetwork *net, char **out);

/*
 Release a string returned by this library. NULL is ignored.

 # Safety
 `s` must be NULL or a string pointer returned by this library.
 */
void lf_string_free(char *s);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* LEMMAFLOW_H */
