/*
 * cftree C API.
 *
 * Every function returns a cftree_status. On failure the message of the
 * error is available from cftree_last_error() on the calling thread until
 * the next call into the library. Strings returned through char** out
 * parameters are owned by the caller and released with cftree_string_free().
 * Output parameters are set to NULL before any work, so they are NULL
 * whenever a call fails.
 * Handles are immutable once created and may be shared between threads.
 */
#ifndef CFTREE_H
#define CFTREE_H

#include <stddef.h>

#if defined(_WIN32)
#define CFTREE_API __declspec(dllexport)
#else
#define CFTREE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cftree_status {
    CFTREE_OK = 0,
    CFTREE_E_PARSE = 1,
    CFTREE_E_SCHEMA = 2,
    CFTREE_E_INVALID = 3,
    CFTREE_E_UNKNOWN_STATE = 4,
    CFTREE_E_UNKNOWN_LETTER = 5,
    CFTREE_E_UNKNOWN_NODE = 6,
    CFTREE_E_DUPLICATE_LETTER = 7,
    CFTREE_E_INVOLUTION_CONFLICT = 8,
    CFTREE_E_NOT_DETERMINISTIC = 9,
    CFTREE_E_NOT_REDUCED = 10,
    CFTREE_E_NOT_IN_LANGUAGE = 11,
    CFTREE_E_RADIUS_MISMATCH = 12,
    CFTREE_E_LIMIT_EXCEEDED = 13,
    CFTREE_E_INVALID_ARGUMENT = 14,
    CFTREE_E_INTERNAL = 15
} cftree_status;

typedef enum cftree_format { CFTREE_FORMAT_JSON = 0, CFTREE_FORMAT_DOT = 1 } cftree_format;

typedef enum cftree_iso_mode { CFTREE_ISO_ROOTED = 0, CFTREE_ISO_NONROOTED = 1 } cftree_iso_mode;

/* An automaton document (mNFA or pDFA) with an optional designated root. */
typedef struct cftree_automaton cftree_automaton;

CFTREE_API const char* cftree_version(void);
CFTREE_API const char* cftree_status_name(cftree_status status);
CFTREE_API const char* cftree_last_error(void);
CFTREE_API void cftree_string_free(char* s);

/* Reports all issues of an automaton document as a JSON report. *ok is set
 * to 1 when the document is valid. Parse and schema errors are returned as
 * status codes instead. */
CFTREE_API cftree_status cftree_validate_json(const char* json, int* ok, char** report_json);

CFTREE_API cftree_status cftree_automaton_load(const char* json, cftree_automaton** out);
CFTREE_API void cftree_automaton_free(cftree_automaton* automaton);
CFTREE_API cftree_status cftree_automaton_to_json(const cftree_automaton* automaton, char** out);
CFTREE_API cftree_status cftree_automaton_to_dot(const cftree_automaton* automaton, char** out);
/* Designated root; CFTREE_E_UNKNOWN_STATE when the document has none. */
CFTREE_API cftree_status cftree_automaton_root(const cftree_automaton* automaton, char** out);
/* CFTREE_E_NOT_DETERMINISTIC when the document is not a pDFA. */
CFTREE_API cftree_status cftree_automaton_is_reduced(const cftree_automaton* automaton, int* reduced);

/* In every function below, a NULL state selects the document root. Words
 * are comma separated letter names; "" is the empty word. */

CFTREE_API cftree_status cftree_unfold(const cftree_automaton* automaton, const char* state, size_t radius,
                                       cftree_format format, char** out);

/* *isomorphic is set to 1 or 0. When witness is non-NULL it receives the
 * shortest separating word (rooted, not isomorphic) or the root-to-v word
 * (non-rooted, isomorphic), and NULL otherwise. */
CFTREE_API cftree_status cftree_iso(const cftree_automaton* a, const char* state_a, const cftree_automaton* b,
                                    const char* state_b, cftree_iso_mode mode, int* isomorphic, char** witness);

CFTREE_API cftree_status cftree_verify_nonrooted_witness(const cftree_automaton* a, const char* state_a,
                                                         const cftree_automaton* b, const char* state_b,
                                                         const char* word, int* accepted);

/* The result is a pDFA document whose root generates the rerooted tree. */
CFTREE_API cftree_status cftree_reroot(const cftree_automaton* automaton, const char* state, const char* word,
                                       cftree_automaton** out);

CFTREE_API cftree_status cftree_minimize(const cftree_automaton* automaton, cftree_automaton** out);

/* Compresses a finite tree document into a minimal pDFA rooted at c0. */
CFTREE_API cftree_status cftree_compress_tree(const char* tree_json, cftree_automaton** out);

CFTREE_API cftree_status cftree_reduce_2gap(const char* gap_json, cftree_automaton** out_a,
                                            cftree_automaton** out_b);

CFTREE_API cftree_status cftree_lift_nonrooted(const cftree_automaton* a, const char* state_a,
                                               const cftree_automaton* b, const char* state_b,
                                               cftree_automaton** out_a, cftree_automaton** out_b);

#ifdef __cplusplus
}
#endif

#endif /* CFTREE_H */
