/*
 * C interface to the PCGBT level-generation engine.
 *
 * All functions return PCGBT_OK on success; on any other return code,
 * pcgbt_last_error() holds a message describing the failure. Strings
 * returned through char** out-parameters are heap-allocated and must be
 * released with pcgbt_string_free().
 *
 * Handles are opaque. A tree or library may be shared by concurrent runs;
 * each run result belongs to the thread that created it. The last-error
 * message is thread-local.
 */

#ifndef PCGBT_H
#define PCGBT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pcgbt_tree pcgbt_tree;
typedef struct pcgbt_library pcgbt_library;
typedef struct pcgbt_result pcgbt_result;

typedef enum pcgbt_rc {
    PCGBT_OK = 0,
    PCGBT_E_INVALID_ARGUMENT = 1,
    PCGBT_E_IO = 2,
    PCGBT_E_PARSE = 3,          /* tree source has error diagnostics */
    PCGBT_E_MANIFEST = 4,       /* manifest or segment file defect */
    PCGBT_E_UNKNOWN_EXECUTOR = 5,
    PCGBT_E_MALFORMED_NODE = 6,
    PCGBT_E_CELL_OCCUPIED = 7,
    PCGBT_E_UNKNOWN_SEGMENT = 8,
    PCGBT_E_MIXED_DIMENSIONS = 9,
    PCGBT_E_NO_MATCH = 10,
    PCGBT_E_TICK_BUDGET = 11,
    PCGBT_E_RUNNING = 12,       /* single-tick run ended in RUNNING */
    PCGBT_E_STATE = 13,         /* blackboard state misuse (e.g. start room twice) */
    PCGBT_E_UNKNOWN = 14
} pcgbt_rc;

typedef enum pcgbt_status {
    PCGBT_STATUS_SUCCESS = 0,
    PCGBT_STATUS_FAILURE = 1,
    PCGBT_STATUS_RUNNING = 2
} pcgbt_status;

enum { PCGBT_MODE_SINGLE_TICK = 0, PCGBT_MODE_LOOP = 1 };
enum { PCGBT_COMPAT_TAG = 0, PCGBT_COMPAT_ALIGNED = 1 };
enum { PCGBT_FORMAT_TEXT = 0, PCGBT_FORMAT_JSON = 1 };

const char* pcgbt_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char* pcgbt_last_error(void);

void pcgbt_string_free(char* s);

/* --- trees ------------------------------------------------------------- */

/* Parse tree source text. On PCGBT_E_PARSE the last error holds every
 * diagnostic, one per line. Warnings alone do not fail the parse. */
pcgbt_rc pcgbt_tree_parse(const char* source, pcgbt_tree** out);
pcgbt_rc pcgbt_tree_parse_file(const char* path, pcgbt_tree** out);

/* Canonical text form (reparses to an equal tree). */
pcgbt_rc pcgbt_tree_serialize(const pcgbt_tree* tree, char** out);

/* Check the tree against the built-in executors. Returns PCGBT_OK even when
 * problems were found: *diagnostics gets one line per finding (empty string
 * when clean) and *error_count the number of error-severity findings. */
pcgbt_rc pcgbt_tree_validate(const pcgbt_tree* tree, char** diagnostics,
                             int* error_count);

void pcgbt_tree_free(pcgbt_tree* tree);

/* --- segment libraries -------------------------------------------------- */

/* Load one or more manifests into a single library. Segment ids must be
 * unique across all manifests. */
pcgbt_rc pcgbt_library_load(const char* const* manifest_paths, size_t count,
                            pcgbt_library** out);

size_t pcgbt_library_segment_count(const pcgbt_library* lib);

/* Loader warnings, one per line; empty string when there are none. */
pcgbt_rc pcgbt_library_warnings(const pcgbt_library* lib, char** out);

/* List segments as tab-separated lines "id<TAB>game<TAB>openings<TAB>tags".
 * Every filter is optional (pass NULL): game matches exactly, pattern must
 * appear among the segment's tags, openings (letters UDLR) must be a subset
 * of the segment's openings. */
pcgbt_rc pcgbt_library_list(const pcgbt_library* lib, const char* game,
                            const char* pattern, const char* openings,
                            char** out);

/* Tile rows of one segment, newline-terminated. */
pcgbt_rc pcgbt_library_segment_text(const pcgbt_library* lib, const char* id,
                                    char** out);

void pcgbt_library_free(pcgbt_library* lib);

/* --- runs ---------------------------------------------------------------- */

typedef struct pcgbt_run_options {
    uint64_t seed;
    int mode;                 /* PCGBT_MODE_* */
    const char* stop_key;     /* loop mode: integer blackboard key to watch */
    int64_t stop_threshold;   /* loop stops once bb[stop_key] >= threshold */
    int32_t max_ticks;        /* <= 0 selects the default (4096) */
    int compat_mode;          /* PCGBT_COMPAT_* */
    int collect_trace;        /* nonzero: record one event per node execution */
} pcgbt_run_options;

/* Fill with defaults: seed 0, single tick, tag compatibility, no trace. */
void pcgbt_run_options_init(pcgbt_run_options* options);

/* Execute the tree. `lib` may be NULL for runs that place no segments.
 * Allocates a result even when the root returns FAILURE; errors return a
 * code and no result. */
pcgbt_rc pcgbt_run(const pcgbt_tree* tree, const pcgbt_library* lib,
                   const pcgbt_run_options* options, pcgbt_result** out);

pcgbt_status pcgbt_result_status(const pcgbt_result* result);
int pcgbt_result_ticks(const pcgbt_result* result);
int pcgbt_result_has_level(const pcgbt_result* result);
int pcgbt_result_has_layout(const pcgbt_result* result);

/* Render the run's level as text or JSON ({"rows","cols","cells"}). A run
 * that produced a dungeon layout is first instantiated with rooms of `game`
 * (NULL picks the library's only game); rendering is repeatable — it never
 * advances the run's random stream. */
pcgbt_rc pcgbt_result_render(const pcgbt_result* result, const pcgbt_library* lib,
                             const char* game, int format, char** out);

/* Dungeon layout as JSON {"rooms": [[x,y],...], "edges": [...]}. */
pcgbt_rc pcgbt_result_layout_json(const pcgbt_result* result, char** out);

/* Line-delimited JSON trace (empty string unless collect_trace was set). */
pcgbt_rc pcgbt_result_trace(const pcgbt_result* result, char** out);

/* Read an integer blackboard value (e.g. "room_count"). */
pcgbt_rc pcgbt_result_get_int(const pcgbt_result* result, const char* key,
                              int64_t* out);

void pcgbt_result_free(pcgbt_result* result);

#ifdef __cplusplus
}
#endif

#endif /* PCGBT_H */
