/* C interface to the hbg library.
 *
 * Every function returns an hbg_status. On failure a description is available
 * from hbg_last_error() until the next call on the same thread. Strings and
 * arrays handed out by the library are released with hbg_string_free and
 * hbg_array_free; handles with their own *_free function. */
#ifndef HBG_HBG_H
#define HBG_HBG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HBG_API __declspec(dllexport)
#else
#define HBG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hbg_status {
    HBG_OK = 0,
    HBG_E_INVALID_SPEC,
    HBG_E_LABEL_OUT_OF_RANGE,
    HBG_E_ROOT_OUT_OF_RANGE,
    HBG_E_MALFORMED_GRAPH,
    HBG_E_DEGENERATE_CHORDS,
    HBG_E_INVALID_TASK,
    HBG_E_INVALID_RANGE,
    HBG_E_VERIFICATION_FAILED,
    HBG_E_CORRUPT_STORE,
    HBG_E_PARSE,
    HBG_E_ODD_ORDER,
    HBG_E_UNSUPPORTED_FORMAT,
    HBG_E_OUT_OF_TABLE,
    HBG_E_IO,
    HBG_E_NULL_ARGUMENT,
    HBG_E_ORACLE_MISMATCH,
    HBG_E_INTERNAL
} hbg_status;

/* Numeric values double as the CLI exit codes. */
typedef enum hbg_verdict {
    HBG_EXISTS = 0,
    HBG_NONEXISTENT = 1,
    HBG_INCONCLUSIVE = 2
} hbg_verdict;

typedef enum hbg_sym_policy {
    HBG_SYM_ASCENDING = 0,
    HBG_SYM_DESCENDING,
    HBG_SYM_FULL_ONLY,
    HBG_SYM_EXPLICIT
} hbg_sym_policy;

typedef struct hbg_spec hbg_spec;
typedef struct hbg_outcome hbg_outcome;
typedef struct hbg_family hbg_family;
typedef struct hbg_catalog hbg_catalog;

HBG_API const char* hbg_version(void);
HBG_API const char* hbg_last_error(void);
HBG_API const char* hbg_status_name(hbg_status status);
HBG_API const char* hbg_verdict_name(hbg_verdict verdict);
HBG_API void hbg_string_free(char* text);
HBG_API void hbg_array_free(void* array);

/* Spec handles are not validated on creation. */
HBG_API hbg_status hbg_spec_new(int order, int sym_factor, const int* chords, size_t count,
                                hbg_spec** out);
HBG_API void hbg_spec_free(hbg_spec* spec);
HBG_API int hbg_spec_order(const hbg_spec* spec);
HBG_API int hbg_spec_sym_factor(const hbg_spec* spec);
HBG_API size_t hbg_spec_chords(const hbg_spec* spec, const int** chords);
/* HBG_OK when valid, otherwise HBG_E_INVALID_SPEC; *report (optional) lists
 * every violation, one per line. */
HBG_API hbg_status hbg_spec_validate(const hbg_spec* spec, char** report);
/* Comma-separated chord list such as "15,53,73". */
HBG_API hbg_status hbg_parse_chords(const char* text, int** chords, size_t* count);

/* Witness is closed (first == last), girth + 1 labels. */
HBG_API hbg_status hbg_girth(const hbg_spec* spec, int* girth, int** witness, size_t* witness_len,
                             int* root_used);
HBG_API hbg_status hbg_girth_oracle(const hbg_spec* spec, int* girth);
/* format: "adjacency", "dot" or "graph6". */
HBG_API hbg_status hbg_export(const hbg_spec* spec, const char* format, char** out);

typedef void (*hbg_progress_fn)(uint64_t nodes, int depth, uint64_t prunes, void* user);

typedef struct hbg_search_params {
    int girth;
    int order;
    int sym_factor;
    uint64_t budget;         /* 0 = unbounded */
    int prune_canonical;     /* nonzero enables dihedral canonical pruning */
    unsigned threads;        /* 0 = hardware concurrency */
    hbg_progress_fn progress;
    void* progress_user;
    uint64_t progress_every; /* 0 = library default */
} hbg_search_params;

HBG_API void hbg_search_params_init(hbg_search_params* params);
HBG_API hbg_status hbg_search(const hbg_search_params* params, hbg_outcome** out);

typedef struct hbg_search_stats {
    uint64_t nodes;
    uint64_t girth_prunes;
    uint64_t matching_prunes;
    uint64_t canonical_prunes;
    uint64_t solutions;
    double seconds;
} hbg_search_stats;

HBG_API void hbg_outcome_free(hbg_outcome* outcome);
HBG_API hbg_verdict hbg_outcome_verdict(const hbg_outcome* outcome);
HBG_API int hbg_outcome_order(const hbg_outcome* outcome);
HBG_API int hbg_outcome_sym_factor(const hbg_outcome* outcome);
/* Witness chords, 0 when there is no witness. Valid while the outcome lives. */
HBG_API size_t hbg_outcome_witness(const hbg_outcome* outcome, const int** chords);
HBG_API int hbg_outcome_witness_girth(const hbg_outcome* outcome);
HBG_API void hbg_outcome_stats(const hbg_outcome* outcome, hbg_search_stats* stats);
/* Multi-line human-readable account, including the refutation certificate. */
HBG_API hbg_status hbg_outcome_describe(const hbg_outcome* outcome, char** out);

typedef struct hbg_scan_params {
    int girth;
    int order_from;
    int order_to;
    hbg_sym_policy policy;
    const int* factors; /* HBG_SYM_EXPLICIT only */
    size_t factor_count;
    uint64_t budget;
    int prune_canonical;
    unsigned threads;
    hbg_progress_fn progress;
    void* progress_user;
    uint64_t progress_every;
} hbg_scan_params;

/* Called once per order, in ascending order. `decisive` is only valid during
 * the call. */
typedef void (*hbg_scan_fn)(int order, hbg_verdict verdict, const hbg_outcome* decisive,
                            void* user);

HBG_API void hbg_scan_params_init(hbg_scan_params* params);
/* With a catalog, every per-order decisive outcome is appended. */
HBG_API hbg_status hbg_scan(const hbg_scan_params* params, hbg_catalog* catalog, hbg_scan_fn on_order,
                            void* user);

typedef struct hbg_family_info {
    int sym_factor;
    long threshold_order;
    int stable_girth;
    long span_bound;
    int witness_root;
} hbg_family_info;

typedef struct hbg_spot {
    long order;
    int girth;
    int agrees;
} hbg_spot;

HBG_API hbg_status hbg_family_certify(int sym_factor, const int* chords, size_t count, hbg_family** out);
HBG_API void hbg_family_free(hbg_family* family);
HBG_API void hbg_family_get(const hbg_family* family, hbg_family_info* info);
/* Girth cycle on the unrolled cover, closed. */
HBG_API size_t hbg_family_cover_cycle(const hbg_family* family, const long** labels);
HBG_API hbg_status hbg_family_spot_check(const hbg_family* family, int extra, hbg_spot** spots,
                                         size_t* count);
/* Every member from `from` (a multiple of 2b) up to the threshold. */
HBG_API hbg_status hbg_family_check_below(const hbg_family* family, long from, hbg_spot** spots,
                                          size_t* count);

HBG_API hbg_status hbg_catalog_open(const char* path, hbg_catalog** out);
HBG_API void hbg_catalog_free(hbg_catalog* catalog);
/* Re-verifies an Exists outcome before committing it. */
HBG_API hbg_status hbg_catalog_append(hbg_catalog* catalog, const hbg_outcome* outcome);
/* Matching records as JSON Lines. Negative bounds / verdict mean "any". */
HBG_API hbg_status hbg_catalog_query(const hbg_catalog* catalog, int girth, int order_min, int order_max,
                                     int verdict, char** jsonl, size_t* count);

typedef struct hbg_reference_source {
    const char* name; /* "symmetric", "vt", or any label */
    const char* path; /* CSV with an "order" column */
} hbg_reference_source;

/* catalog may be NULL (treated as empty). */
HBG_API hbg_status hbg_report(const hbg_catalog* catalog, const hbg_reference_source* refs, size_t ref_count,
                              int girth, int until, int as_json, char** out);

#ifdef __cplusplus
}
#endif

#endif
