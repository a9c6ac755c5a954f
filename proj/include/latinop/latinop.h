/*
 * latinop.h -- C interface to the latinop library.
 *
 * Objects are opaque handles created by the library and released with the
 * matching lop_*_free function. Every fallible call returns an lop_status;
 * on failure lop_last_error() describes the problem (thread-local, valid
 * until the next failing call on the same thread). Output handles are only
 * written on LOP_OK.
 *
 * Slots are 1-based across this interface. Symbols are 0..n-1.
 */

#ifndef LATINOP_H
#define LATINOP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LOP_BUILDING_LIBRARY)
#    define LOP_API __declspec(dllexport)
#  else
#    define LOP_API __declspec(dllimport)
#  endif
#else
#  define LOP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lop_status
{
    LOP_OK = 0,
    LOP_ERR_INVALID = 1,  /* malformed input, bad slot, non-Latin operand, parse error */
    LOP_ERR_CEILING = 2,  /* refused: a resource ceiling would be exceeded */
    LOP_ERR_INTERNAL = 3  /* broken invariant or allocation failure */
} lop_status;

typedef struct lop_op lop_op;                       /* operation table, Latin or not */
typedef struct lop_cells lop_cells;                 /* Latin hypercube as a cell set */
typedef struct lop_transversals lop_transversals;   /* list of transversals */
typedef struct lop_census lop_census;               /* paratopism classes */
typedef struct lop_operad_report lop_operad_report; /* operad axiom results */
typedef struct lop_perm_list lop_perm_list;         /* list of permutations */
typedef struct lop_graph lop_graph;                 /* shared-coordinate graph */

/* Resource ceilings and parallelism. Start from lop_limits_default(). */
typedef struct lop_limits
{
    uint64_t cell_ceiling;      /* max n^d for enumeration / random generation */
    uint64_t group_ceiling;     /* max paratopism group order for canonical forms */
    int automorphism_max_order; /* max n for the automorphism scan */
    unsigned jobs;              /* worker threads; results never depend on it */
} lop_limits;

LOP_API const char* lop_version(void);
LOP_API const char* lop_last_error(void);
LOP_API void lop_limits_default(lop_limits* out);
LOP_API void lop_string_free(char* s);
LOP_API void lop_ints_free(int* p);

/* ---- operations -------------------------------------------------------- */

LOP_API lop_status lop_op_create(int n, int d, const int* table, size_t len, lop_op** out);
/* Parses one .lhc record. Errors carry "line L, column C". */
LOP_API lop_status lop_op_parse(const char* text, size_t len, lop_op** out);
/* Writes the .lhc text of op; release with lop_string_free. */
LOP_API lop_status lop_op_emit(const lop_op* op, char** out);
LOP_API lop_op* lop_op_clone(const lop_op* op);
LOP_API void lop_op_free(lop_op* op);

LOP_API int lop_op_order(const lop_op* op);
LOP_API int lop_op_arity(const lop_op* op);
LOP_API size_t lop_op_size(const lop_op* op);
/* Copies min(cap, size) entries into buf. */
LOP_API lop_status lop_op_table(const lop_op* op, int* buf, size_t cap);
LOP_API int lop_op_equal(const lop_op* a, const lop_op* b);
LOP_API lop_status lop_op_is_latin(const lop_op* op, int* out);

/* ---- cell sets --------------------------------------------------------- */

/* flat holds ncells tuples of d+1 entries. Fails naming the slot whose
 * projection is not bijective. */
LOP_API lop_status lop_cells_create(int n, int d, const int* flat, size_t ncells, lop_cells** out);
LOP_API lop_status lop_cells_is_latin(int n, int d, const int* flat, size_t ncells, int* out);
LOP_API lop_status lop_graph_of(const lop_op* f, lop_cells** out);
LOP_API lop_status lop_function_of(const lop_cells* cells, lop_op** out);
LOP_API void lop_cells_free(lop_cells* cells);

LOP_API int lop_cells_order(const lop_cells* cells);
LOP_API int lop_cells_dimension(const lop_cells* cells);
LOP_API size_t lop_cells_count(const lop_cells* cells);
/* Writes the d+1 coordinates of cell i (lexicographic order) into buf. */
LOP_API lop_status lop_cells_get(const lop_cells* cells, size_t i, int* buf);

/* ---- operad ------------------------------------------------------------ */

LOP_API lop_status lop_compose(const lop_op* f, const lop_op* g, int slot, lop_op** out);
LOP_API lop_status lop_unit(int n, lop_op** out);
/* perm is 1-based one-line notation of length d. */
LOP_API lop_status lop_act(const int* perm, size_t len, const lop_op* f, lop_op** out);
LOP_API lop_status lop_conjugate(const lop_op* f, int slot, lop_op** out);
/* out receives d+e-1 entries, 1-based. */
LOP_API lop_status lop_block_permutation(const int* perm, size_t d, int slot, int e, int* out);

LOP_API lop_status lop_verify_operad(int n, int max_degree, size_t sample_budget, uint64_t seed,
                                     lop_operad_report** out);
LOP_API size_t lop_operad_report_count(const lop_operad_report* r);
/* Borrowed strings live as long as the report. witness is "" when passed. */
LOP_API lop_status lop_operad_report_axiom(const lop_operad_report* r, size_t i, const char** name,
                                           uint64_t* checks, int* passed, const char** witness);
LOP_API int lop_operad_report_passed(const lop_operad_report* r);
LOP_API int lop_operad_report_exhaustive(const lop_operad_report* r);
LOP_API void lop_operad_report_free(lop_operad_report* r);

/* ---- pullback and restriction ----------------------------------------- */

LOP_API lop_status lop_pullback_compose(const lop_cells* outer, const lop_cells* inner, int slot, lop_cells** out);
LOP_API lop_status lop_restrict(const lop_cells* cells, int slot, int value, lop_cells** out);

/* ---- enumeration and paratopisms -------------------------------------- */

/* Return nonzero to stop. The op is borrowed for the duration of the call. */
typedef int (*lop_op_visitor)(void* user, const lop_op* op);

LOP_API lop_status lop_enumerate_count(int n, int d, const lop_limits* limits, uint64_t* out);
LOP_API lop_status lop_enumerate(int n, int d, const lop_limits* limits, lop_op_visitor visit, void* user);
LOP_API lop_status lop_random(int n, int d, uint64_t seed, const lop_limits* limits, lop_op** out);

/* slot_perm: d+1 entries, 1-based; symbol_perms: (d+1) rows of n entries,
 * 0-based symbol images. */
LOP_API lop_status lop_apply_paratopism(const lop_op* f, const int* slot_perm, const int* symbol_perms,
                                        lop_op** out);
LOP_API lop_status lop_canonical_form(const lop_op* f, const lop_limits* limits, lop_op** out);

LOP_API lop_status lop_orbit_census(int n, int d, const lop_limits* limits, lop_census** out);
LOP_API size_t lop_census_count(const lop_census* c);
/* canonical is borrowed from the census. */
LOP_API lop_status lop_census_class(const lop_census* c, size_t i, const lop_op** canonical, uint64_t* size);
LOP_API void lop_census_free(lop_census* c);

/* ---- transversals ----------------------------------------------------- */

/* limit 0 means all. */
LOP_API lop_status lop_find_transversals(const lop_cells* cells, size_t limit, const lop_limits* limits,
                                         lop_transversals** out);
LOP_API lop_status lop_count_transversals(const lop_cells* cells, const lop_limits* limits, uint64_t* out);
LOP_API size_t lop_transversals_count(const lop_transversals* t);
LOP_API int lop_transversals_order(const lop_transversals* t);
LOP_API int lop_transversals_dimension(const lop_transversals* t);
/* Writes n rows of d+1 coordinates. */
LOP_API lop_status lop_transversals_get(const lop_transversals* t, size_t i, int* buf);
LOP_API void lop_transversals_free(lop_transversals* t);

/* flat: n rows of width entries; d = width - 1. */
LOP_API lop_status lop_alternating_sum(const int* tuple, size_t len, int n, int* out);
LOP_API lop_status lop_delta_check(int n, const int* flat, size_t rows, size_t width, int* computed,
                                   int* expected, int* pass);
LOP_API lop_status lop_transversal_contained(int n, const int* flat, size_t rows, size_t width,
                                             const lop_cells* cells, int* out);

/* Whitespace-separated integer rows; release flat with lop_ints_free. */
LOP_API lop_status lop_parse_tuples(const char* text, size_t len, int** flat, size_t* rows, size_t* width);

/* ---- graph ------------------------------------------------------------ */

typedef struct lop_graph_summary
{
    size_t vertices;
    size_t edges;
    int is_regular;
    size_t min_degree;
    size_t max_degree;
    int max_shared_slots;
} lop_graph_summary;

LOP_API lop_status lop_graph_build(const lop_cells* cells, lop_graph** out);
LOP_API void lop_graph_summarize(const lop_graph* g, lop_graph_summary* out);
/* Degree histogram entries in increasing degree; *len receives the count. */
LOP_API lop_status lop_graph_histogram(const lop_graph* g, size_t* degrees, size_t* counts, size_t cap,
                                       size_t* len);
LOP_API lop_status lop_graph_edge(const lop_graph* g, size_t i, uint32_t* u, uint32_t* v);
LOP_API void lop_graph_free(lop_graph* g);
LOP_API uint64_t lop_predicted_degree(int n, int d);

/* ---- morphisms -------------------------------------------------------- */

LOP_API lop_status lop_is_homomorphism(const int* map, size_t len, const lop_op* g, const lop_op* f, int* out);
LOP_API lop_status lop_automorphisms(const lop_op* f, const lop_limits* limits, lop_perm_list** out);
LOP_API size_t lop_perm_list_count(const lop_perm_list* l);
LOP_API int lop_perm_list_degree(const lop_perm_list* l);
/* Writes the permutation in 0-based one-line notation. */
LOP_API lop_status lop_perm_list_get(const lop_perm_list* l, size_t i, int* buf);
LOP_API void lop_perm_list_free(lop_perm_list* l);

#ifdef __cplusplus
}
#endif

#endif /* LATINOP_H */
