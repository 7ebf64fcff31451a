/*
 * C interface to the tourney library.
 *
 * Tournaments and verification reports are opaque handles owned by the
 * caller and released with tny_free / tny_report_free. Every function that
 * can fail returns a tny_status; on failure a description is available from
 * tny_last_error() on the calling thread until the next failing call.
 *
 * Functions producing text follow the usual two-step pattern: pass a buffer
 * of `cap` bytes; if it is too small TNY_E_BUFFER_TOO_SMALL is returned and
 * *needed (when non-null) receives the size including the terminating NUL.
 *
 * All functions are safe to call concurrently on distinct or shared handles.
 */
#ifndef TOURNEY_H
#define TOURNEY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TOURNEY_BUILDING_LIBRARY)
#    define TNY_API __declspec(dllexport)
#  else
#    define TNY_API __declspec(dllimport)
#  endif
#else
#  define TNY_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tny_status {
    TNY_OK = 0,
    TNY_E_CONFLICTING_ARC = 1,
    TNY_E_INCOMPLETE_TOURNAMENT = 2,
    TNY_E_BAD_VERTEX = 3,
    TNY_E_LENGTH_MISMATCH = 4,
    TNY_E_BAD_FORMAT = 5,
    TNY_E_NOT_A_TOURNAMENT = 6,
    TNY_E_BAD_PARAMETER = 7,
    TNY_E_BAD_PERMUTATION = 8,
    TNY_E_NOT_AN_ARC = 9,
    TNY_E_WRONG_ORDER = 10,
    TNY_E_OVERFLOW = 100,        /* exact value does not fit the C types */
    TNY_E_NULL_ARGUMENT = 101,
    TNY_E_BUFFER_TOO_SMALL = 102,
    TNY_E_INTERNAL = 103
} tny_status;

#define TNY_CLASS_COUNT 12
#define TNY_R_COUNT 14
#define TNY_MAX_ORDER 4096

typedef struct tny_tournament tny_tournament;
typedef struct tny_report tny_report;

/* A reduced fraction; den > 0. */
typedef struct tny_rational {
    int64_t num;
    int64_t den;
} tny_rational;

typedef struct tny_edge_score {
    uint32_t a, b, c, d;
} tny_edge_score;

typedef struct tny_c5_breakdown {
    tny_rational base;
    int64_t s1;
    int64_t s2;
    int64_t c5;
} tny_c5_breakdown;

typedef struct tny_chain {
    int64_t s1;
    int64_t mid;
    tny_rational vertexform;
} tny_chain;

typedef struct tny_scan_record {
    uint64_t seed;
    uint32_t n;
    int64_t c3;
    int64_t c4;          /* -1 when not computed (n above the brute-force cap) */
    int64_t c5;
    int64_t s1;
    int64_t s2;
    tny_rational lower_bound;
    tny_rational upper_bound;
    tny_rational score_variance;
} tny_scan_record;

TNY_API const char* tny_status_name(tny_status status);
TNY_API const char* tny_last_error(void);

/* construction; *out receives a new handle on success */
TNY_API tny_status tny_from_arcs(uint32_t n, const uint32_t* arcs, size_t arc_count, tny_tournament** out);
TNY_API tny_status tny_parse(const char* text, tny_tournament** out);
TNY_API tny_status tny_transitive(uint32_t n, tny_tournament** out);
TNY_API tny_status tny_circulant(uint32_t n, const uint32_t* offsets, size_t offset_count, tny_tournament** out);
TNY_API tny_status tny_quadratic_residue(uint32_t q, tny_tournament** out);
TNY_API tny_status tny_random(uint32_t n, double p, uint64_t seed, tny_tournament** out);
TNY_API tny_status tny_reverse(const tny_tournament* t, tny_tournament** out);
TNY_API tny_status tny_relabel(const tny_tournament* t, const uint32_t* perm, size_t perm_len, tny_tournament** out);
TNY_API void tny_free(tny_tournament* t);

TNY_API tny_status tny_serialize(const tny_tournament* t, char* buf, size_t cap, size_t* needed);
TNY_API uint32_t tny_order(const tny_tournament* t);
TNY_API tny_status tny_beats(const tny_tournament* t, uint32_t u, uint32_t v, int* result);
TNY_API tny_status tny_out_degree(const tny_tournament* t, uint32_t v, uint32_t* result);

/* edge scores, 5-cycle formula and bounds */
TNY_API tny_status tny_edge_score_of(const tny_tournament* t, uint32_t u, uint32_t v, tny_edge_score* out);
TNY_API tny_status tny_c5_exact(const tny_tournament* t, tny_c5_breakdown* out);
TNY_API tny_status tny_c3_closed(const tny_tournament* t, int64_t* out);
TNY_API tny_status tny_score_variance(const tny_tournament* t, tny_rational* out);
TNY_API tny_status tny_lower_bound_c5(const tny_tournament* t, tny_rational* out);
TNY_API tny_status tny_subtracted_sum_chain(const tny_tournament* t, tny_chain* out);
TNY_API tny_status tny_upper_bound_c5(uint32_t n, tny_rational* out);
TNY_API tny_status tny_max_c3(uint32_t n, tny_rational* out);
TNY_API tny_status tny_max_c4(uint32_t n, tny_rational* out);
TNY_API tny_status tny_expected_c5(uint32_t n, tny_rational* out);

/* brute-force oracles and the 5-vertex census */
TNY_API tny_status tny_count_cycles_bruteforce(const tny_tournament* t, uint32_t k, int64_t* out);
TNY_API tny_status tny_classify5(const tny_tournament* t, uint32_t* class_index);
/* canonical must hold at least 11 bytes */
TNY_API tny_status tny_class_info(uint32_t class_index, uint32_t* ham_count, char* canonical);
TNY_API tny_status tny_census5(const tny_tournament* t, int64_t counts[TNY_CLASS_COUNT]);
TNY_API tny_status tny_r_quantities(const tny_tournament* t, int64_t r[TNY_R_COUNT]);
/* row-major, m[i * TNY_CLASS_COUNT + j] */
TNY_API tny_status tny_relation_matrix(int64_t m[TNY_R_COUNT * TNY_CLASS_COUNT]);

/* transitive subtournaments */
TNY_API tny_status tny_count_acyclic(const tny_tournament* t, uint32_t k, int64_t* out);
TNY_API tny_status tny_count_acyclic_recursive(const tny_tournament* t, uint32_t k, int64_t* out);
TNY_API tny_status tny_f_lower(uint32_t n, uint32_t k, tny_rational* out);
TNY_API tny_status tny_g_expected(uint32_t n, uint32_t k, tny_rational* out);

/* property suites: "identities", "matrix", "acyclic" or "all" */
TNY_API tny_status tny_verify(const char* suite, uint32_t cases, uint64_t seed, tny_report** out);
TNY_API int tny_report_passed(const tny_report* report);
TNY_API const char* tny_report_text(const tny_report* report);
TNY_API void tny_report_free(tny_report* report);

/* Monte-Carlo rows: row i of a scan uses tny_scan_seed(base, i) */
TNY_API uint64_t tny_scan_seed(uint64_t base_seed, uint64_t index);
TNY_API tny_status tny_scan_record_compute(uint32_t n, uint64_t seed, tny_scan_record* out);
TNY_API const char* tny_scan_csv_header(void);
/* exact row text, no line terminator */
TNY_API tny_status tny_scan_csv_row(uint32_t n, uint64_t seed, char* buf, size_t cap, size_t* needed);

/* "p/q", or "p" for integers */
TNY_API tny_status tny_format_rational(tny_rational value, char* buf, size_t cap, size_t* needed);

#ifdef __cplusplus
}
#endif

#endif
