#ifndef POLYEF_POLYEF_H
#define POLYEF_POLYEF_H

#include <stddef.h>
#include <stdint.h>

#if defined(POLYEF_BUILDING_LIBRARY)
#define POLYEF_API __attribute__((visibility("default")))
#else
#define POLYEF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/*
 * Exact polyhedral computations over the rationals.
 *
 * Every fallible call returns a pef_status. On failure the message is
 * available from pef_last_error() on the calling thread until the next call
 * into the library. Output handles are written only on success; strings
 * returned through char** are owned by the caller and released with
 * pef_string_free(). Points and vectors cross the boundary as
 * whitespace-separated rationals ("1/2 -3 0.25").
 */

typedef enum pef_status {
  PEF_OK = 0,
  PEF_ERR_ARGUMENT = 1,
  PEF_ERR_PARSE = 2,
  PEF_ERR_DIMENSION = 3,
  PEF_ERR_EMPTY = 4,
  PEF_ERR_IO = 5,
  PEF_ERR_OPTIMIZATION = 6,
  PEF_ERR_INTERNAL = 7
} pef_status;

typedef enum pef_ef_definition {
  PEF_EF_STANDARD = 0, /* projection equals P */
  PEF_EF_MAP = 1,      /* image under a linear map equals P */
  PEF_EF_EXISTS = 2    /* x in P iff some y lifts (x, y) into Q */
} pef_ef_definition;

typedef enum pef_lp_status { PEF_LP_OPTIMAL = 0, PEF_LP_UNBOUNDED = 1, PEF_LP_INFEASIBLE = 2 } pef_lp_status;

typedef struct pef_polyhedron pef_polyhedron;
typedef struct pef_map pef_map;
typedef struct pef_graph pef_graph;
typedef struct pef_ef_verdict pef_ef_verdict;

POLYEF_API const char* pef_version(void);
POLYEF_API const char* pef_status_name(pef_status s);
POLYEF_API const char* pef_last_error(void);
/* Line of the last parse error, 0 when unknown. */
POLYEF_API size_t pef_last_error_line(void);
POLYEF_API void pef_string_free(char* s);

/* ---- polyhedra ---- */

POLYEF_API pef_status pef_polyhedron_parse(const char* text, pef_polyhedron** out);
POLYEF_API pef_status pef_polyhedron_read_file(const char* path, pef_polyhedron** out);
POLYEF_API void pef_polyhedron_free(pef_polyhedron* p);
POLYEF_API pef_status pef_polyhedron_format(const pef_polyhedron* p, char** out_text);
/* 1 for an H-representation, 0 for a V-representation. */
POLYEF_API int pef_polyhedron_is_h(const pef_polyhedron* p);
POLYEF_API size_t pef_polyhedron_dim(const pef_polyhedron* p);
/* H: number of rows. V: vertices + rays + lineality generators. */
POLYEF_API size_t pef_polyhedron_size(const pef_polyhedron* p);

POLYEF_API pef_status pef_polyhedron_contains(const pef_polyhedron* p, const char* point, int* out);
POLYEF_API pef_status pef_polyhedron_is_empty(const pef_polyhedron* p, int* out);
POLYEF_API pef_status pef_polyhedron_equal(const pef_polyhedron* a, const pef_polyhedron* b, int* out);
POLYEF_API pef_status pef_polyhedron_subset(const pef_polyhedron* a, const pef_polyhedron* b, int* out);

/* Canonical V-representation (vertices, rays, lineality). */
POLYEF_API pef_status pef_vertices(const pef_polyhedron* p, pef_polyhedron** out);
/* Equalities of the affine hull followed by the facets. */
POLYEF_API pef_status pef_facets(const pef_polyhedron* p, pef_polyhedron** out);
POLYEF_API pef_status pef_remove_redundancy(const pef_polyhedron* h, pef_polyhedron** out);
/* Projection onto the coordinates in `keep`, as an H-representation. */
POLYEF_API pef_status pef_project(const pef_polyhedron* p, const size_t* keep, size_t keep_len,
                                  pef_polyhedron** out);
/* convention: 0 counts an equality as two inequalities, 1 keeps them apart. */
POLYEF_API pef_status pef_count_inequalities(const pef_polyhedron* h, int convention, size_t* inequalities,
                                             size_t* equalities, size_t* total);

/* point and value may be NULL; they are set only for an optimal LP. */
POLYEF_API pef_status pef_lp_solve(const pef_polyhedron* p, const char* objective, int maximize,
                                   pef_lp_status* status, char** point, char** value);

/* ---- linear maps ---- */

POLYEF_API pef_status pef_map_parse(const char* text, pef_map** out);
POLYEF_API pef_status pef_map_read_file(const char* path, pef_map** out);
POLYEF_API void pef_map_free(pef_map* m);
POLYEF_API pef_status pef_map_format(const pef_map* m, char** out_text);
POLYEF_API pef_status pef_image(const pef_map* m, const pef_polyhedron* q, pef_polyhedron** out);

/* ---- extended formulations ---- */

/* map is required for PEF_EF_MAP and ignored otherwise; x_coords is ignored
   for PEF_EF_MAP. */
POLYEF_API pef_status pef_ef_check(const pef_polyhedron* q, const pef_polyhedron* p, const size_t* x_coords,
                                   size_t x_len, pef_ef_definition def, const pef_map* map,
                                   pef_ef_verdict** out);
POLYEF_API int pef_ef_verdict_holds(const pef_ef_verdict* v);
/* Witness point and the side it lies on, or "" when there is none. Owned by
   the verdict. */
POLYEF_API const char* pef_ef_verdict_witness(const pef_ef_verdict* v);
POLYEF_API const char* pef_ef_verdict_witness_side(const pef_ef_verdict* v);
POLYEF_API void pef_ef_verdict_free(pef_ef_verdict* v);
POLYEF_API pef_status pef_is_degenerate_ef(const pef_polyhedron* q, const size_t* x_coords, size_t x_len,
                                           int* out);

/* ---- affine bridge ---- */

POLYEF_API pef_status pef_graph_parse(const char* text, pef_graph** out);
POLYEF_API pef_status pef_graph_read_file(const char* path, pef_graph** out);
POLYEF_API void pef_graph_free(pef_graph* g);
POLYEF_API pef_status pef_graph_format(const pef_graph* g, char** out_text);
/* Two-step minimization of alpha·x over y_set; JSON object with x, y, value. */
POLYEF_API pef_status pef_bridge_two_step(const pef_graph* g, const pef_polyhedron* y_set, const char* alpha,
                                          char** out_json);
/* Direct LP over x_set against the two-step route; JSON report. */
POLYEF_API pef_status pef_bridge_verify(const pef_graph* g, const pef_polyhedron* x_set,
                                        const pef_polyhedron* y_set, const char* alpha, char** out_json,
                                        int* holds);

/* ---- TSP model ---- */

/* One tour per line, "0 a1 ... 0". cap 0 means the default cap. */
POLYEF_API pef_status pef_tsp_tours(size_t n, size_t cap, char** out_text);
POLYEF_API pef_status pef_tsp_ap(size_t n, pef_polyhedron** out);
POLYEF_API pef_status pef_tsp_bijection(size_t n, size_t cap, char** out_text, int* holds);

/* ---- verification suite ---- */

typedef struct pef_verify_options {
  uint64_t seed;
  size_t n_max;
  const char* only; /* comma-separated check ids, or NULL for all */
  int json;         /* nonzero for the JSON report */
  int timings;      /* include elapsed times in the JSON report */
} pef_verify_options;

POLYEF_API void pef_verify_options_init(pef_verify_options* opts);
POLYEF_API pef_status pef_verify_paper(const pef_verify_options* opts, char** out_report, int* all_hold);

#ifdef __cplusplus
}
#endif

#endif
