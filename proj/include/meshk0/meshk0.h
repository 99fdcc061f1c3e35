#ifndef MESHK0_MESHK0_H
#define MESHK0_MESHK0_H

#include <stddef.h>
#include <stdint.h>

#if defined(MESHK0_BUILDING)
#define MESHK0_API __attribute__((visibility("default")))
#else
#define MESHK0_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum meshk0_status {
  MESHK0_OK = 0,
  MESHK0_ERR_PARSE = 1,
  MESHK0_ERR_PARAMETER = 2,
  MESHK0_ERR_UNDEFINED = 3,
  MESHK0_ERR_SIZE = 4,
  MESHK0_ERR_MISMATCH = 5,
  MESHK0_ERR_INTERNAL = 6,
  MESHK0_ERR_NULL = 7
} meshk0_status;

typedef enum meshk0_route {
  MESHK0_ROUTE_CLOSED = 0,
  MESHK0_ROUTE_MATRIX = 1,
  MESHK0_ROUTE_REDUCED = 2,
  MESHK0_ROUTE_CARTAN = 3
} meshk0_route;

typedef struct meshk0_triple meshk0_triple;
typedef struct meshk0_group meshk0_group;
typedef struct meshk0_matrix meshk0_matrix;
typedef struct meshk0_profile meshk0_profile;

/* Message for the most recent failure on this thread; empty after success. */
MESHK0_API const char* meshk0_last_error(void);
MESHK0_API const char* meshk0_status_name(meshk0_status status);
/* Frees every char* returned through an out-parameter. */
MESHK0_API void meshk0_string_free(char* text);

/* Triple syntax "A5:l=4:t=2". */
MESHK0_API meshk0_status meshk0_triple_parse(const char* text, meshk0_triple** out);
MESHK0_API meshk0_status meshk0_triple_make(char family, int n, int l, int t, meshk0_triple** out);
MESHK0_API void meshk0_triple_free(meshk0_triple* triple);
MESHK0_API meshk0_status meshk0_triple_string(const meshk0_triple* triple, char** out);
/* JSON object with type, k, c, d, r, q, the vertex count, and
   negative_exponent_wrap: true for type VIII with k < 6, whose generator
   matrix reads the exponent k - 6 modulo l. */
MESHK0_API meshk0_status meshk0_triple_describe(const meshk0_triple* triple, char** out_json);
/* JSON array of triple strings, sorted. */
MESHK0_API meshk0_status meshk0_triple_grid(int nmax, int kmax, char** out_json);

MESHK0_API meshk0_status meshk0_k0(const meshk0_triple* triple, meshk0_route route, meshk0_group** out);
MESHK0_API const char* meshk0_route_name(meshk0_route route);
MESHK0_API void meshk0_group_free(meshk0_group* group);
MESHK0_API meshk0_status meshk0_group_equal(const meshk0_group* a, const meshk0_group* b, int* out);
MESHK0_API meshk0_status meshk0_group_rank(const meshk0_group* group, long* out);
/* {"rank": r, "torsion": [...]} */
MESHK0_API meshk0_status meshk0_group_json(const meshk0_group* group, char** out);
/* "Z^2 + (Z/2)^3" */
MESHK0_API meshk0_status meshk0_group_text(const meshk0_group* group, char** out);
MESHK0_API meshk0_status meshk0_group_from_json(const char* json, meshk0_group** out);

MESHK0_API meshk0_status meshk0_cartan_matrix(const meshk0_triple* triple, meshk0_matrix** out);
MESHK0_API meshk0_status meshk0_generator_matrix(const meshk0_triple* triple, meshk0_matrix** out);
MESHK0_API void meshk0_matrix_free(meshk0_matrix* matrix);
MESHK0_API meshk0_status meshk0_matrix_shape(const meshk0_matrix* matrix, size_t* rows, size_t* cols);
/* Entry as a decimal string. */
MESHK0_API meshk0_status meshk0_matrix_entry(const meshk0_matrix* matrix, size_t row, size_t col, char** out);
/* {"rows": r, "cols": c, "data": [...]} */
MESHK0_API meshk0_status meshk0_matrix_json(const meshk0_matrix* matrix, char** out);
MESHK0_API meshk0_status meshk0_matrix_text(const meshk0_matrix* matrix, char** out);
MESHK0_API meshk0_status meshk0_matrix_cokernel(const meshk0_matrix* matrix, meshk0_group** out);

/* characteristic is 0 or 2. */
MESHK0_API meshk0_status meshk0_profile_compute(const meshk0_triple* triple, int characteristic,
                                                meshk0_profile** out);
MESHK0_API void meshk0_profile_free(meshk0_profile* profile);
MESHK0_API meshk0_status meshk0_profile_json(const meshk0_profile* profile, char** out);
MESHK0_API meshk0_status meshk0_profile_text(const meshk0_profile* profile, char** out);
/* {"kind": ..., "separator": ..., "details": {...}} */
MESHK0_API meshk0_status meshk0_distinguish(const meshk0_profile* first, const meshk0_profile* second,
                                            char** out_json);

/* Pairwise scan of the grid. Returns MESHK0_ERR_MISMATCH (with the report
   still written) if any pair of distinct triples is not separated. */
MESHK0_API meshk0_status meshk0_classify_grid(int nmax, int kmax, int characteristic, unsigned jobs,
                                              char** out_json);

/* Closed-form and generator-matrix groups for every grid triple of one type
   ("I".."X"). */
MESHK0_API meshk0_status meshk0_table(const char* type, int nmax, int kmax, char** out_json);

/* Runs the acceptance criteria listed in `criteria` (all when count is 0).
   Returns MESHK0_ERR_MISMATCH, with the report written, if any fails. */
MESHK0_API meshk0_status meshk0_verify(int nmax, int kmax, unsigned jobs, uint64_t seed, const int* criteria,
                                       size_t count, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
