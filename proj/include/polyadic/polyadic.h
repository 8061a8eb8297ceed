#ifndef POLYADIC_POLYADIC_H
#define POLYADIC_POLYADIC_H

/* C interface to the polyadic library.
 *
 * Every call returns a status code. PG_OK means success; PG_REPORTED_FAILURE
 * means the operation ran and produced a document describing a mathematical
 * failure (an axiom violation, a missing epimorphism). Other codes are errors:
 * details are available from pg_last_error / pg_last_witness on the context
 * until the next call on it.
 *
 * Strings returned through char** are owned by the caller and must be freed
 * with pg_string_free. A context must not be used by two threads at once. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PG_API __declspec(dllexport)
#else
#define PG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum pg_status {
  PG_OK = 0,
  PG_REPORTED_FAILURE = 1,
  PG_ERR_INDEX_OUT_OF_RANGE = 2,
  PG_ERR_NOT_LATIN_SQUARE,
  PG_ERR_NO_IDENTITY,
  PG_ERR_NO_INVERSE,
  PG_ERR_NOT_ASSOCIATIVE,
  PG_ERR_INVALID_AUTOMORPHISM,
  PG_ERR_SIZE_CAP_EXCEEDED,
  PG_ERR_CONDITION_ONE_FAILS,
  PG_ERR_CONDITION_TWO_FAILS,
  PG_ERR_ARITY_MISMATCH,
  PG_ERR_NO_SOLUTION,
  PG_ERR_RECONSTRUCTION_MISMATCH,
  PG_ERR_HEIGHT_VIOLATION,
  PG_ERR_LENGTH_VIOLATION,
  PG_ERR_UNBOUND_VARIABLE,
  PG_ERR_PROPERTY_FAILURE,
  PG_ERR_NOT_POLYADIC_HOM,
  PG_ERR_INCONSISTENT,
  PG_ERR_EMPTY_GENERATOR_SET,
  PG_ERR_CAP_EXCEEDED,
  PG_ERR_PARSE,
  PG_ERR_FILE_NOT_FOUND,
  PG_ERR_INVALID_INPUT,
  PG_ERR_INTERNAL = 100
};

typedef struct pg_context pg_context;
typedef struct pg_group pg_group;
typedef struct pg_polyadic pg_polyadic;
typedef struct pg_presentation pg_presentation;
typedef struct pg_system pg_system;
typedef struct pg_points pg_points;

/* Context, limits and diagnostics */

PG_API int pg_context_new(pg_context** out);
PG_API void pg_context_free(pg_context* ctx);
/* Names as in the library Limits struct, plus "coset_cap" and "jobs". */
PG_API int pg_context_set_limit(pg_context* ctx, const char* name, uint64_t value);
PG_API const char* pg_last_error(const pg_context* ctx);
PG_API size_t pg_last_witness(const pg_context* ctx, const int64_t** out);
/* {"error": {"code", "message", "witness"}} for the last error. */
PG_API int pg_error_document(const pg_context* ctx, char** out);

PG_API const char* pg_status_name(int status);
/* Bad files, bad syntax, exceeded caps, as opposed to mathematical failures. */
PG_API int pg_status_is_input_error(int status);
PG_API void pg_string_free(char* s);

/* Objects */

PG_API int pg_group_load(pg_context* ctx, const char* path, pg_group** out);
PG_API int pg_group_parse(pg_context* ctx, const char* json, pg_group** out);
PG_API void pg_group_free(pg_group* g);
PG_API size_t pg_group_order(const pg_group* g);
PG_API int pg_group_mul(pg_context* ctx, const pg_group* g, uint32_t x, uint32_t y, uint32_t* out);
PG_API int pg_group_to_json(pg_context* ctx, const pg_group* g, char** out);

/* base_dir resolves relative group paths inside derived-form documents. */
PG_API int pg_polyadic_load(pg_context* ctx, const char* path, pg_polyadic** out);
PG_API int pg_polyadic_parse(pg_context* ctx, const char* json, const char* base_dir,
                             pg_polyadic** out);
PG_API void pg_polyadic_free(pg_polyadic* p);
PG_API unsigned pg_polyadic_arity(const pg_polyadic* p);
PG_API size_t pg_polyadic_order(const pg_polyadic* p);
PG_API int pg_polyadic_eval(pg_context* ctx, const pg_polyadic* p, const uint32_t* args,
                            size_t count, uint32_t* out);
PG_API int pg_polyadic_to_json(pg_context* ctx, const pg_polyadic* p, char** out);

PG_API int pg_presentation_load(pg_context* ctx, const char* path, pg_presentation** out);
PG_API int pg_presentation_parse(pg_context* ctx, const char* json, pg_presentation** out);
PG_API void pg_presentation_free(pg_presentation* pres);

/* A system file names its polyadic group in a "polyadic:" line. Pass p to
 * override it; with p NULL the named file is loaded and owned by the system
 * (see pg_system_polyadic). */
PG_API int pg_system_load(pg_context* ctx, const char* path, const pg_polyadic* p,
                          pg_system** out);
PG_API int pg_system_parse(pg_context* ctx, const char* text, const pg_polyadic* p,
                           pg_system** out);
PG_API void pg_system_free(pg_system* s);
PG_API const pg_polyadic* pg_system_polyadic(const pg_system* s);
PG_API size_t pg_system_equation_count(const pg_system* s);

PG_API int pg_points_load(pg_context* ctx, const char* path, const pg_polyadic* p,
                          pg_points** out);
PG_API int pg_points_parse(pg_context* ctx, const char* json, const pg_polyadic* p,
                           pg_points** out);
PG_API void pg_points_free(pg_points* z);

/* Operations. Each writes a JSON document to *out on PG_OK and
 * PG_REPORTED_FAILURE. Optional string arguments may be NULL. */

PG_API int pg_validate_group_file(pg_context* ctx, const char* path, char** out);
PG_API int pg_validate_polyadic_file(pg_context* ctx, const char* path, char** out);
PG_API int pg_derive(pg_context* ctx, const pg_polyadic* p, char** out);
PG_API int pg_skew(pg_context* ctx, const pg_polyadic* p, char** out);
PG_API int pg_retract(pg_context* ctx, const pg_polyadic* p, const char* anchor, char** out);
PG_API int pg_hosszu_gloskin(pg_context* ctx, const pg_polyadic* p, const char* anchor, char** out);
PG_API int pg_identity(pg_context* ctx, const pg_polyadic* p, char** out);
PG_API int pg_subgroups(pg_context* ctx, const pg_polyadic* p, char** out);
PG_API int pg_homs(pg_context* ctx, const pg_polyadic* p, const pg_polyadic* q, char** out);
PG_API int pg_post_cover(pg_context* ctx, const pg_polyadic* p, char** out);
/* n = 0 when not given. cap = 0 uses the context's coset cap. */
PG_API int pg_present_to_group(pg_context* ctx, const pg_presentation* pres, unsigned n, char** out);
PG_API int pg_cosets(pg_context* ctx, const pg_presentation* pres, unsigned n, size_t cap,
                     char** out);
PG_API int pg_free_reduce(pg_context* ctx, const char* const* words, size_t count, unsigned n,
                          char** out);
/* direction is "g2p" or "p2g". */
PG_API int pg_translate(pg_context* ctx, const pg_polyadic* p, const char* equation,
                        const char* direction, const char* anchor, char** out);
PG_API int pg_solve(pg_context* ctx, const pg_polyadic* p, const pg_system* s, char** out);
PG_API int pg_coordinate_group(pg_context* ctx, const pg_polyadic* p, const pg_system* s,
                               char** out);
PG_API int pg_closure(pg_context* ctx, const pg_polyadic* p, const pg_points* z, char** out);
PG_API int pg_irreducible(pg_context* ctx, const pg_polyadic* p, const pg_points* y, char** out);
PG_API int pg_minimal_subsystem(pg_context* ctx, const pg_polyadic* p, const pg_system* s,
                                char** out);
PG_API int pg_compare_cover(pg_context* ctx, const pg_polyadic* p, const pg_system* s, char** out);

#ifdef __cplusplus
}
#endif

#endif
