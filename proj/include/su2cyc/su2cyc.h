#ifndef SU2CYC_H
#define SU2CYC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SU2C_API __declspec(dllexport)
#else
#define SU2C_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes returned by every function below. */
#define SU2C_OK 0
#define SU2C_ERROR 1

/* Verdicts, matching the command-line exit codes. */
#define SU2C_CONSISTENT 0
#define SU2C_VIOLATED 2

typedef struct su2c_text su2c_text;
typedef struct su2c_table su2c_table;

SU2C_API const char* su2c_version(void);

/* Message and error name of the last failure on the calling thread. */
SU2C_API const char* su2c_last_error(void);
SU2C_API const char* su2c_last_error_code(void);

SU2C_API const char* su2c_text_data(const su2c_text* text);
SU2C_API size_t su2c_text_size(const su2c_text* text);
SU2C_API void su2c_text_free(su2c_text* text);

/* Path of the table used when none is given: $SU2CYC_TABLE or the bundled file. */
SU2C_API const char* su2c_default_table_path(void);

/* path may be NULL for the default table. */
SU2C_API int su2c_table_open(const char* path, su2c_table** out);
SU2C_API size_t su2c_table_size(const su2c_table* table);
SU2C_API const char* su2c_table_knot_name(const su2c_table* table, size_t index);
SU2C_API void su2c_table_free(su2c_table* table);

/* One JSON record; *verdict receives SU2C_CONSISTENT or SU2C_VIOLATED.
   mode is "su2" or "so3"; table and knot may be NULL. */
SU2C_API int su2c_check_pair(const char* a, const char* b, const char* mode,
                             const su2c_table* table, const char* knot, int* verdict,
                             su2c_text** record);

/* JSONL, one record per compatible slope. */
SU2C_API int su2c_enumerate_slopes(const char* s0, const char* mode, int64_t q_max,
                                   int64_t p_max, su2c_text** jsonl);

/* JSONL audit records followed by a summary record. */
SU2C_API int su2c_audit_table(const su2c_table* table, int include_chiral, int64_t r_max,
                              size_t* flagged_count, su2c_text** jsonl);

/* spec_json: {"a": "-3", "b": "4", "path": true, "interior": false, "sheared": false,
   "torus_knot": [2, 3], "mirror": false, "width": 720, "height": 360}; all keys optional. */
SU2C_API int su2c_draw(const char* spec_json, su2c_text** svg);

/* Presentation JSON of the (p, q) torus knot group. */
SU2C_API int su2c_torus_presentation(int64_t p, int64_t q, su2c_text** json);

/* JSONL, one record per sampled (theta, eta). */
SU2C_API int su2c_sample_reps(const char* presentation_json, int grid, double tol, int mirror,
                              size_t* count, su2c_text** jsonl);

/* Exact arcs of the (p, q) torus knot as arc-set JSON. */
SU2C_API int su2c_torus_arcs(int64_t p, int64_t q, int mirror, su2c_text** json);

/* Perturbation schedule JSON; arcs_json may be NULL. */
SU2C_API int su2c_make_schedule(const char* a, const char* b, const char* arcs_json,
                                su2c_text** json);

#ifdef __cplusplus
}
#endif

#endif
