/* C interface to the modinv library.
 *
 * Every function returns MI_OK (0) or an error status; on error the message
 * is available from mi_last_error() on the same thread.  Strings returned
 * through char** are malloc'd and must be released with mi_string_free.
 */
#ifndef MODINV_H
#define MODINV_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mi_module mi_module;
typedef struct mi_report mi_report;

enum {
    MI_OK = 0,
    MI_E_ARGUMENT = 1,
    MI_E_DIVISION_BY_ZERO = 10,
    MI_E_DIMENSION,
    MI_E_DIVISIBILITY,
    MI_E_UNDEFINED_GCD,
    MI_E_RESOURCE,
    MI_E_INDEX,
    MI_E_DEGENERACY,
    MI_E_INVALID_FRAME,
    MI_E_CATALOG,
    MI_E_COMPATIBILITY,
    MI_E_INVERTIBILITY,
    MI_E_NOT_PPOINT,
    MI_E_RANGE,
    MI_E_PARSE,
    MI_E_UNSUPPORTED,
    MI_E_UNDEFINED_SYSTEM,
    MI_E_PARITY_VIOLATION,
    MI_E_INTERNAL
};

typedef struct {
    unsigned max_ext;          /* 1..3 */
    size_t groebner_budget;    /* S-pairs per Groebner run */
    double minor_budget;
    size_t point_budget;
    size_t selfdual_max_dim;
    size_t max_dim;            /* largest module accepted */
    size_t max_regular;        /* largest p^r for regular modules */
    int degrees;               /* report computes degrees */
    int kernel;                /* report computes the generic kernel */
} mi_options;

void mi_options_default(mi_options* opt);
const char* mi_last_error(void);
const char* mi_status_name(int status);
void mi_string_free(char* s);

/* modules */
int mi_module_from_zoo(const char* spec, const mi_options* opt, mi_module** out);
int mi_module_load(const char* path, const mi_options* opt, mi_module** out);
int mi_module_from_json(const char* text, const mi_options* opt, mi_module** out);
int mi_module_save(const mi_module* m, const char* path);
int mi_module_to_json(const mi_module* m, char** out);
int mi_module_dual(const mi_module* m, mi_module** out);
int mi_module_info(const mi_module* m, unsigned* p, int* r, size_t* dim);
int mi_module_name(const mi_module* m, char** out);
void mi_module_free(mi_module* m);
int mi_zoo_catalog(unsigned p, char** out); /* newline separated specs */

/* invariants; results of the richer calls are JSON objects */
int mi_validate(const mi_module* m, char** route);
int mi_generic_rank(const mi_module* m, int j, size_t* out);
int mi_rank_at_point(const mi_module* m, int j, const long long* point, size_t len, size_t* out);
int mi_certify(const mi_module* m, int j, const mi_options* opt, char** json);
int mi_degree(const mi_module* m, int j, const mi_options* opt, char** json);
int mi_jordan_generic(const mi_module* m, char** out);
int mi_jordan_at_point(const mi_module* m, const long long* point, size_t len, char** out);
/* poly: polynomial in t1..tr such as "t1+2*t2^2" */
int mi_jordan_at_ppoint(const mi_module* m, const char* poly, char** out);
int mi_generic_kernel(const mi_module* m, const mi_options* opt, char** json);
int mi_self_dual(const mi_module* m, const mi_options* opt, char** json);

/* reports */
int mi_report_compute(const mi_module* m, const mi_options* opt, mi_report** out);
int mi_report_csv_header(unsigned pmax, char** out);
int mi_report_csv_row(const mi_report* rep, unsigned pmax, char** out);
int mi_report_json(const mi_report* rep, char** out);
int mi_report_undetermined(const mi_report* rep);
unsigned mi_report_p(const mi_report* rep);
void mi_report_free(mi_report* rep);

#ifdef __cplusplus
}
#endif

#endif
