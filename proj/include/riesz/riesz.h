/* C interface to the riesz library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns an rz_status; on failure rz_last_error()
 * describes the most recent error on the calling thread. Strings returned
 * through char** out-parameters are owned by the caller and released with
 * rz_string_free().
 */
#ifndef RIESZ_RIESZ_H
#define RIESZ_RIESZ_H

#include <stddef.h>
#include <stdint.h>

#if defined(RIESZ_BUILDING_LIBRARY)
#define RZ_API __attribute__((visibility("default")))
#else
#define RZ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rz_status {
  RZ_OK = 0,
  RZ_ERR_VALIDATION = 1,
  RZ_ERR_RANGE = 2,
  RZ_ERR_REALIZATION = 3,
  RZ_ERR_INDEX = 4,
  RZ_ERR_MISMATCH = 5,
  RZ_ERR_RESOLUTION = 6,
  RZ_ERR_QUADRATURE = 7,
  RZ_ERR_INFEASIBLE = 8,
  RZ_ERR_IO = 9,
  RZ_ERR_NULL_ARGUMENT = 10,
  RZ_ERR_INTERNAL = 11
} rz_status;

typedef enum rz_kind { RZ_FIRST = 0, RZ_SECOND = 1 } rz_kind;

typedef struct rz_complex {
  double re;
  double im;
} rz_complex;

typedef struct rz_frequency rz_frequency;
typedef struct rz_group rz_group;
typedef struct rz_poly rz_poly;

RZ_API const char* rz_version(void);
RZ_API const char* rz_git_describe(void);
RZ_API const char* rz_last_error(void);
RZ_API const char* rz_status_name(rz_status status);
RZ_API void rz_string_free(char* s);

/* Frequencies */
RZ_API rz_status rz_frequency_from_spec(const char* spec, rz_frequency** out);
RZ_API rz_status rz_frequency_from_values(const double* values, size_t n, rz_frequency** out);
RZ_API rz_status rz_frequency_from_json(const char* json, rz_frequency** out);
RZ_API rz_status rz_frequency_to_json(const rz_frequency* f, char** out);
RZ_API size_t rz_frequency_size(const rz_frequency* f);
/* Copies min(n, size) values. */
RZ_API rz_status rz_frequency_values(const rz_frequency* f, double* out, size_t n);
RZ_API void rz_frequency_free(rz_frequency* f);

/* Group realizations */
RZ_API rz_status rz_group_from_spec(const char* spec, const rz_frequency* f, rz_group** out);
RZ_API rz_status rz_group_to_json(const rz_group* g, char** out);
RZ_API size_t rz_group_dimension(const rz_group* g);
RZ_API void rz_group_free(rz_group* g);

/* Dirichlet polynomials */
RZ_API rz_status rz_poly_create(const rz_frequency* f, const rz_complex* coefficients, size_t n,
                                rz_poly** out);
RZ_API rz_status rz_poly_from_rule(const rz_frequency* f, const char* rule, rz_poly** out);
RZ_API rz_status rz_poly_from_json(const char* json, rz_poly** out);
RZ_API rz_status rz_poly_to_json(const rz_poly* p, char** out);
/* New handle on a frequency equal to the polynomial's. */
RZ_API rz_status rz_poly_frequency(const rz_poly* p, rz_frequency** out);
RZ_API size_t rz_poly_size(const rz_poly* p);
RZ_API void rz_poly_free(rz_poly* p);

RZ_API rz_status rz_evaluate(const rz_poly* p, rz_complex s, rz_complex* out);
RZ_API rz_status rz_riesz_mean(const rz_poly* p, rz_kind kind, double k, double x, rz_complex s,
                               rz_complex* out);
RZ_API rz_status rz_cesaro_mean(const rz_poly* p, size_t nc, rz_complex s, rz_complex* out);

/* Analyses. Each writes CSV text to *csv and a JSON summary to *summary;
 * either out-parameter may be NULL. */
RZ_API rz_status rz_converge(const rz_poly* p, rz_kind kind, double k, rz_complex s,
                             const double* x_grid, size_t n_x, double tol, char** csv,
                             char** summary);
/* which: "first" or "second"; ell is ignored for "second". */
RZ_API rz_status rz_consistency(const rz_poly* p, const char* which, double k, double ell,
                                rz_complex s, const double* x_grid, size_t n_x, double tol,
                                char** csv, char** summary);
RZ_API rz_status rz_abscissa(const rz_poly* p, double k, const double* x_grid, size_t n_x,
                             const double* t_grid, size_t n_t, char** csv, char** summary);
/* x_grid may be NULL for the default maximal grid. */
RZ_API rz_status rz_maximal(const rz_poly* p, const rz_group* g, double k, size_t samples,
                            uint64_t seed, const double* x_grid, size_t n_x, char** csv,
                            char** summary);
RZ_API rz_status rz_norms(const rz_poly* p, const rz_group* g, double half_width,
                          size_t samples, uint64_t seed, char** csv, char** summary);
RZ_API rz_status rz_weaktype(const rz_poly* p, const rz_group* g, double k, size_t samples,
                             uint64_t seed, char** csv, char** summary);

/* check: perron | kernel | ftrep | abel | secondmeans. *all_passed may be NULL. */
RZ_API rz_status rz_verify(const char* check, uint64_t seed, char** csv, char** summary,
                           int* all_passed);

/* Runs every experiment in a config file; writes <name>.csv and
 * <name>.summary.json into out_dir. *summary is a JSON array of summaries. */
RZ_API rz_status rz_experiment_run(const char* config_path, const char* out_dir,
                                   char** summary);

#ifdef __cplusplus
}
#endif

#endif
