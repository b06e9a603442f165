/*
 * C interface to the elastosurf library.
 *
 * All functions are reentrant. Error details (message, bracketing scan,
 * solver warnings) are kept per thread and describe the most recent failing
 * or warning-producing call on that thread.
 */
#ifndef ELASTOSURF_H
#define ELASTOSURF_H

#include <stddef.h>

#if defined(_WIN32)
#define ES_API __declspec(dllexport)
#else
#define ES_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum es_status {
  ES_OK = 0,
  ES_ERR_INVALID_ARGUMENT = 1,
  ES_ERR_DOMAIN = 2,
  ES_ERR_BRACKETING = 3,
  ES_ERR_DEFINITENESS = 4,
  ES_ERR_CHART = 5,
  ES_ERR_CONSTRAINT = 6, /* normalization, incompressibility, singular F */
  ES_ERR_UNSUPPORTED = 7,
  ES_ERR_INTERNAL = 8
} es_status;

/* Lengths in R_i, stresses in mu, surface stresses in mu R_i. */
typedef struct es_nondimensional_params {
  double alpha;
  double xi;
  double eta;
  double eta_f;
  double p_hat_o;
  double omega_s;
  double omega_l;
  int wet;
} es_nondimensional_params;

/* SI units: R_i, R_o [m]; mu, kappa_f, p_o [Pa]; mu_s, kappa_s [N/m]. */
typedef struct es_dimensional_params {
  double R_i;
  double R_o;
  double mu;
  double mu_s;
  double kappa_s;
  double kappa_f;
  double p_o;
  double omega_s;
  double omega_l;
  int wet;
} es_dimensional_params;

typedef struct es_solver_options {
  double bracket_lo;
  double bracket_hi;
  int scan_points;
  double tolerance;
} es_solver_options;

#define ES_MAX_ROOTS 8

typedef struct es_cavity_solution {
  double x;
  double lambda_o;
  double residual;
  double gamma0_over_mu_Ri;
  double p_f_over_mu;
  double sigma_i_over_mu;
  double j0;
  double e_c;
  double e_c_hat;
  double roots[ES_MAX_ROOTS];
  size_t root_count; /* total found; only the first ES_MAX_ROOTS are stored */
  size_t warning_count;
} es_cavity_solution;

typedef struct es_sweep_row {
  double p_hat_o;
  double x;
  double lambda_o;
  double strain;
  double gamma0_over_mu_Ri;
  double e_c;
  double p_f_over_mu;
  double residual;
} es_sweep_row;

typedef struct es_profile_sample {
  double radius_ratio;
  double sigma_rr_over_mu;
  double sigma_tt_over_mu;
  double p_over_mu;
} es_profile_sample;

typedef struct es_geometry_row {
  const char* fixture; /* owned by the report */
  const char* check;
  double residual;
  double fd_step;
} es_geometry_row;

typedef struct es_sweep es_sweep;
typedef struct es_profile es_profile;
typedef struct es_geometry_report es_geometry_report;

ES_API const char* es_version(void);
ES_API const char* es_status_string(es_status status);
ES_API const char* es_last_error(void);

/* Warnings from the last es_solve / es_relax / run call on this thread. */
ES_API size_t es_last_warning_count(void);
ES_API const char* es_last_warning(size_t index);

/* Scan table of the last ES_ERR_BRACKETING failure on this thread. */
ES_API size_t es_last_scan_size(void);
ES_API es_status es_last_scan_row(size_t index, double* x, double* residual);

ES_API void es_solver_options_default(es_solver_options* out);
ES_API es_status es_nondimensionalize(const es_dimensional_params* in, es_nondimensional_params* out);
ES_API es_status es_validate(const es_nondimensional_params* params);

ES_API es_status es_equilibrium_residual(const es_nondimensional_params* params, double x, double* out);

/* options may be NULL for defaults. */
ES_API es_status es_solve(const es_nondimensional_params* params, double p_hat_o, const es_solver_options* options,
                          es_cavity_solution* out);
ES_API es_status es_relax(const es_nondimensional_params* params, const es_solver_options* options,
                          es_cavity_solution* out);

/* count >= 2 values from `from` to `to`, endpoints exact. */
ES_API es_status es_linear_grid(double from, double to, int count, double* out);

ES_API es_status es_sweep_run(const es_nondimensional_params* params, const double* p_hat_grid, size_t count,
                              const es_solver_options* options, es_sweep** out);
ES_API size_t es_sweep_size(const es_sweep* sweep);
ES_API es_status es_sweep_get(const es_sweep* sweep, size_t index, es_sweep_row* out);
ES_API void es_sweep_destroy(es_sweep* sweep);

ES_API es_status es_profile_run(const es_nondimensional_params* params, double p_hat_o, int samples,
                                const es_solver_options* options, es_profile** out);
ES_API size_t es_profile_size(const es_profile* profile);
ES_API es_status es_profile_get(const es_profile* profile, size_t index, es_profile_sample* out);
ES_API void es_profile_destroy(es_profile* profile);

ES_API es_status es_geometry_check_run(double fd_step, es_geometry_report** out);
ES_API size_t es_geometry_report_size(const es_geometry_report* report);
ES_API es_status es_geometry_report_get(const es_geometry_report* report, size_t index, es_geometry_row* out);
ES_API void es_geometry_report_destroy(es_geometry_report* report);

#ifdef __cplusplus
}
#endif

#endif /* ELASTOSURF_H */
