/* C interface to the xydqpt library. All functions are thread-safe; the
 * message behind a non-OK status is kept per thread in xydqpt_last_error(). */
#ifndef XYDQPT_H
#define XYDQPT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(XYDQPT_BUILDING_LIBRARY)
#define XYDQPT_API __attribute__((visibility("default")))
#else
#define XYDQPT_API
#endif

typedef enum xydqpt_status {
  XYDQPT_OK = 0,
  XYDQPT_INVALID_ARGUMENT = 1,
  XYDQPT_DEGENERATE_ANGLE = 2,
  XYDQPT_QUADRATURE_NONCONVERGENCE = 3,
  XYDQPT_NOT_SKEW = 4,
  XYDQPT_NONMONOTONE_BRACKET = 5,
  XYDQPT_PATTERN_MISMATCH = 6,
  XYDQPT_NEGATIVE_LIMIT = 7,
  XYDQPT_CONFIG = 8,
  XYDQPT_IO = 9,
  XYDQPT_BUFFER_TOO_SMALL = 10,
  XYDQPT_INTERNAL = 11
} xydqpt_status;

typedef enum xydqpt_beta_status {
  XYDQPT_BETA_OK = 0,
  XYDQPT_BETA_ALWAYS = 1,     /* crossing even at the upper bracket end */
  XYDQPT_BETA_NEVER = 2,      /* no crossing even at the lower bracket end */
  XYDQPT_BETA_NONMONOTONE = 3 /* re-entrant crossing existence */
} xydqpt_beta_status;

typedef enum xydqpt_direction { XYDQPT_X = 0, XYDQPT_Y = 1 } xydqpt_direction;

typedef struct xydqpt_protocol xydqpt_protocol;
typedef struct xydqpt_sweep xydqpt_sweep;

typedef struct xydqpt_magnetization_point {
  double mx;
  double my;
  double mz;
  int r_used;
  int converged;
} xydqpt_magnetization_point;

typedef void (*xydqpt_line_fn)(const char* line, void* user);

XYDQPT_API const char* xydqpt_version(void);
XYDQPT_API const char* xydqpt_last_error(void);
XYDQPT_API const char* xydqpt_status_name(xydqpt_status status);
/* 1 for failures of a numerical procedure, 0 for bad input or config. */
XYDQPT_API int xydqpt_status_is_numerical(xydqpt_status status);

/* Spectrum. ks receives sites/2 momenta. */
XYDQPT_API xydqpt_status xydqpt_momentum_grid(int sites, double* ks, size_t capacity);
XYDQPT_API xydqpt_status xydqpt_dispersion(double gamma, double lambda, double k, double* eps);
XYDQPT_API xydqpt_status xydqpt_bogoliubov_angle(double gamma, double lambda, double k,
                                                 double* theta);

/* Quench protocol; sites == 0 selects the thermodynamic limit. */
XYDQPT_API xydqpt_status xydqpt_protocol_create(double gamma0, double lambda0, double gammaf,
                                                double lambdaf, double beta, double phi,
                                                int sites, xydqpt_protocol** out);
XYDQPT_API void xydqpt_protocol_destroy(xydqpt_protocol* proto);

XYDQPT_API xydqpt_status xydqpt_mode_amplitude(const xydqpt_protocol* proto, double k, double t,
                                               double* re, double* im);
/* Finite-N product form or thermodynamic-limit integral, per the protocol. */
XYDQPT_API xydqpt_status xydqpt_rate(const xydqpt_protocol* proto, const double* times,
                                     size_t count, unsigned workers, double* values);
/* Rate on the given uniform grid followed by cusp localization. */
XYDQPT_API xydqpt_status xydqpt_rate_cusps(const xydqpt_protocol* proto, const double* times,
                                           size_t count, unsigned workers, double* cusps,
                                           size_t capacity, size_t* found);

/* Critical momenta; t_c holds three times (n = 0, 1, 2) per crossing. */
XYDQPT_API xydqpt_status xydqpt_crossings(const xydqpt_protocol* proto, double* k_star,
                                          double* t_c, size_t capacity, size_t* found);
XYDQPT_API xydqpt_status xydqpt_fisher_curve(const xydqpt_protocol* proto, int branch,
                                             int resolution, double* k, double* re_z,
                                             double* im_z, int* is_crossing);
/* The protocol's beta is ignored. beta_c is meaningful for XYDQPT_BETA_OK. */
XYDQPT_API xydqpt_status xydqpt_critical_beta(const xydqpt_protocol* proto,
                                              xydqpt_beta_status* status, double* beta_c);

/* Initial-state observables. */
XYDQPT_API xydqpt_status xydqpt_m_z(double gamma, double lambda, double beta, double phi,
                                    int sites, double* mz);
XYDQPT_API xydqpt_status xydqpt_correlator(double gamma, double lambda, double beta, double phi,
                                           int sites, xydqpt_direction direction, int r,
                                           double* re, double* im);
XYDQPT_API xydqpt_status xydqpt_magnetization(double gamma, double lambda, double beta,
                                              double phi, double tol, int r_cap,
                                              xydqpt_magnetization_point* out);

/* Row-major complex skew-symmetric matrix given as separate real/imag arrays. */
XYDQPT_API xydqpt_status xydqpt_pfaffian(const double* re, const double* im, size_t dim,
                                         double* pf_re, double* pf_im);

/* Sweeps. Overrides are "key=value" strings. A created sweep starts empty
 * and is validated when run. */
XYDQPT_API xydqpt_status xydqpt_sweep_create(const char* kind, xydqpt_sweep** out);
XYDQPT_API xydqpt_status xydqpt_sweep_load(const char* path, xydqpt_sweep** out);
XYDQPT_API xydqpt_status xydqpt_sweep_parse(const char* json, xydqpt_sweep** out);
XYDQPT_API xydqpt_status xydqpt_sweep_set(xydqpt_sweep* sweep, const char* assignment);
/* Writes the CSV under out_dir and reports the one-line summary through
 * on_line. A failing grid point yields its status after the partial CSV is
 * flushed. */
XYDQPT_API xydqpt_status xydqpt_sweep_run(xydqpt_sweep* sweep, const char* out_dir,
                                          unsigned workers, xydqpt_line_fn on_line, void* user);
XYDQPT_API void xydqpt_sweep_destroy(xydqpt_sweep* sweep);

/* Canned figure bundles (fig2 fig3 fig4 fig5 fig6 fig8). config_dir NULL
 * selects xydqpt_default_config_dir(). Overrides apply to every sweep. */
XYDQPT_API const char* xydqpt_default_config_dir(void);
XYDQPT_API xydqpt_status xydqpt_figure_run(const char* tag, const char* config_dir,
                                           const char* out_dir, unsigned workers,
                                           const char* const* overrides, size_t override_count,
                                           xydqpt_line_fn on_line, void* user);

/* Oracle cross-checks; one PASS/FAIL line per check through on_line. */
XYDQPT_API xydqpt_status xydqpt_selftest(xydqpt_line_fn on_line, void* user, int* failures);

#ifdef __cplusplus
}
#endif

#endif
