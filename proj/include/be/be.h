/* Copyright 2026 The be Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the damped-gas laboratory: exact self-similar profiles,
 * entropy functionals, decay-rate calculus, the hyperbolic and porous-medium
 * solvers, and the acceptance suite.  Every function returns a be_status;
 * outputs go through pointers, and the thread-local message from
 * be_last_error_message() describes the most recent failure on this thread.
 */

#ifndef BE_BE_H_
#define BE_BE_H_

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#if defined(BE_BUILDING_SHARED)
#define BE_API __declspec(dllexport)
#else
#define BE_API __declspec(dllimport)
#endif
#else
#define BE_API __attribute__((visibility("default")))
#endif

typedef enum be_status {
  BE_OK = 0,
  BE_ERR_DOMAIN = 1,           /* parameter outside its mathematical domain */
  BE_ERR_INVALID_ARGUMENT = 2, /* structural misuse: null handle, bad sizes */
  BE_ERR_PARSE = 3,            /* config or CSV text could not be parsed */
  BE_ERR_IO = 4,               /* file could not be opened or written */
  BE_ERR_NUMERICAL = 5,        /* iteration or time march failed */
  BE_ERR_INTERNAL = 6          /* unexpected failure */
} be_status;

BE_API const char* be_status_name(be_status status);

/* Message for the most recent error on the calling thread ("" if none). */
BE_API const char* be_last_error_message(void);

BE_API const char* be_version(void);

/* ------------------------------------------------------------------------
 * Gas law and entropy functionals
 * ------------------------------------------------------------------------ */

typedef struct be_gas be_gas;

/* gamma must lie in (1, 3). */
BE_API be_status be_gas_create(double gamma, be_gas** out);
BE_API void be_gas_destroy(be_gas* gas);

/* kappa = (gamma-1)^2/(4 gamma), theta = (gamma-1)/2. */
BE_API be_status be_gas_kappa(const be_gas* gas, double* out);
BE_API be_status be_gas_theta(const be_gas* gas, double* out);

/* The constants of the high-moment entropy eta = C1 rho^{gamma+1} + C2 m^2
 * + A(rho, m). */
BE_API be_status be_entropy_constants(const be_gas* gas, double* c1, double* c2);

/* High-moment entropy value and its remainder A at one state. */
BE_API be_status be_tilde_eta(const be_gas* gas, double rho, double m, double* value,
                              double* remainder);

/* ------------------------------------------------------------------------
 * Self-similar profile
 * ------------------------------------------------------------------------ */

typedef struct be_profile be_profile;

/* gamma in (1, 3), lambda in [0, 1), mass > 0. */
BE_API be_status be_profile_create(double gamma, double lambda, double mass, be_profile** out);
BE_API void be_profile_destroy(be_profile* profile);

/* Amplitude A, shape B, and similarity exponent s of
 * rho(x, t) = (1+t)^{-s} (A - B x^2 (1+t)^{-2s})_+^{1/(gamma-1)}. */
BE_API be_status be_profile_params(const be_profile* profile, double* amplitude, double* shape,
                                   double* exponent);
BE_API be_status be_profile_density(const be_profile* profile, double x, double t, double* out);
BE_API be_status be_profile_momentum(const be_profile* profile, double x, double t, double* out);
BE_API be_status be_profile_support_radius(const be_profile* profile, double t, double* out);

/* L^p norm of the density at time t; p >= 1 or INFINITY. */
BE_API be_status be_profile_lp_norm(const be_profile* profile, double p, double t, double* out);

/* ------------------------------------------------------------------------
 * Decay-rate calculus
 * ------------------------------------------------------------------------ */

typedef struct be_rates_result be_rates_result;

/* Exponent iteration for gamma in (1, 3), lambda in (0, 1); the handle owns
 * the closed-form values and the iteration trace. */
BE_API be_status be_rates_compute(double gamma, double lambda, be_rates_result** out);
BE_API void be_rates_result_destroy(be_rates_result* result);

/* branch is 1 below lambda = gamma/(gamma+2) and 2 above. */
BE_API be_status be_rates_values(const be_rates_result* result, double* mu_tilde,
                                 double* alpha_tilde, int* branch);
BE_API be_status be_rates_trace_size(const be_rates_result* result, size_t* out);
BE_API be_status be_rates_trace_entry(const be_rates_result* result, size_t index, double* mu,
                                      double* theta);

/* ------------------------------------------------------------------------
 * Damping and orchestration
 * ------------------------------------------------------------------------ */

/* Exact decay factor of m' = -m/(1+t)^lambda over [t0, t0+dt], lambda in
 * [0, 1). */
BE_API be_status be_damping_factor(double lambda, double t0, double dt, double* out);

/* Runs the experiment described by a key = value config file.  mode may be
 * NULL/"" (use the config's mode) or "run"/"pme".  output_dir overrides both
 * the BE_OUTPUT_DIR environment variable and the config (NULL/"" defers).
 * When resolved_dir is non-NULL the output directory actually used is copied
 * into it (truncated to resolved_cap - 1 characters). */
BE_API be_status be_run(const char* config_path, const char* mode, const char* output_dir,
                        char* resolved_dir, size_t resolved_cap);

/* Samples the exact profile to CSV columns x,rho,mom on
 * [-1.1 R(t), 1.1 R(t)] with `samples` rows. */
BE_API be_status be_emit_profile_csv(double gamma, double lambda, double mass, double time,
                                     size_t samples, const char* path);

/* Least-squares slope of log(column) vs log(1+t) from a diagnostics CSV
 * restricted to t in [t_start, t_end]. */
BE_API be_status be_fit_decay_csv(const char* csv_path, const char* column, double t_start,
                                  double t_end, double* slope, double* intercept,
                                  double* r_squared);

/* ------------------------------------------------------------------------
 * Acceptance suite
 * ------------------------------------------------------------------------ */

typedef void (*be_criterion_callback)(int id, const char* name, int pass, const char* detail,
                                      double seconds, void* user);

/* Runs the acceptance criteria (quick != 0 keeps only the sub-minute ones).
 * The callback, when non-NULL, fires after each criterion.  Returns BE_OK
 * when every executed criterion passed. */
BE_API be_status be_validate(int quick, be_criterion_callback callback, void* user,
                             int* n_passed, int* n_failed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BE_BE_H_ */
