/*
 * effnum.h -- C interface of the effective number library.
 *
 * Objects are opaque handles created by effnum_*_create functions and
 * released with the matching effnum_*_destroy (passing NULL is allowed).
 * Every fallible function returns an effnum_status; on failure the message
 * of the most recent error on the calling thread is available from
 * effnum_last_error(). Output parameters are written only on success.
 *
 * Complex numbers are passed as interleaved (re, im) double pairs; matrices
 * are row-major.
 *
 * All functions are safe to call concurrently on distinct handles; handles
 * are immutable after creation and may be shared read-only between threads.
 */
#ifndef EFFNUM_H
#define EFFNUM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(EFFNUM_BUILDING_LIBRARY)
#    define EFFNUM_API __declspec(dllexport)
#  else
#    define EFFNUM_API __declspec(dllimport)
#  endif
#else
#  define EFFNUM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum effnum_status {
  EFFNUM_OK = 0,
  EFFNUM_ERR_INVALID_PROBABILITY = 1,
  EFFNUM_ERR_INVALID_COUNTING = 2,
  EFFNUM_ERR_LENGTH_MISMATCH = 3,
  EFFNUM_ERR_TRANSFER_VIOLATION = 4,
  EFFNUM_ERR_DEGENERATE_INPUT = 5,
  EFFNUM_ERR_BAD_ORDER = 6,
  EFFNUM_ERR_DIMENSION_MISMATCH = 7,
  EFFNUM_ERR_NON_ORTHONORMAL_BASIS = 8,
  EFFNUM_ERR_NOT_HERMITIAN = 9,
  EFFNUM_ERR_EMPTY_RECORD = 10,
  EFFNUM_ERR_NOT_NORMALIZED = 11,
  EFFNUM_ERR_INVALID_ARGUMENT = 12,
  EFFNUM_ERR_UNKNOWN_QUANTIFIER = 13,
  EFFNUM_ERR_NUMERIC_FAILURE = 14,
  EFFNUM_ERR_NULL_POINTER = 15,
  EFFNUM_ERR_OUT_OF_MEMORY = 16,
  EFFNUM_ERR_INTERNAL = 17
} effnum_status;

EFFNUM_API const char* effnum_version(void);
EFFNUM_API const char* effnum_status_name(effnum_status status);
/* Message of the last failure on this thread; "" if none. */
EFFNUM_API const char* effnum_last_error(void);

/* ---- counting vectors ------------------------------------------------- */

typedef struct effnum_counting effnum_counting;

typedef enum effnum_cumulation {
  EFFNUM_MORE_CUMULATED = 0,
  EFFNUM_LESS_CUMULATED = 1,
  EFFNUM_EQUAL = 2,
  EFFNUM_INCOMPARABLE = 3
} effnum_cumulation;

/* Non-negative weights summing to n. With renormalize != 0 a sum outside
 * tolerance is rescaled instead of rejected. */
EFFNUM_API effnum_status effnum_counting_create(const double* weights, size_t n, int renormalize,
                                                effnum_counting** out);
/* W = n P from a probability vector. */
EFFNUM_API effnum_status effnum_counting_from_probability(const double* probabilities, size_t n,
                                                          int renormalize, effnum_counting** out);
EFFNUM_API void effnum_counting_destroy(effnum_counting* w);
EFFNUM_API size_t effnum_counting_size(const effnum_counting* w);
/* Copies the entries into out[0..capacity); capacity must be >= size. */
EFFNUM_API effnum_status effnum_counting_entries(const effnum_counting* w, double* out, size_t capacity);
EFFNUM_API effnum_status effnum_counting_concat(const effnum_counting* w, const effnum_counting* b,
                                                effnum_counting** out);
EFFNUM_API effnum_status effnum_counting_sort_descending(const effnum_counting* w, effnum_counting** out);
EFFNUM_API effnum_status effnum_counting_transfer(const effnum_counting* w, size_t i, size_t j,
                                                  double epsilon, effnum_counting** out);
EFFNUM_API effnum_status effnum_compare_cumulation(const effnum_counting* w, const effnum_counting* b,
                                                   effnum_cumulation* out);
/* out receives n + m probabilities: (n/(n+m)) p followed by (m/(n+m)) q. */
EFFNUM_API effnum_status effnum_compose_probability(const double* p, size_t n, const double* q, size_t m,
                                                    double* out);

/* ---- quantifiers ------------------------------------------------------ */

typedef enum effnum_quantifier_kind {
  EFFNUM_MINIMAL_ENF = 0,
  EFFNUM_SUPPORT_COUNT = 1,
  EFFNUM_PARTICIPATION_NUMBER = 2,
  EFFNUM_EXP_SHANNON = 3,
  EFFNUM_EXP_RENYI = 4
} effnum_quantifier_kind;

typedef struct effnum_quantifier {
  effnum_quantifier_kind kind;
  double alpha; /* order, exp_renyi only */
} effnum_quantifier;

/* Name is one of minimal_enf, support_count, participation_number,
 * exp_shannon, exp_renyi; alpha is used only for exp_renyi. */
EFFNUM_API effnum_status effnum_quantifier_parse(const char* name, double alpha, effnum_quantifier* out);
EFFNUM_API const char* effnum_quantifier_name(effnum_quantifier_kind kind);
EFFNUM_API effnum_status effnum_evaluate(effnum_quantifier q, const effnum_counting* w, double* out);
/* 1 when no entry lies in (0, 1), i.e. n_star equals the support count. */
EFFNUM_API effnum_status effnum_interval_collapses(const effnum_counting* w, int* out);

/* ---- quantum states --------------------------------------------------- */

typedef struct effnum_state effnum_state;
typedef struct effnum_basis effnum_basis;
typedef struct effnum_observable effnum_observable;
typedef struct effnum_record effnum_record;

EFFNUM_API effnum_status effnum_state_create(const double* re_im, size_t n, int renormalize,
                                             effnum_state** out);
EFFNUM_API void effnum_state_destroy(effnum_state* s);
EFFNUM_API size_t effnum_state_size(const effnum_state* s);
/* Copies 2n doubles. */
EFFNUM_API effnum_status effnum_state_amplitudes(const effnum_state* s, double* re_im, size_t capacity);

EFFNUM_API effnum_status effnum_basis_identity(size_t n, effnum_basis** out);
/* rows_re_im: n*n complex entries, row i is basis state i. */
EFFNUM_API effnum_status effnum_basis_create(const double* rows_re_im, size_t n, effnum_basis** out);
EFFNUM_API void effnum_basis_destroy(effnum_basis* b);
EFFNUM_API size_t effnum_basis_size(const effnum_basis* b);
/* Copies basis state i (2n doubles). */
EFFNUM_API effnum_status effnum_basis_vector(const effnum_basis* b, size_t i, double* re_im, size_t capacity);

EFFNUM_API effnum_status effnum_observable_create(const double* re_im, size_t n, effnum_observable** out);
EFFNUM_API void effnum_observable_destroy(effnum_observable* o);
EFFNUM_API size_t effnum_observable_size(const effnum_observable* o);
/* Eigenbasis (ascending eigenvalues). eigenvalues must hold n doubles;
 * degenerate and residual may be NULL. */
EFFNUM_API effnum_status effnum_observable_eigen(const effnum_observable* o, effnum_basis** basis,
                                                 double* eigenvalues, int* degenerate, double* residual);

EFFNUM_API effnum_status effnum_weights_from_state(const effnum_state* s, const effnum_basis* b,
                                                   effnum_counting** out);
EFFNUM_API effnum_status effnum_mu_uncertainty(const effnum_state* s, const effnum_basis* b, double* out);
EFFNUM_API effnum_status effnum_mu_uncertainty_observable(const effnum_state* s, const effnum_observable* o,
                                                          double* out, int* degenerate);

/* count collapses of s onto the eigenbasis of o (identity basis with
 * eigenvalues 0..n-1 when o is NULL). */
EFFNUM_API effnum_status effnum_sample_measurements(const effnum_state* s, const effnum_observable* o,
                                                    size_t count, uint64_t seed, effnum_record** out);
EFFNUM_API void effnum_record_destroy(effnum_record* r);
EFFNUM_API size_t effnum_record_size(const effnum_record* r);
EFFNUM_API effnum_status effnum_record_outcome(const effnum_record* r, size_t l, size_t* index,
                                               double* eigenvalue);
EFFNUM_API effnum_status effnum_empirical_mu_uncertainty(const effnum_record* r, size_t n, double* out);

/* ---- continuum -------------------------------------------------------- */

typedef struct effnum_grid effnum_grid;

/* origin may be NULL (all zeros). tolerance <= 0 selects the default for
 * grids read from files (1e-9). */
EFFNUM_API effnum_status effnum_grid_create(const size_t* dims, const double* spacing, const double* origin,
                                            size_t rank, const double* re_im, size_t count, double tolerance,
                                            effnum_grid** out);
EFFNUM_API void effnum_grid_destroy(effnum_grid* g);
EFFNUM_API size_t effnum_grid_cell_count(const effnum_grid* g);
EFFNUM_API double effnum_grid_cell_volume(const effnum_grid* g);
EFFNUM_API double effnum_grid_region_volume(const effnum_grid* g);
EFFNUM_API effnum_status effnum_grid_effective_volume(const effnum_grid* g, double* out);
/* Counting vector induced by the cells (n_star of it times the cell volume
 * reproduces the effective volume). */
EFFNUM_API effnum_status effnum_grid_discrete_limit(const effnum_grid* g, effnum_counting** out);

/* ---- axiom verification ----------------------------------------------- */

typedef struct effnum_battery effnum_battery;

typedef struct effnum_generator_config {
  uint64_t seed;
  size_t max_n;
  size_t trials_per_axiom;
  double sparsity;
} effnum_generator_config;

/* Seed 1, max_n 16, 1000 trials, sparsity 0.25. */
EFFNUM_API effnum_generator_config effnum_generator_config_default(void);
/* Runs the seven checks in the order A, M_minus, S, C, B1, B2, B. */
EFFNUM_API effnum_status effnum_battery_run(effnum_quantifier q, const effnum_generator_config* cfg,
                                            effnum_battery** out);
EFFNUM_API void effnum_battery_destroy(effnum_battery* b);
EFFNUM_API size_t effnum_battery_size(const effnum_battery* b);
EFFNUM_API effnum_status effnum_battery_result(const effnum_battery* b, size_t k, const char** axiom,
                                               int* passed, size_t* violation_count);
/* 1 when every report matches the expected pass/fail row of the quantifier. */
EFFNUM_API int effnum_battery_matches_expected(const effnum_battery* b);
EFFNUM_API int effnum_battery_all_passed(const effnum_battery* b);
/* JSON document owned by the battery; valid until it is destroyed. */
EFFNUM_API const char* effnum_battery_json(const effnum_battery* b);

/* ---- Anderson chain demo ---------------------------------------------- */

typedef struct effnum_anderson effnum_anderson;

typedef struct effnum_anderson_row {
  size_t realization;
  size_t index;
  double energy;
  double n_star;
  double participation;
} effnum_anderson_row;

EFFNUM_API effnum_status effnum_anderson_run(size_t sites, double disorder, double hopping, uint64_t seed,
                                             size_t realizations, effnum_anderson** out);
EFFNUM_API void effnum_anderson_destroy(effnum_anderson* a);
EFFNUM_API size_t effnum_anderson_row_count(const effnum_anderson* a);
EFFNUM_API effnum_status effnum_anderson_row_at(const effnum_anderson* a, size_t k, effnum_anderson_row* out);
EFFNUM_API effnum_status effnum_anderson_means(const effnum_anderson* a, double* n_star, double* participation,
                                               size_t* degenerate_realizations);

#ifdef __cplusplus
}
#endif

#endif /* EFFNUM_H */
