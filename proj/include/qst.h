/* Public C API for the qudit state-transfer library.
 *
 * All functions return a qst_status; outputs go through pointer arguments.
 * Objects are opaque handles created and destroyed by the library. On any
 * non-QST_OK return, qst_last_error() gives a human-readable message for
 * the calling thread.
 */
#ifndef QST_H
#define QST_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QST_API __declspec(dllexport)
#else
#define QST_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qst_status {
  QST_OK = 0,
  QST_ERR_INVALID_ARGUMENT = 1,
  QST_ERR_DOMAIN = 2,
  QST_ERR_INTERNAL = 3
} qst_status;

/* Periodic chain of n_sites d-level systems; sender/receiver are 0-indexed
 * ring positions. Holds precomputed tables, reusable across times. */
typedef struct qst_chain qst_chain;

QST_API qst_status qst_chain_create(int n_sites, int levels, double coupling, double field,
                                    int sender, int receiver, qst_chain** out);
QST_API void qst_chain_destroy(qst_chain* chain);

QST_API const char* qst_last_error(void);

typedef struct qst_amplitude {
  double re;
  double im;
  double modulus;
  double phase;
  double time;
} qst_amplitude;

/* Exact N-term eigenmode sum for the transfer amplitude f_rs(t). */
QST_API qst_status qst_amplitude_exact(const qst_chain* chain, double t, qst_amplitude* out);

/* Large-N Bessel asymptotic form of the amplitude. */
QST_API qst_status qst_amplitude_bessel(const qst_chain* chain, double t, qst_amplitude* out);

/* |1 - sum_k |f_ks(t)|^2| over every receiver k. */
QST_API qst_status qst_unitarity_defect(const qst_chain* chain, double t, double* out);

/* Haar-averaged fidelity at time t with an explicit field value. */
QST_API qst_status qst_average_fidelity(const qst_chain* chain, double t, double field,
                                        double* out);

/* The B*t << 1 limit of the averaged fidelity. */
QST_API qst_status qst_average_fidelity_small_field(const qst_chain* chain, double t, double* out);

typedef enum qst_strategy {
  QST_STRATEGY_FIELD_TUNED = 0,
  QST_STRATEGY_VANISHING_FIELD = 1
} qst_strategy;

typedef struct qst_strategy_result {
  qst_strategy strategy;
  double t_opt;
  double b_opt;
  double f_avg_opt;
  double grid_step;
} qst_strategy_result;

/* Optimal pickup search over t in (0, t_max] on the given grid step.
 * b_max <= 0 selects the default per-candidate field cap for the tuned
 * strategy and is ignored by the vanishing-field strategy. */
QST_API qst_status qst_optimize(const qst_chain* chain, qst_strategy strategy, double t_max,
                                double t_step, double b_max, qst_strategy_result* out);

/* (sqrt(d(d+1)F - d) - 1)/(d - 1); QST_ERR_DOMAIN when the radicand is
 * below -1e-12. */
QST_API qst_status qst_scaling_lhs(double f_avg_opt, int levels, double* out);

typedef struct qst_negativity {
  double ln_value;
  double efficiency;
  double time;
  double closed_form;
} qst_negativity;

/* Closed-form logarithmic negativity log2(1 + |f|^2 (d-1)) and the
 * distribution efficiency at time t. */
QST_API qst_status qst_log_negativity_closed(const qst_chain* chain, double t, qst_negativity* out);

/* Logarithmic negativity from the eigenvalues of the partially transposed
 * d^2 x d^2 joint state; cross-check for the closed form. */
QST_API qst_status qst_log_negativity_generic(const qst_chain* chain, double t, double* out);

/* Runs the built-in oracle suite and writes a NUL-terminated text report
 * into buf (truncated to buf_len). *failures receives the count of failed
 * checks. Deterministic for a fixed seed. inject_failure != 0 zeroes all
 * tolerances (test hook). */
QST_API qst_status qst_verify(uint64_t seed, int inject_failure, char* buf, size_t buf_len,
                              int* failures);

#ifdef __cplusplus
}
#endif

#endif /* QST_H */
