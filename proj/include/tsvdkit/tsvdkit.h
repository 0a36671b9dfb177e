/*
 * C interface to the tsvdkit shared library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_destroy function. Every fallible call returns a tsvdkit_status;
 * on failure, tsvdkit_last_error() describes the problem (the message is
 * thread-local and valid until the next failing call on the same thread).
 * Output handles are only written on success.
 *
 * Indices in this interface are 0-based. Tensor data is laid out frontal
 * slice major: entry (i, j, k) of an m x n x p tensor is data[k*m*n + i*n + j].
 */
#ifndef TSVDKIT_H
#define TSVDKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TSVDKIT_BUILDING)
#    define TSVDKIT_API __declspec(dllexport)
#  else
#    define TSVDKIT_API __declspec(dllimport)
#  endif
#else
#  define TSVDKIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tsvdkit_status {
    TSVDKIT_OK = 0,
    TSVDKIT_ERR_ARGUMENT = 1,  /* null pointer or out-of-range parameter */
    TSVDKIT_ERR_DIMENSION = 2, /* non-conforming shapes */
    TSVDKIT_ERR_FORMAT = 3,    /* unreadable/malformed tensor document, non-finite data */
    TSVDKIT_ERR_STRUCTURE = 4, /* input lacks required circulant/conjugate structure */
    TSVDKIT_ERR_NUMERICAL = 5, /* singular slice, SVD non-convergence */
    TSVDKIT_ERR_INTERNAL = 6
} tsvdkit_status;

typedef struct tsvdkit_tensor tsvdkit_tensor;
typedef struct tsvdkit_tsvd tsvdkit_tsvd;
typedef struct tsvdkit_rank_report tsvdkit_rank_report;
typedef struct tsvdkit_verify_report tsvdkit_verify_report;

TSVDKIT_API const char* tsvdkit_version(void);
TSVDKIT_API const char* tsvdkit_status_string(tsvdkit_status status);
TSVDKIT_API const char* tsvdkit_last_error(void);

/* ---- tensors ---- */

/* Copies m*n*p values from data; data may be NULL for a zero tensor. */
TSVDKIT_API tsvdkit_status tsvdkit_tensor_create(size_t m, size_t n, size_t p, const double* data,
                                                 tsvdkit_tensor** out);
TSVDKIT_API void tsvdkit_tensor_destroy(tsvdkit_tensor* t);
TSVDKIT_API tsvdkit_status tsvdkit_tensor_dims(const tsvdkit_tensor* t, size_t* m, size_t* n, size_t* p);
/* Borrowed pointer to m*n*p values; valid while t lives. */
TSVDKIT_API const double* tsvdkit_tensor_data(const tsvdkit_tensor* t);

TSVDKIT_API tsvdkit_status tsvdkit_tensor_load(const char* path, tsvdkit_tensor** out);
TSVDKIT_API tsvdkit_status tsvdkit_tensor_save(const tsvdkit_tensor* t, const char* path);
TSVDKIT_API tsvdkit_status tsvdkit_tensor_parse(const char* text, tsvdkit_tensor** out);

TSVDKIT_API tsvdkit_status tsvdkit_frobenius_norm(const tsvdkit_tensor* t, double* out);
TSVDKIT_API tsvdkit_status tsvdkit_identity(size_t n, size_t p, tsvdkit_tensor** out);
TSVDKIT_API tsvdkit_status tsvdkit_transpose(const tsvdkit_tensor* a, tsvdkit_tensor** out);
/* out = a - b */
TSVDKIT_API tsvdkit_status tsvdkit_subtract(const tsvdkit_tensor* a, const tsvdkit_tensor* b,
                                            tsvdkit_tensor** out);

/* ---- T-product algebra ---- */

TSVDKIT_API tsvdkit_status tsvdkit_tprod(const tsvdkit_tensor* a, const tsvdkit_tensor* b, tsvdkit_tensor** out);
TSVDKIT_API tsvdkit_status tsvdkit_tprod_direct(const tsvdkit_tensor* a, const tsvdkit_tensor* b,
                                                tsvdkit_tensor** out);
TSVDKIT_API tsvdkit_status tsvdkit_tinverse(const tsvdkit_tensor* a, tsvdkit_tensor** out);
TSVDKIT_API tsvdkit_status tsvdkit_is_orthogonal(const tsvdkit_tensor* q, double tol, int* result);
TSVDKIT_API tsvdkit_status tsvdkit_random_orthogonal(size_t n, size_t p, uint64_t seed, tsvdkit_tensor** out);

/* ---- singular-value mapping and T-SVD ---- */

TSVDKIT_API tsvdkit_status tsvdkit_km_mapping(const tsvdkit_tensor* a, tsvdkit_tensor** out);
TSVDKIT_API tsvdkit_status tsvdkit_km_equal(const tsvdkit_tensor* a, const tsvdkit_tensor* b, double tol,
                                            int* result);

TSVDKIT_API tsvdkit_status tsvdkit_tsvd_compute(const tsvdkit_tensor* a, tsvdkit_tsvd** out);
TSVDKIT_API void tsvdkit_tsvd_destroy(tsvdkit_tsvd* f);
/* Borrowed factor handles; valid while f lives. */
TSVDKIT_API const tsvdkit_tensor* tsvdkit_tsvd_u(const tsvdkit_tsvd* f);
TSVDKIT_API const tsvdkit_tensor* tsvdkit_tsvd_s(const tsvdkit_tsvd* f);
TSVDKIT_API const tsvdkit_tensor* tsvdkit_tsvd_v(const tsvdkit_tsvd* f);
/* u * s * v^T */
TSVDKIT_API tsvdkit_status tsvdkit_tsvd_reconstruct(const tsvdkit_tsvd* f, tsvdkit_tensor** out);
/* Keeps the `rank` largest singular values, 1 <= rank <= p*min(m,n). */
TSVDKIT_API tsvdkit_status tsvdkit_truncate_trank(const tsvdkit_tsvd* f, size_t rank, tsvdkit_tensor** out);
TSVDKIT_API tsvdkit_status tsvdkit_best_trank_one(const tsvdkit_tensor* a, tsvdkit_tensor** out);
TSVDKIT_API tsvdkit_status tsvdkit_sigma1_bound_check(const tsvdkit_tensor* a, int* result);

/* ---- rank report ---- */

/* tol < 0 selects the default eps * max(m,n) * p * sigma_1. */
TSVDKIT_API tsvdkit_status tsvdkit_rank_report_compute(const tsvdkit_tensor* a, double tol,
                                                       tsvdkit_rank_report** out);
TSVDKIT_API void tsvdkit_rank_report_destroy(tsvdkit_rank_report* r);
/* Borrowed arrays; valid while r lives. */
TSVDKIT_API const double* tsvdkit_rank_report_singular_values(const tsvdkit_rank_report* r, size_t* count);
TSVDKIT_API const double* tsvdkit_rank_report_t_singular_values(const tsvdkit_rank_report* r, size_t* count);
TSVDKIT_API size_t tsvdkit_rank_report_t_rank(const tsvdkit_rank_report* r);
TSVDKIT_API size_t tsvdkit_rank_report_tubal_rank(const tsvdkit_rank_report* r);
TSVDKIT_API double tsvdkit_rank_report_threshold(const tsvdkit_rank_report* r);

/* ---- invariant suite ---- */

TSVDKIT_API tsvdkit_status tsvdkit_verify(const tsvdkit_tensor* a, uint64_t seed, int trials,
                                          tsvdkit_verify_report** out);
TSVDKIT_API void tsvdkit_verify_report_destroy(tsvdkit_verify_report* r);
TSVDKIT_API size_t tsvdkit_verify_report_count(const tsvdkit_verify_report* r);
/* Borrowed strings; valid while r lives. */
TSVDKIT_API tsvdkit_status tsvdkit_verify_report_item(const tsvdkit_verify_report* r, size_t index,
                                                      const char** name, int* passed, const char** detail);

#ifdef __cplusplus
}
#endif

#endif /* TSVDKIT_H */
