#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tsvdkit/tensor3.hpp"

namespace tsvdkit {

/// T-SVD a = u * s * v^T with u (m x m x p) and v (n x n x p) orthogonal and
/// s = km_mapping(a) real and f-diagonal.
struct TSvd {
    Tensor3 u;
    Tensor3 s;
    Tensor3 v;
};

/// Maps a tensor to the real f-diagonal tensor obtained by transforming along
/// mode 3, replacing every slice by its singular values in non-increasing
/// order, and transforming back. Entry (i, i, k) equals
/// (1/p) sum_l conj(w)^(k*l) sigma_i(slice l).
Tensor3 km_mapping(const Tensor3& a);

TSvd tsvd(const Tensor3& a);

/// Singular values, T-singular values and the two rank notions of a tensor.
struct RankReport {
    /// |s(i,i,k)| over all p*min(m,n) diagonal positions, non-increasing.
    std::vector<double> singular_values;
    /// sqrt(sum_k s(i,i,k)^2) for i = 1..min(m,n), non-increasing.
    std::vector<double> t_singular_values;
    /// Singular values above threshold.
    std::size_t t_rank = 0;
    /// T-singular values above threshold.
    std::size_t tubal_rank = 0;
    double threshold = 0.0;
};

/// eps * max(m, n) * p * sigma_1.
double default_rank_tolerance(const Tensor3& a, double sigma1);

/// Builds the report from km_mapping(a). Without `tol` the default relative
/// threshold is used. Throws ArgumentError on negative tol.
RankReport singular_values(const Tensor3& a, std::optional<double> tol = std::nullopt);

/// Same, from an already computed f-diagonal s = km_mapping(a).
RankReport rank_report_from_mapping(const Tensor3& s, std::optional<double> tol = std::nullopt);

/// Diagonal positions (i, k), 0-based, of the `count` largest |s(i,i,k)|.
/// Ties are broken by ascending (k, i).
std::vector<std::pair<std::size_t, std::size_t>> leading_positions(const Tensor3& s, std::size_t count);

/// A_s = u * S_s * v^T where S_s keeps the `rank` largest singular values of
/// f.s in place. Requires 1 <= rank <= p*min(m,n), else ArgumentError.
Tensor3 truncate_trank(const TSvd& f, std::size_t rank);

/// Best approximation of T-rank one in Frobenius norm: truncate_trank(tsvd(a), 1).
Tensor3 best_trank_one(const Tensor3& a);

/// Keeps the first `r` diagonal tubes of f.s. Requires 0 <= r <= min(m,n).
Tensor3 truncate_tubal(const TSvd& f, std::size_t r);

/// Factors b (m x r x p) and c (r x n x p) with b * c = truncate_tubal(f, r):
/// b = u(:, 0:r, :) * s(0:r, 0:r, :), c = v(:, 0:r, :)^T.
std::pair<Tensor3, Tensor3> tubal_factorization(const TSvd& f, std::size_t r);

/// sigma_1(a) + 1e-10 * (1 + sigma_1(a)) >= max |a_ijk|.
bool sigma1_upper_bound_check(const Tensor3& a);

/// ||km_mapping(a) - km_mapping(b)||_F <= tol * (1 + ||km_mapping(a)||_F).
bool km_equal(const Tensor3& a, const Tensor3& b, double tol);

} // namespace tsvdkit
