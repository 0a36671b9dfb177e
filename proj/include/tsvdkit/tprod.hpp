#pragma once

#include <cstddef>
#include <cstdint>

#include "tsvdkit/tensor3.hpp"

namespace tsvdkit {

/// T-product of an m x s x p and an s x n x p tensor.
///
/// Computed slice-wise in the Fourier domain: both operands are transformed
/// along mode 3, matching slices are multiplied, and the product is
/// transformed back. Only p/2 + 1 slice products are formed; the others are
/// their conjugates.
Tensor3 tprod(const Tensor3& a, const Tensor3& b);

/// fold(bcirc(a) * unfold(b)) with the block-circulant matrix materialized.
/// Reference path for differential testing; O(m s n p^2).
Tensor3 tprod_direct(const Tensor3& a, const Tensor3& b);

/// True iff both q^T * q and q * q^T are within `tol` (Frobenius) of the
/// identity tensor. Throws DimensionError for non-square slices.
bool is_orthogonal(const Tensor3& q, double tol);

/// Random real orthogonal n x n x p tensor, deterministic in `seed`.
///
/// Slices 0..p/2 of the spectrum are drawn as Gaussian matrices (real for
/// the self-conjugate slices, complex otherwise) and orthonormalized; the
/// remaining slices are their conjugates, so the inverse transform is real.
Tensor3 random_orthogonal(std::size_t n, std::size_t p, std::uint64_t seed);

/// A slice counts as singular when its smallest singular value is at most
/// this fraction of the largest singular value over all slices.
inline constexpr double kSingularSliceRatio = 1e-12;

/// T-inverse of an n x n x p tensor. Throws NumericalError naming the first
/// (1-based) transformed slice that is singular and its smallest singular
/// value.
Tensor3 tinverse(const Tensor3& a);

} // namespace tsvdkit
