#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "tsvdkit/tensor3.hpp"

namespace tsvdkit {

using complex = std::complex<double>;

/// Dense complex matrix, row-major.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<complex> entries);
    explicit ComplexMatrix(const RealMatrix& real);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    complex operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    complex& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    std::span<const complex> data() const noexcept { return data_; }
    std::span<complex> data() noexcept { return data_; }

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::size_t rows, std::size_t cols, std::span<const double> diag);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<complex> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix conj(const ComplexMatrix& a);
double frobenius_norm(const ComplexMatrix& a);

/// Slices of a tensor after the unnormalized DFT along mode 3:
///
///     slice[k](i, j) = sum_l w^(k*l) a(i, j, l),   w = exp(-2*pi*i/p)
///
/// For a real tensor slice p-k is the conjugate of slice k, and slice 0 (and
/// slice p/2 for even p) is real.
struct SpectralForm {
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t p = 0;
    std::vector<ComplexMatrix> slices;
};

/// Index of the slice whose transform is the conjugate of slice k.
constexpr std::size_t mirror_slice(std::size_t k, std::size_t p) noexcept { return (p - k) % p; }

/// Number of slices that determine a conjugate-symmetric spectrum: p/2 + 1.
constexpr std::size_t independent_slices(std::size_t p) noexcept { return p / 2 + 1; }

/// Forward transform. Slices 0..p/2 are computed, the rest mirrored, so the
/// result is exactly conjugate symmetric.
SpectralForm dft_mode3(const Tensor3& a);

/// Inverse transform with the 1/p factor. Throws StructureError when some
/// entry has imaginary part above 1e-8 * (1 + max modulus of the spectrum).
Tensor3 idft_mode3(const SpectralForm& s);

inline constexpr double kImaginaryResidueTolerance = 1e-8;

/// Builds a spectrum of shape rows x cols x p by computing `slice(k)` for
/// k = 0..p/2 and mirroring the rest. Self-conjugate slices get their
/// imaginary parts zeroed. Slices are computed in parallel when large.
SpectralForm symmetric_spectrum(std::size_t rows, std::size_t cols, std::size_t p,
                                const std::function<ComplexMatrix(std::size_t)>& slice);

/// Full SVD of one complex matrix: d = u * diag(sigma) * v^H.
struct SliceSvd {
    ComplexMatrix u;            // rows x rows, unitary
    std::vector<double> sigma;  // min(rows, cols), non-increasing, >= 0
    ComplexMatrix v;            // cols x cols, unitary
};

struct JacobiOptions {
    double tolerance = 1e-14;
    int max_sweeps = 60;
};

/// One-sided (Hestenes) Jacobi SVD with complex plane rotations.
///
/// Columns are rotated pairwise until every pair satisfies
/// |w_i^H w_j| <= tolerance * |w_i| |w_j|. The sweep count is capped; on
/// failure a NumericalError carries the remaining off-diagonal norm.
/// Singular values are stably sorted non-increasing. The first entry of each
/// left singular vector with non-negligible magnitude is made real and
/// non-negative, and the matching right vector is rotated by the same phase.
/// Real input yields real factors exactly.
SliceSvd complex_svd(const ComplexMatrix& d, const JacobiOptions& options = {});

} // namespace tsvdkit
