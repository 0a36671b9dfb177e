#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace tsvdkit {

/// Dense real matrix, row-major. Used for slices, unfoldings and the
/// block-circulant form.
class RealMatrix {
public:
    RealMatrix() = default;
    RealMatrix(std::size_t rows, std::size_t cols);
    RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    std::span<const double> data() const noexcept { return data_; }

    static RealMatrix identity(std::size_t n);

    friend bool operator==(const RealMatrix&, const RealMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
RealMatrix transpose(const RealMatrix& a);

/// Dense third-order real tensor of shape m x n x p.
///
/// Entries are stored frontal-slice major and row-major within each slice,
/// so entry (i, j, k) lives at k*m*n + i*n + j (all indices 0-based). This is
/// the same ordering the tensor file format uses. Every entry is finite.
class Tensor3 {
public:
    Tensor3() = default;
    /// Zero tensor.
    Tensor3(std::size_t m, std::size_t n, std::size_t p);
    /// Takes ownership of `entries`; throws DimensionError if the length is
    /// not m*n*p or any extent is zero, FormatError on NaN/Inf.
    Tensor3(std::size_t m, std::size_t n, std::size_t p, std::vector<double> entries);

    std::size_t m() const noexcept { return m_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t p() const noexcept { return p_; }
    std::size_t size() const noexcept { return data_.size(); }

    double operator()(std::size_t i, std::size_t j, std::size_t k) const noexcept
    {
        return data_[(k * m_ + i) * n_ + j];
    }
    std::span<const double> data() const noexcept { return data_; }

    /// Frontal slice k as an m x n matrix.
    RealMatrix slice(std::size_t k) const;

    friend bool operator==(const Tensor3&, const Tensor3&) = default;

private:
    std::size_t m_ = 0;
    std::size_t n_ = 0;
    std::size_t p_ = 0;
    std::vector<double> data_;
};

Tensor3 operator+(const Tensor3& a, const Tensor3& b);
Tensor3 operator-(const Tensor3& a, const Tensor3& b);
Tensor3 operator*(double s, const Tensor3& a);

double frobenius_norm(const Tensor3& a);
double max_abs_entry(const Tensor3& a);

/// True when every frontal slice has off-diagonal magnitude <= tol.
bool is_f_diagonal(const Tensor3& a, double tol = 0.0);

/// n x n x p tensor whose first frontal slice is the identity, rest zero.
Tensor3 identity_tensor(std::size_t n, std::size_t p);

/// n x m x p tensor with bcirc(transpose(a)) == bcirc(a)^T.
Tensor3 transpose(const Tensor3& a);

/// Frontal slices stacked vertically: (m*p) x n.
RealMatrix unfold(const Tensor3& a);
/// Inverse of unfold; rows must be divisible by p.
Tensor3 fold(const RealMatrix& stacked, std::size_t p);

/// Block-circulant matrix of a tensor, (m*p) x (n*p). Block (r, c) is the
/// frontal slice (r - c) mod p.
class BlockCirculantMatrix {
public:
    explicit BlockCirculantMatrix(const Tensor3& a);

    std::size_t block_rows() const noexcept { return m_; }
    std::size_t block_cols() const noexcept { return n_; }
    std::size_t blocks() const noexcept { return p_; }
    const RealMatrix& matrix() const noexcept { return matrix_; }

private:
    std::size_t m_, n_, p_;
    RealMatrix matrix_;
};

inline constexpr double kCirculantTolerance = 1e-9;

BlockCirculantMatrix bcirc(const Tensor3& a);

/// Recovers the tensor from the first block column of `b`, after checking
/// every other block against it. Throws StructureError if any entry deviates
/// by more than `tol`, DimensionError if `b` is not (m*p) x (n*p).
Tensor3 bcirc_inverse(const RealMatrix& b, std::size_t m, std::size_t n, std::size_t p,
                      double tol = kCirculantTolerance);

/// Entries uniform in [-1, 1], deterministic in seed.
Tensor3 random_tensor(std::size_t m, std::size_t n, std::size_t p, std::uint64_t seed);

} // namespace tsvdkit
