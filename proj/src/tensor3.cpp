#include "tsvdkit/tensor3.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "detail.hpp"
#include "tsvdkit/error.hpp"

namespace tsvdkit {

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0)
{
}

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (data_.size() != rows * cols)
        throw DimensionError("matrix " + std::to_string(rows) + "x" + std::to_string(cols) +
                             " given " + std::to_string(data_.size()) + " entries");
}

RealMatrix RealMatrix::identity(std::size_t n)
{
    RealMatrix id(n, n);
    for (std::size_t i = 0; i < n; ++i)
        id(i, i) = 1.0;
    return id;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b)
{
    if (a.cols() != b.rows())
        throw DimensionError("matrix product: inner dimensions " + std::to_string(a.cols()) +
                             " and " + std::to_string(b.rows()) + " differ");
    RealMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const double ail = a(i, l);
            if (ail == 0.0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += ail * b(l, j);
        }
    return c;
}

RealMatrix transpose(const RealMatrix& a)
{
    RealMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            t(j, i) = a(i, j);
    return t;
}

Tensor3::Tensor3(std::size_t m, std::size_t n, std::size_t p)
    : Tensor3(m, n, p, std::vector<double>(m * n * p, 0.0))
{
}

Tensor3::Tensor3(std::size_t m, std::size_t n, std::size_t p, std::vector<double> entries)
    : m_(m), n_(n), p_(p), data_(std::move(entries))
{
    if (m == 0 || n == 0 || p == 0)
        throw DimensionError("tensor extents must be positive, got " + std::to_string(m) + "x" +
                             std::to_string(n) + "x" + std::to_string(p));
    if (data_.size() != m * n * p)
        throw DimensionError("tensor " + std::to_string(m) + "x" + std::to_string(n) + "x" +
                             std::to_string(p) + " needs " + std::to_string(m * n * p) +
                             " entries, got " + std::to_string(data_.size()));
    const auto bad = std::find_if(data_.begin(), data_.end(),
                                  [](double x) { return !std::isfinite(x); });
    if (bad != data_.end())
        throw FormatError("tensor entry " + std::to_string(bad - data_.begin()) +
                          " is not finite");
}

RealMatrix Tensor3::slice(std::size_t k) const
{
    const auto first = data_.begin() + static_cast<std::ptrdiff_t>(k * m_ * n_);
    return RealMatrix(m_, n_, std::vector<double>(first, first + static_cast<std::ptrdiff_t>(m_ * n_)));
}

namespace {

void require_same_shape(const Tensor3& a, const Tensor3& b, const char* what)
{
    if (a.m() != b.m() || a.n() != b.n() || a.p() != b.p())
        throw DimensionError(std::string(what) + ": shapes " + std::to_string(a.m()) + "x" +
                             std::to_string(a.n()) + "x" + std::to_string(a.p()) + " and " +
                             std::to_string(b.m()) + "x" + std::to_string(b.n()) + "x" +
                             std::to_string(b.p()) + " differ");
}

template <typename Op>
Tensor3 zip(const Tensor3& a, const Tensor3& b, Op op)
{
    std::vector<double> out(a.size());
    std::transform(a.data().begin(), a.data().end(), b.data().begin(), out.begin(), op);
    return Tensor3(a.m(), a.n(), a.p(), std::move(out));
}

} // namespace

Tensor3 operator+(const Tensor3& a, const Tensor3& b)
{
    require_same_shape(a, b, "tensor sum");
    return zip(a, b, std::plus<>{});
}

Tensor3 operator-(const Tensor3& a, const Tensor3& b)
{
    require_same_shape(a, b, "tensor difference");
    return zip(a, b, std::minus<>{});
}

Tensor3 operator*(double s, const Tensor3& a)
{
    std::vector<double> out(a.data().begin(), a.data().end());
    for (auto& x : out)
        x *= s;
    return Tensor3(a.m(), a.n(), a.p(), std::move(out));
}

double frobenius_norm(const Tensor3& a)
{
    // Scaled accumulation, as in LAPACK's dnrm2, so large entries do not overflow.
    double scale = 0.0;
    double ssq = 1.0;
    for (double x : a.data()) {
        if (x == 0.0)
            continue;
        const double ax = std::abs(x);
        if (scale < ax) {
            ssq = 1.0 + ssq * (scale / ax) * (scale / ax);
            scale = ax;
        } else {
            ssq += (ax / scale) * (ax / scale);
        }
    }
    return scale * std::sqrt(ssq);
}

double max_abs_entry(const Tensor3& a)
{
    double best = 0.0;
    for (double x : a.data())
        best = std::max(best, std::abs(x));
    return best;
}

bool is_f_diagonal(const Tensor3& a, double tol)
{
    for (std::size_t k = 0; k < a.p(); ++k)
        for (std::size_t i = 0; i < a.m(); ++i)
            for (std::size_t j = 0; j < a.n(); ++j)
                if (i != j && std::abs(a(i, j, k)) > tol)
                    return false;
    return true;
}

Tensor3 identity_tensor(std::size_t n, std::size_t p)
{
    std::vector<double> out(n * n * p, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        out[i * n + i] = 1.0;
    return Tensor3(n, n, p, std::move(out));
}

Tensor3 transpose(const Tensor3& a)
{
    const std::size_t m = a.m(), n = a.n(), p = a.p();
    std::vector<double> out(m * n * p);
    for (std::size_t k = 0; k < p; ++k) {
        // slice 0 stays in place, slices 1..p-1 are reversed
        const std::size_t src = (p - k) % p;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out[(k * n + j) * m + i] = a(i, j, src);
    }
    return Tensor3(n, m, p, std::move(out));
}

RealMatrix unfold(const Tensor3& a)
{
    return RealMatrix(a.m() * a.p(), a.n(), std::vector<double>(a.data().begin(), a.data().end()));
}

Tensor3 fold(const RealMatrix& stacked, std::size_t p)
{
    if (p == 0 || stacked.rows() % p != 0)
        throw DimensionError("fold: " + std::to_string(stacked.rows()) +
                             " rows not divisible into " + std::to_string(p) + " slices");
    return Tensor3(stacked.rows() / p, stacked.cols(), p,
                   std::vector<double>(stacked.data().begin(), stacked.data().end()));
}

BlockCirculantMatrix::BlockCirculantMatrix(const Tensor3& a)
    : m_(a.m()), n_(a.n()), p_(a.p()), matrix_(a.m() * a.p(), a.n() * a.p())
{
    for (std::size_t br = 0; br < p_; ++br)
        for (std::size_t bc = 0; bc < p_; ++bc) {
            const std::size_t k = (br + p_ - bc) % p_;
            for (std::size_t i = 0; i < m_; ++i)
                for (std::size_t j = 0; j < n_; ++j)
                    matrix_(br * m_ + i, bc * n_ + j) = a(i, j, k);
        }
}

BlockCirculantMatrix bcirc(const Tensor3& a)
{
    return BlockCirculantMatrix(a);
}

Tensor3 bcirc_inverse(const RealMatrix& b, std::size_t m, std::size_t n, std::size_t p, double tol)
{
    if (m == 0 || n == 0 || p == 0 || b.rows() != m * p || b.cols() != n * p)
        throw DimensionError("bcirc_inverse: matrix " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()) + " is not (" + std::to_string(m) + "*" +
                             std::to_string(p) + ")x(" + std::to_string(n) + "*" +
                             std::to_string(p) + ")");
    std::vector<double> out(m * n * p);
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out[(k * m + i) * n + j] = b(k * m + i, j);

    for (std::size_t br = 0; br < p; ++br)
        for (std::size_t bc = 1; bc < p; ++bc) {
            const std::size_t k = (br + p - bc) % p;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    const double dev = std::abs(b(br * m + i, bc * n + j) - out[(k * m + i) * n + j]);
                    if (!(dev <= tol))
                        throw StructureError("bcirc_inverse: block (" + std::to_string(br + 1) + "," +
                                             std::to_string(bc + 1) + ") deviates from slice " +
                                             std::to_string(k + 1) + " by " + detail::real_str(dev));
                }
        }
    return Tensor3(m, n, p, std::move(out));
}

Tensor3 random_tensor(std::size_t m, std::size_t n, std::size_t p, std::uint64_t seed)
{
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> out(m * n * p);
    for (auto& x : out)
        x = dist(gen);
    return Tensor3(m, n, p, std::move(out));
}

} // namespace tsvdkit
