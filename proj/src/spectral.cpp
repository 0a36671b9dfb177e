#include "tsvdkit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

#include "detail.hpp"
#include "tsvdkit/error.hpp"

namespace tsvdkit {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (data_.size() != rows * cols)
        throw DimensionError("complex matrix " + std::to_string(rows) + "x" + std::to_string(cols) +
                             " given " + std::to_string(data_.size()) + " entries");
}

ComplexMatrix::ComplexMatrix(const RealMatrix& real)
    : rows_(real.rows()), cols_(real.cols()), data_(real.data().begin(), real.data().end())
{
}

ComplexMatrix ComplexMatrix::identity(std::size_t n)
{
    ComplexMatrix id(n, n);
    for (std::size_t i = 0; i < n; ++i)
        id(i, i) = 1.0;
    return id;
}

ComplexMatrix ComplexMatrix::diagonal(std::size_t rows, std::size_t cols, std::span<const double> diag)
{
    ComplexMatrix d(rows, cols);
    for (std::size_t i = 0; i < std::min({rows, cols, diag.size()}); ++i)
        d(i, i) = diag[i];
    return d;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b)
{
    if (a.cols() != b.rows())
        throw DimensionError("complex matrix product: inner dimensions " + std::to_string(a.cols()) +
                             " and " + std::to_string(b.rows()) + " differ");
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const complex ail = a(i, l);
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += ail * b(l, j);
        }
    return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("complex matrix difference: shapes differ");
    ComplexMatrix c = a;
    for (std::size_t i = 0; i < c.data().size(); ++i)
        c.data()[i] -= b.data()[i];
    return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a)
{
    ComplexMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            t(j, i) = std::conj(a(i, j));
    return t;
}

ComplexMatrix conj(const ComplexMatrix& a)
{
    ComplexMatrix c = a;
    for (auto& z : c.data())
        z = std::conj(z);
    return c;
}

double frobenius_norm(const ComplexMatrix& a)
{
    double sum = 0.0;
    for (const auto& z : a.data())
        sum += std::norm(z);
    return std::sqrt(sum);
}

namespace {

// w^q for w = exp(-2*pi*i/p), with the quarter-turn points exact.
std::vector<complex> twiddles(std::size_t p)
{
    std::vector<complex> w(p);
    for (std::size_t q = 0; q < p; ++q) {
        if (q == 0)
            w[q] = {1.0, 0.0};
        else if (2 * q == p)
            w[q] = {-1.0, 0.0};
        else if (4 * q == p)
            w[q] = {0.0, -1.0};
        else if (4 * q == 3 * p)
            w[q] = {0.0, 1.0};
        else {
            const double angle = -2.0 * std::numbers::pi * static_cast<double>(q) / static_cast<double>(p);
            w[q] = {std::cos(angle), std::sin(angle)};
        }
    }
    return w;
}

} // namespace

SpectralForm symmetric_spectrum(std::size_t rows, std::size_t cols, std::size_t p,
                                const std::function<ComplexMatrix(std::size_t)>& slice)
{
    SpectralForm out{rows, cols, p, std::vector<ComplexMatrix>(p)};
    const std::size_t half = independent_slices(p);
    const double cost = static_cast<double>(rows * cols) * static_cast<double>(std::max(rows, cols));
    detail::parallel_for(std::min(half, p), cost, [&](std::size_t k) {
        ComplexMatrix s = slice(k);
        if (mirror_slice(k, p) == k)
            for (auto& z : s.data())
                z.imag(0.0);
        out.slices[k] = std::move(s);
    });
    for (std::size_t k = half; k < p; ++k)
        out.slices[k] = conj(out.slices[mirror_slice(k, p)]);
    return out;
}

SpectralForm dft_mode3(const Tensor3& a)
{
    const std::size_t m = a.m(), n = a.n(), p = a.p();
    const auto w = twiddles(p);
    return symmetric_spectrum(m, n, p, [&](std::size_t k) {
        ComplexMatrix s(m, n);
        for (std::size_t l = 0; l < p; ++l) {
            const complex f = w[(k * l) % p];
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    s(i, j) += f * a(i, j, l);
        }
        return s;
    });
}

Tensor3 idft_mode3(const SpectralForm& s)
{
    const std::size_t m = s.m, n = s.n, p = s.p;
    if (p == 0 || s.slices.size() != p)
        throw DimensionError("spectral form has " + std::to_string(s.slices.size()) +
                             " slices, expected " + std::to_string(p));
    double max_modulus = 0.0;
    for (const auto& slice : s.slices) {
        if (slice.rows() != m || slice.cols() != n)
            throw DimensionError("spectral slices must all be " + std::to_string(m) + "x" +
                                 std::to_string(n));
        for (const auto& z : slice.data())
            max_modulus = std::max(max_modulus, std::abs(z));
    }

    const auto w = twiddles(p);
    const double scale = 1.0 / static_cast<double>(p);
    const double limit = kImaginaryResidueTolerance * (1.0 + max_modulus);
    std::vector<double> out(m * n * p);
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                complex acc{};
                for (std::size_t l = 0; l < p; ++l)
                    acc += std::conj(w[(k * l) % p]) * s.slices[l](i, j);
                acc *= scale;
                if (!(std::abs(acc.imag()) <= limit))
                    throw StructureError("inverse transform: entry (" + std::to_string(i + 1) + "," +
                                         std::to_string(j + 1) + "," + std::to_string(k + 1) +
                                         ") has imaginary part " + detail::real_str(acc.imag()) +
                                         "; spectrum is not conjugate symmetric");
                out[(k * m + i) * n + j] = acc.real();
            }
    return Tensor3(m, n, p, std::move(out));
}

namespace {

// Column-major working copy for the Jacobi sweeps.
struct Columns {
    std::size_t rows, cols;
    std::vector<complex> data;

    complex* col(std::size_t j) { return data.data() + j * rows; }
    const complex* col(std::size_t j) const { return data.data() + j * rows; }
};

double squared_norm(const complex* x, std::size_t len)
{
    double s = 0.0;
    for (std::size_t r = 0; r < len; ++r)
        s += std::norm(x[r]);
    return s;
}

complex inner(const complex* x, const complex* y, std::size_t len)
{
    complex s{};
    for (std::size_t r = 0; r < len; ++r)
        s += std::conj(x[r]) * y[r];
    return s;
}

// Applies [x y] <- [x y] * [[c, s e], [-s conj(e), c]].
void rotate(complex* x, complex* y, std::size_t len, double c, double s, complex e)
{
    const complex se = s * e;
    const complex sce = s * std::conj(e);
    for (std::size_t r = 0; r < len; ++r) {
        const complex xr = x[r];
        const complex yr = y[r];
        x[r] = c * xr - sce * yr;
        y[r] = se * xr + c * yr;
    }
}

double off_norm(const Columns& w)
{
    double off = 0.0;
    for (std::size_t i = 0; i < w.cols; ++i)
        for (std::size_t j = i + 1; j < w.cols; ++j)
            off += std::norm(inner(w.col(i), w.col(j), w.rows));
    return std::sqrt(off);
}

// Extends the orthonormal columns in `basis` to a full basis of C^dim using
// the standard basis vector with the largest residual at each step.
void complete_basis(std::vector<std::vector<complex>>& basis, std::size_t dim)
{
    while (basis.size() < dim) {
        std::vector<complex> best;
        double best_norm = -1.0;
        for (std::size_t e = 0; e < dim; ++e) {
            std::vector<complex> x(dim);
            x[e] = 1.0;
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& b : basis) {
                    const complex proj = inner(b.data(), x.data(), dim);
                    for (std::size_t r = 0; r < dim; ++r)
                        x[r] -= proj * b[r];
                }
            const double nrm = std::sqrt(squared_norm(x.data(), dim));
            if (nrm > best_norm) {
                best_norm = nrm;
                best = std::move(x);
            }
        }
        for (auto& z : best)
            z /= best_norm;
        basis.push_back(std::move(best));
    }
}

// Requires rows >= cols.
SliceSvd jacobi_tall(const ComplexMatrix& a, const JacobiOptions& opt)
{
    const std::size_t m = a.rows(), n = a.cols();
    Columns w{m, n, std::vector<complex>(m * n)};
    Columns v{n, n, std::vector<complex>(n * n)};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            w.col(j)[i] = a(i, j);
    for (std::size_t j = 0; j < n; ++j)
        v.col(j)[j] = 1.0;

    const double initial = frobenius_norm(a);
    bool converged = initial == 0.0;
    for (int sweep = 0; sweep < opt.max_sweeps && !converged; ++sweep) {
        bool rotated = false;
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const double alpha = squared_norm(w.col(i), m);
                const double beta = squared_norm(w.col(j), m);
                const complex gamma = inner(w.col(i), w.col(j), m);
                const double g = std::abs(gamma);
                if (g <= std::numeric_limits<double>::min() ||
                    g <= opt.tolerance * std::sqrt(alpha) * std::sqrt(beta))
                    continue;
                rotated = true;
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::hypot(1.0, zeta));
                const double c = 1.0 / std::hypot(1.0, t);
                const double s = c * t;
                const complex e = gamma / g;
                rotate(w.col(i), w.col(j), m, c, s, e);
                rotate(v.col(i), v.col(j), n, c, s, e);
            }
        converged = !rotated;
    }
    if (!converged)
        throw NumericalError("Jacobi SVD did not converge in " + std::to_string(opt.max_sweeps) +
                             " sweeps; off-diagonal norm " + detail::real_str(off_norm(w)) +
                             " against initial norm " + detail::real_str(initial));

    std::vector<double> norms(n);
    for (std::size_t j = 0; j < n; ++j)
        norms[j] = std::sqrt(squared_norm(w.col(j), m));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

    SliceSvd out;
    out.sigma.resize(n);
    out.v = ComplexMatrix(n, n);
    std::vector<std::vector<complex>> left;
    const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t j = order[r];
        out.sigma[r] = norms[j];
        for (std::size_t i = 0; i < n; ++i)
            out.v(i, r) = v.col(j)[i];
        if (norms[j] > tiny) {
            std::vector<complex> u(w.col(j), w.col(j) + m);
            for (auto& z : u)
                z /= norms[j];
            left.push_back(std::move(u));
        }
    }
    complete_basis(left, m);
    out.u = ComplexMatrix(m, m);
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t i = 0; i < m; ++i)
            out.u(i, c) = left[c][i];
    return out;
}

void normalize_phases(SliceSvd& svd)
{
    const std::size_t m = svd.u.rows();
    const std::size_t k = svd.sigma.size();
    for (std::size_t c = 0; c < m; ++c) {
        double col_max = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            col_max = std::max(col_max, std::abs(svd.u(i, c)));
        std::size_t pivot = 0;
        while (std::abs(svd.u(pivot, c)) <= 1e-12 * col_max)
            ++pivot;
        const complex z = svd.u(pivot, c);
        const complex phase = std::conj(z) / std::abs(z);
        for (std::size_t i = 0; i < m; ++i)
            svd.u(i, c) *= phase;
        svd.u(pivot, c) = std::abs(svd.u(pivot, c));
        if (c < k)
            for (std::size_t i = 0; i < svd.v.rows(); ++i)
                svd.v(i, c) *= phase;
    }
}

} // namespace

SliceSvd complex_svd(const ComplexMatrix& d, const JacobiOptions& options)
{
    for (const auto& z : d.data())
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw FormatError("complex_svd: input has non-finite entries");

    SliceSvd out;
    if (d.rows() >= d.cols()) {
        out = jacobi_tall(d, options);
    } else {
        // d^H = U' S V'^H  =>  d = V' S U'^H
        SliceSvd h = jacobi_tall(adjoint(d), options);
        out.u = std::move(h.v);
        out.v = std::move(h.u);
        out.sigma = std::move(h.sigma);
    }
    normalize_phases(out);
    return out;
}

} // namespace tsvdkit
