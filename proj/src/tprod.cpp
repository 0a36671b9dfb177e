#include "tsvdkit/tprod.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "detail.hpp"
#include "tsvdkit/error.hpp"
#include "tsvdkit/spectral.hpp"

namespace tsvdkit {

namespace {

std::string shape(const Tensor3& t)
{
    return std::to_string(t.m()) + "x" + std::to_string(t.n()) + "x" + std::to_string(t.p());
}

void require_conforming(const Tensor3& a, const Tensor3& b)
{
    if (a.n() != b.m())
        throw DimensionError("T-product: lateral dimension of left operand (" + shape(a) +
                             ") does not match horizontal dimension of right operand (" + shape(b) + ")");
    if (a.p() != b.p())
        throw DimensionError("T-product: tube lengths differ (" + shape(a) + " vs " + shape(b) + ")");
}

} // namespace

Tensor3 tprod(const Tensor3& a, const Tensor3& b)
{
    require_conforming(a, b);
    const SpectralForm fa = dft_mode3(a);
    const SpectralForm fb = dft_mode3(b);
    return idft_mode3(symmetric_spectrum(a.m(), b.n(), a.p(), [&](std::size_t k) {
        return fa.slices[k] * fb.slices[k];
    }));
}

Tensor3 tprod_direct(const Tensor3& a, const Tensor3& b)
{
    require_conforming(a, b);
    return fold(bcirc(a).matrix() * unfold(b), a.p());
}

bool is_orthogonal(const Tensor3& q, double tol)
{
    if (q.m() != q.n())
        throw DimensionError("is_orthogonal: frontal slices are " + std::to_string(q.m()) + "x" +
                             std::to_string(q.n()) + ", not square");
    const Tensor3 id = identity_tensor(q.n(), q.p());
    const Tensor3 qt = transpose(q);
    return frobenius_norm(tprod(qt, q) - id) <= tol && frobenius_norm(tprod(q, qt) - id) <= tol;
}

namespace {

// Modified Gram-Schmidt with one reorthogonalization pass, on columns.
ComplexMatrix orthonormalize_columns(ComplexMatrix x)
{
    const std::size_t n = x.rows();
    for (std::size_t c = 0; c < x.cols(); ++c) {
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t prev = 0; prev < c; ++prev) {
                complex proj{};
                for (std::size_t r = 0; r < n; ++r)
                    proj += std::conj(x(r, prev)) * x(r, c);
                for (std::size_t r = 0; r < n; ++r)
                    x(r, c) -= proj * x(r, prev);
            }
        double nrm = 0.0;
        for (std::size_t r = 0; r < n; ++r)
            nrm += std::norm(x(r, c));
        nrm = std::sqrt(nrm);
        if (nrm == 0.0)
            throw NumericalError("random_orthogonal: degenerate Gaussian draw");
        for (std::size_t r = 0; r < n; ++r)
            x(r, c) /= nrm;
    }
    return x;
}

} // namespace

Tensor3 random_orthogonal(std::size_t n, std::size_t p, std::uint64_t seed)
{
    if (n == 0 || p == 0)
        throw DimensionError("random_orthogonal: n and p must be positive");
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> normal;

    // Draws happen sequentially so the tensor depends only on the seed.
    std::vector<ComplexMatrix> draws;
    for (std::size_t k = 0; k < independent_slices(p); ++k) {
        const bool real = mirror_slice(k, p) == k;
        ComplexMatrix g(n, n);
        for (auto& z : g.data())
            z = real ? complex(normal(gen), 0.0) : complex(normal(gen), normal(gen));
        draws.push_back(std::move(g));
    }
    return idft_mode3(symmetric_spectrum(n, n, p, [&](std::size_t k) {
        return orthonormalize_columns(draws[k]);
    }));
}

Tensor3 tinverse(const Tensor3& a)
{
    if (a.m() != a.n())
        throw DimensionError("tinverse: frontal slices are " + std::to_string(a.m()) + "x" +
                             std::to_string(a.n()) + ", not square");
    const std::size_t n = a.n(), p = a.p();
    const SpectralForm fa = dft_mode3(a);
    const std::size_t half = independent_slices(p);

    std::vector<SliceSvd> svds(half);
    detail::parallel_for(half, static_cast<double>(n * n * n) * 10.0,
                         [&](std::size_t k) { svds[k] = complex_svd(fa.slices[k]); });

    double largest = 0.0;
    for (const auto& s : svds)
        largest = std::max(largest, s.sigma.front());
    for (std::size_t k = 0; k < half; ++k) {
        const double smallest = svds[k].sigma.back();
        if (smallest <= kSingularSliceRatio * largest)
            throw NumericalError("tinverse: transformed slice " + std::to_string(k + 1) +
                                 " is singular (smallest singular value " +
                                 detail::real_str(smallest) + ")");
    }

    return idft_mode3(symmetric_spectrum(n, n, p, [&](std::size_t k) {
        // inv(U S V^H) = V S^-1 U^H
        std::vector<double> inv(svds[k].sigma.size());
        std::transform(svds[k].sigma.begin(), svds[k].sigma.end(), inv.begin(),
                       [](double s) { return 1.0 / s; });
        return svds[k].v * ComplexMatrix::diagonal(n, n, inv) * adjoint(svds[k].u);
    }));
}

} // namespace tsvdkit
