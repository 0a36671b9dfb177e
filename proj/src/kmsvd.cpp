#include "tsvdkit/kmsvd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "detail.hpp"
#include "tsvdkit/error.hpp"
#include "tsvdkit/spectral.hpp"
#include "tsvdkit/tprod.hpp"

namespace tsvdkit {

namespace {

// SVDs of the independent transformed slices 0..p/2.
std::vector<SliceSvd> independent_slice_svds(const Tensor3& a)
{
    const SpectralForm fa = dft_mode3(a);
    const std::size_t half = independent_slices(a.p());
    const std::size_t big = std::max(a.m(), a.n());
    std::vector<SliceSvd> svds(half);
    detail::parallel_for(half, 10.0 * static_cast<double>(big * big * big),
                         [&](std::size_t k) { svds[k] = complex_svd(fa.slices[k]); });
    return svds;
}

Tensor3 mapping_from_svds(const std::vector<SliceSvd>& svds, std::size_t m, std::size_t n, std::size_t p)
{
    return idft_mode3(symmetric_spectrum(m, n, p, [&](std::size_t k) {
        return ComplexMatrix::diagonal(m, n, svds[k].sigma);
    }));
}

// Diagonal entries of s selected by keep_mask[k * min(m,n) + i]; all else zero.
Tensor3 with_diagonal(const Tensor3& s, const std::vector<bool>& keep_mask)
{
    const std::size_t m = s.m(), n = s.n(), p = s.p(), r = std::min(m, n);
    std::vector<double> out(m * n * p, 0.0);
    for (std::size_t k = 0; k < p; ++k)
        for (std::size_t i = 0; i < r; ++i)
            if (keep_mask[k * r + i])
                out[(k * m + i) * n + i] = s(i, i, k);
    return Tensor3(m, n, p, std::move(out));
}

} // namespace

Tensor3 km_mapping(const Tensor3& a)
{
    return mapping_from_svds(independent_slice_svds(a), a.m(), a.n(), a.p());
}

TSvd tsvd(const Tensor3& a)
{
    const std::size_t m = a.m(), n = a.n(), p = a.p();
    const auto svds = independent_slice_svds(a);
    TSvd f{
        idft_mode3(symmetric_spectrum(m, m, p, [&](std::size_t k) { return svds[k].u; })),
        mapping_from_svds(svds, m, n, p),
        idft_mode3(symmetric_spectrum(n, n, p, [&](std::size_t k) { return svds[k].v; })),
    };
    return f;
}

double default_rank_tolerance(const Tensor3& a, double sigma1)
{
    return std::numeric_limits<double>::epsilon() * static_cast<double>(std::max(a.m(), a.n())) *
           static_cast<double>(a.p()) * sigma1;
}

RankReport rank_report_from_mapping(const Tensor3& s, std::optional<double> tol)
{
    if (tol && !(*tol >= 0.0))
        throw ArgumentError("rank tolerance must be non-negative, got " + detail::real_str(*tol));
    const std::size_t r = std::min(s.m(), s.n());
    RankReport report;
    report.singular_values.reserve(r * s.p());
    for (std::size_t k = 0; k < s.p(); ++k)
        for (std::size_t i = 0; i < r; ++i)
            report.singular_values.push_back(std::abs(s(i, i, k)));
    std::sort(report.singular_values.begin(), report.singular_values.end(), std::greater<>{});

    for (std::size_t i = 0; i < r; ++i) {
        double energy = 0.0;
        for (std::size_t k = 0; k < s.p(); ++k)
            energy += s(i, i, k) * s(i, i, k);
        report.t_singular_values.push_back(std::sqrt(energy));
    }
    // Already ordered in exact arithmetic; sorting only settles roundoff among ties.
    std::sort(report.t_singular_values.begin(), report.t_singular_values.end(), std::greater<>{});

    report.threshold = tol ? *tol : default_rank_tolerance(s, report.singular_values.front());
    const auto above = [&](double x) { return x > report.threshold; };
    report.t_rank = static_cast<std::size_t>(
        std::count_if(report.singular_values.begin(), report.singular_values.end(), above));
    report.tubal_rank = static_cast<std::size_t>(
        std::count_if(report.t_singular_values.begin(), report.t_singular_values.end(), above));
    return report;
}

RankReport singular_values(const Tensor3& a, std::optional<double> tol)
{
    return rank_report_from_mapping(km_mapping(a), tol);
}

std::vector<std::pair<std::size_t, std::size_t>> leading_positions(const Tensor3& s, std::size_t count)
{
    const std::size_t r = std::min(s.m(), s.n());
    std::vector<std::pair<std::size_t, std::size_t>> pos;  // (k, i)
    for (std::size_t k = 0; k < s.p(); ++k)
        for (std::size_t i = 0; i < r; ++i)
            pos.emplace_back(k, i);
    std::stable_sort(pos.begin(), pos.end(), [&](const auto& x, const auto& y) {
        return std::abs(s(x.second, x.second, x.first)) > std::abs(s(y.second, y.second, y.first));
    });
    pos.resize(std::min(count, pos.size()));
    for (auto& [k, i] : pos)
        std::swap(k, i);
    return pos;
}

Tensor3 truncate_trank(const TSvd& f, std::size_t rank)
{
    const std::size_t r = std::min(f.s.m(), f.s.n());
    const std::size_t total = r * f.s.p();
    if (rank < 1 || rank > total)
        throw ArgumentError("T-rank truncation " + std::to_string(rank) + " outside [1, " +
                            std::to_string(total) + "]");
    std::vector<bool> keep(total, false);
    for (const auto& [i, k] : leading_positions(f.s, rank))
        keep[k * r + i] = true;
    return tprod(f.u, tprod(with_diagonal(f.s, keep), transpose(f.v)));
}

Tensor3 best_trank_one(const Tensor3& a)
{
    return truncate_trank(tsvd(a), 1);
}

Tensor3 truncate_tubal(const TSvd& f, std::size_t r)
{
    const std::size_t full = std::min(f.s.m(), f.s.n());
    if (r > full)
        throw ArgumentError("tubal truncation " + std::to_string(r) + " exceeds " + std::to_string(full));
    std::vector<bool> keep(full * f.s.p(), false);
    for (std::size_t k = 0; k < f.s.p(); ++k)
        for (std::size_t i = 0; i < r; ++i)
            keep[k * full + i] = true;
    return tprod(f.u, tprod(with_diagonal(f.s, keep), transpose(f.v)));
}

std::pair<Tensor3, Tensor3> tubal_factorization(const TSvd& f, std::size_t r)
{
    const std::size_t m = f.u.m(), n = f.v.m(), p = f.s.p();
    const std::size_t full = std::min(m, n);
    if (r < 1 || r > full)
        throw ArgumentError("tubal factorization rank " + std::to_string(r) + " outside [1, " +
                            std::to_string(full) + "]");
    std::vector<double> ur(m * r * p), sr(r * r * p, 0.0), vr(n * r * p);
    for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < r; ++j)
                ur[(k * m + i) * r + j] = f.u(i, j, k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < r; ++j)
                vr[(k * n + i) * r + j] = f.v(i, j, k);
        for (std::size_t i = 0; i < r; ++i)
            sr[(k * r + i) * r + i] = f.s(i, i, k);
    }
    return {tprod(Tensor3(m, r, p, std::move(ur)), Tensor3(r, r, p, std::move(sr))),
            transpose(Tensor3(n, r, p, std::move(vr)))};
}

bool sigma1_upper_bound_check(const Tensor3& a)
{
    const double sigma1 = singular_values(a).singular_values.front();
    return sigma1 + 1e-10 * (1.0 + sigma1) >= max_abs_entry(a);
}

bool km_equal(const Tensor3& a, const Tensor3& b, double tol)
{
    if (a.m() != b.m() || a.n() != b.n() || a.p() != b.p())
        throw DimensionError("km_equal: tensors have different shapes");
    const Tensor3 sa = km_mapping(a);
    return frobenius_norm(sa - km_mapping(b)) <= tol * (1.0 + frobenius_norm(sa));
}

} // namespace tsvdkit
