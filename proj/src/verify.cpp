#include "tsvdkit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "detail.hpp"
#include "tsvdkit/kmsvd.hpp"
#include "tsvdkit/tprod.hpp"

namespace tsvdkit {

namespace {

PropertyResult bounded(std::string name, double worst, double bound)
{
    return {std::move(name), worst <= bound,
            "worst " + detail::real_str(worst) + " bound " + detail::real_str(bound)};
}

} // namespace

std::vector<PropertyResult> run_invariant_suite(const Tensor3& a, std::uint64_t seed, int trials)
{
    std::vector<PropertyResult> out;
    const double norm_a = frobenius_norm(a);
    const TSvd f = tsvd(a);
    const RankReport report = rank_report_from_mapping(f.s);
    const double sigma1 = report.singular_values.front();

    const Tensor3 rebuilt = tprod(f.u, tprod(f.s, transpose(f.v)));
    out.push_back(bounded("reconstruction", frobenius_norm(a - rebuilt), 1e-9 * norm_a));

    const bool orth = is_orthogonal(f.u, 1e-9) && is_orthogonal(f.v, 1e-9);
    out.push_back({"orthogonal_factors", orth, orth ? "u, v orthogonal at 1e-9" : "u or v fails at 1e-9"});

    const double s_norm = frobenius_norm(f.s);
    const bool fdiag = is_f_diagonal(f.s, 1e-10 * s_norm);
    out.push_back({"f_diagonal", fdiag, fdiag ? "off-diagonal within 1e-10*|s|" : "off-diagonal entries present"});

    {
        const std::size_t r = std::min(a.m(), a.n());
        double worst_increase = 0.0;
        double previous = 0.0;
        for (std::size_t i = 0; i < r; ++i) {
            double energy = 0.0;
            for (std::size_t k = 0; k < a.p(); ++k)
                energy += f.s(i, i, k) * f.s(i, i, k);
            if (i > 0)
                worst_increase = std::max(worst_increase, energy - previous);
            previous = energy;
        }
        out.push_back(bounded("tube_ordering", worst_increase, 1e-12 * (1.0 + norm_a * norm_a)));
    }

    out.push_back({"sigma1_bound", sigma1_upper_bound_check(a),
                   "sigma1 " + detail::real_str(sigma1) + " max entry " + detail::real_str(max_abs_entry(a))});

    out.push_back(bounded("sigma1_location", std::abs(std::abs(f.s(0, 0, 0)) - sigma1), 1e-12 * (1.0 + sigma1)));

    {
        double energy = 0.0;
        for (double s : report.singular_values)
            energy += s * s;
        const double sq = norm_a * norm_a;
        out.push_back(bounded("energy_identity", std::abs(energy - sq), 1e-9 * sq));
    }

    if (trials > 0) {
        std::mt19937_64 gen(seed);
        double worst_invariance = 0.0;
        double worst_subadditivity = -std::numeric_limits<double>::infinity();
        double slack = 0.0;
        const double s_scale = 1.0 + s_norm;
        for (int t = 0; t < trials; ++t) {
            const Tensor3 y = random_orthogonal(a.m(), a.p(), gen());
            const Tensor3 z = random_orthogonal(a.n(), a.p(), gen());
            const Tensor3 b = tprod(y, tprod(a, transpose(z)));
            worst_invariance = std::max(worst_invariance, frobenius_norm(km_mapping(b) - f.s) / s_scale);

            const Tensor3 partner = std::max(1.0, max_abs_entry(a)) * random_tensor(a.m(), a.n(), a.p(), gen());
            const double s_sum = singular_values(a + partner).singular_values.front();
            const double s_partner = singular_values(partner).singular_values.front();
            worst_subadditivity = std::max(worst_subadditivity, s_sum - sigma1 - s_partner);
            slack = std::max(slack, 1e-9 * (1.0 + sigma1 + s_partner));
        }
        out.push_back(bounded("orthogonal_invariance", worst_invariance, 1e-8));
        out.push_back(bounded("subadditivity", worst_subadditivity, slack));
    }
    return out;
}

} // namespace tsvdkit
