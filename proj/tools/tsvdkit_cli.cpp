// tsvdkit command-line front end. Talks to the library only through the C API.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tsvdkit/tsvdkit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct TensorDeleter {
    void operator()(tsvdkit_tensor* t) const { tsvdkit_tensor_destroy(t); }
};
struct TsvdDeleter {
    void operator()(tsvdkit_tsvd* f) const { tsvdkit_tsvd_destroy(f); }
};
struct RankDeleter {
    void operator()(tsvdkit_rank_report* r) const { tsvdkit_rank_report_destroy(r); }
};
struct VerifyDeleter {
    void operator()(tsvdkit_verify_report* r) const { tsvdkit_verify_report_destroy(r); }
};
using Tensor = std::unique_ptr<tsvdkit_tensor, TensorDeleter>;
using Tsvd = std::unique_ptr<tsvdkit_tsvd, TsvdDeleter>;
using RankReport = std::unique_ptr<tsvdkit_rank_report, RankDeleter>;
using VerifyReport = std::unique_ptr<tsvdkit_verify_report, VerifyDeleter>;

// Carries the exit code for a failed library call up to main.
struct Failure {
    int exit_code;
};

void check(tsvdkit_status status)
{
    if (status == TSVDKIT_OK)
        return;
    std::fprintf(stderr, "tsvdkit: %s: %s\n", tsvdkit_status_string(status), tsvdkit_last_error());
    switch (status) {
    case TSVDKIT_ERR_ARGUMENT:
    case TSVDKIT_ERR_DIMENSION:
    case TSVDKIT_ERR_FORMAT:
        throw Failure{kExitUsage};
    default:
        throw Failure{kExitNumerical};
    }
}

Tensor load(const std::string& path)
{
    tsvdkit_tensor* t = nullptr;
    check(tsvdkit_tensor_load(path.c_str(), &t));
    return Tensor(t);
}

void save(const tsvdkit_tensor* t, const std::string& path)
{
    check(tsvdkit_tensor_save(t, path.c_str()));
}

double norm(const tsvdkit_tensor* t)
{
    double x = 0.0;
    check(tsvdkit_frobenius_norm(t, &x));
    return x;
}

double distance(const tsvdkit_tensor* a, const tsvdkit_tensor* b)
{
    tsvdkit_tensor* d = nullptr;
    check(tsvdkit_subtract(a, b, &d));
    return norm(Tensor(d).get());
}

void print_real(const char* key, double value)
{
    std::printf("%s = %.17g\n", key, value);
}

void print_list(const char* key, const double* values, size_t count)
{
    std::printf("%s =", key);
    for (size_t i = 0; i < count; ++i)
        std::printf("%s %.17g", i == 0 ? "" : ",", values[i]);
    std::printf("\n");
}

double relative(double residual, double reference)
{
    return reference > 0.0 ? residual / reference : residual;
}

int run_tsvd(const std::string& input, std::string prefix)
{
    const Tensor a = load(input);
    if (prefix.empty())
        prefix = std::filesystem::path(input).replace_extension().string();

    tsvdkit_tsvd* raw = nullptr;
    check(tsvdkit_tsvd_compute(a.get(), &raw));
    const Tsvd f(raw);
    save(tsvdkit_tsvd_u(f.get()), prefix + ".u");
    save(tsvdkit_tsvd_s(f.get()), prefix + ".s");
    save(tsvdkit_tsvd_v(f.get()), prefix + ".v");

    tsvdkit_tensor* rebuilt = nullptr;
    check(tsvdkit_tsvd_reconstruct(f.get(), &rebuilt));
    const double residual = distance(a.get(), Tensor(rebuilt).get());

    std::printf("u = %s.u\ns = %s.s\nv = %s.v\n", prefix.c_str(), prefix.c_str(), prefix.c_str());
    print_real("residual", residual);
    print_real("relative_residual", relative(residual, norm(a.get())));
    return kExitOk;
}

RankReport rank_report(const tsvdkit_tensor* a, double tol)
{
    tsvdkit_rank_report* r = nullptr;
    check(tsvdkit_rank_report_compute(a, tol, &r));
    return RankReport(r);
}

int run_rank(const std::string& input, double tol)
{
    const Tensor a = load(input);
    const RankReport r = rank_report(a.get(), tol);
    size_t count = 0;
    const double* sigma = tsvdkit_rank_report_singular_values(r.get(), &count);
    print_list("sigma", sigma, count);
    const double* lambda = tsvdkit_rank_report_t_singular_values(r.get(), &count);
    print_list("lambda", lambda, count);
    std::printf("t_rank = %zu\n", tsvdkit_rank_report_t_rank(r.get()));
    std::printf("tubal_rank = %zu\n", tsvdkit_rank_report_tubal_rank(r.get()));
    print_real("tol", tsvdkit_rank_report_threshold(r.get()));
    return kExitOk;
}

int run_approx(const std::string& input, long long rank, const std::string& output)
{
    const Tensor a = load(input);
    size_t m = 0, n = 0, p = 0;
    check(tsvdkit_tensor_dims(a.get(), &m, &n, &p));
    const size_t total = p * std::min(m, n);
    if (rank < 1 || static_cast<unsigned long long>(rank) > total) {
        std::fprintf(stderr, "tsvdkit: --rank %lld outside [1, %zu]\n", rank, total);
        return kExitUsage;
    }

    tsvdkit_tsvd* raw = nullptr;
    check(tsvdkit_tsvd_compute(a.get(), &raw));
    const Tsvd f(raw);
    tsvdkit_tensor* approx_raw = nullptr;
    check(tsvdkit_truncate_trank(f.get(), static_cast<size_t>(rank), &approx_raw));
    const Tensor approx(approx_raw);
    if (!output.empty())
        save(approx.get(), output);

    const RankReport r = rank_report(a.get(), -1.0);
    size_t count = 0;
    const double* sigma = tsvdkit_rank_report_singular_values(r.get(), &count);
    double tail = 0.0;
    for (size_t i = static_cast<size_t>(rank); i < count; ++i)
        tail += sigma[i] * sigma[i];

    const double residual = distance(a.get(), approx.get());
    if (!output.empty())
        std::printf("output = %s\n", output.c_str());
    std::printf("rank = %lld\nmode = trank\n", rank);
    print_real("residual", residual);
    print_real("predicted_residual", std::sqrt(tail));
    print_real("relative_residual", relative(residual, norm(a.get())));
    return kExitOk;
}

int run_verify(const std::string& input, std::uint64_t seed, int trials)
{
    const Tensor a = load(input);
    tsvdkit_verify_report* raw = nullptr;
    check(tsvdkit_verify(a.get(), seed, trials, &raw));
    const VerifyReport report(raw);
    bool all = true;
    for (size_t i = 0; i < tsvdkit_verify_report_count(report.get()); ++i) {
        const char* name = nullptr;
        const char* detail = nullptr;
        int passed = 0;
        check(tsvdkit_verify_report_item(report.get(), i, &name, &passed, &detail));
        std::printf("%s = %s (%s)\n", name, passed ? "pass" : "fail", detail);
        all = all && passed;
    }
    std::printf("seed = %llu\ntrials = %d\nresult = %s\n", static_cast<unsigned long long>(seed), trials,
                all ? "pass" : "fail");
    return all ? kExitOk : kExitPropertyFailed;
}

int run_tprod(const std::string& left, const std::string& right, const std::string& output)
{
    const Tensor a = load(left);
    const Tensor b = load(right);
    tsvdkit_tensor* c = nullptr;
    check(tsvdkit_tprod(a.get(), b.get(), &c));
    const Tensor product(c);
    size_t m = 0, n = 0, p = 0;
    check(tsvdkit_tensor_dims(product.get(), &m, &n, &p));
    if (output.empty()) {
        std::printf("dims = %zu, %zu, %zu\n", m, n, p);
        print_list("data", tsvdkit_tensor_data(product.get()), m * n * p);
    } else {
        save(product.get(), output);
        std::printf("output = %s\ndims = %zu, %zu, %zu\n", output.c_str(), m, n, p);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"T-product tensor SVD toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(tsvdkit_version()));

    std::string input, second, out;
    double tol = -1.0;
    long long rank = 0;
    std::string mode = "trank";
    std::uint64_t seed = 1;
    int trials = 20;

    auto* tsvd = app.add_subcommand("tsvd", "factor a tensor as U * S * V^T; writes <prefix>.u/.s/.v");
    tsvd->add_option("input", input, "tensor file")->required();
    tsvd->add_option("prefix", out, "output prefix (default: input path without extension)");
    tsvd->add_option("--out", out, "output prefix");

    auto* rank_cmd = app.add_subcommand("rank", "singular values, T-singular values and ranks");
    rank_cmd->add_option("input", input, "tensor file")->required();
    rank_cmd->add_option("--tol", tol, "rank threshold (default eps*max(m,n)*p*sigma1)")
        ->check(CLI::NonNegativeNumber);

    auto* approx = app.add_subcommand("approx", "truncate to the largest singular values");
    approx->add_option("input", input, "tensor file")->required();
    approx->add_option("--rank", rank, "number of singular values kept")->required();
    approx->add_option("--mode", mode, "truncation mode")->check(CLI::IsMember({"trank"}));
    approx->add_option("--out", out, "output tensor file");

    auto* verify = app.add_subcommand("verify", "run the invariant suite on a tensor");
    verify->add_option("input", input, "tensor file")->required();
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--trials", trials, "randomized trials per property")->check(CLI::NonNegativeNumber);

    auto* tprod = app.add_subcommand("tprod", "T-product of two tensors");
    tprod->add_option("left", input, "left tensor file")->required();
    tprod->add_option("right", second, "right tensor file")->required();
    tprod->add_option("--out", out, "output tensor file (default: print)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (tsvd->parsed())
            return run_tsvd(input, out);
        if (rank_cmd->parsed())
            return run_rank(input, tol);
        if (approx->parsed())
            return run_approx(input, rank, out);
        if (verify->parsed())
            return run_verify(input, seed, trials);
        return run_tprod(input, second, out);
    } catch (const Failure& f) {
        return f.exit_code;
    }
}
