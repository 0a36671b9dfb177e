#include "tsvdkit/tsvdkit.h"

#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsvdkit/error.hpp"
#include "tsvdkit/io.hpp"
#include "tsvdkit/kmsvd.hpp"
#include "tsvdkit/tprod.hpp"
#include "tsvdkit/verify.hpp"

struct tsvdkit_tensor {
    tsvdkit::Tensor3 value;
};

struct tsvdkit_tsvd {
    tsvdkit_tensor u, s, v;
};

struct tsvdkit_rank_report {
    tsvdkit::RankReport value;
};

struct tsvdkit_verify_report {
    std::vector<tsvdkit::PropertyResult> items;
};

namespace {

thread_local std::string last_error;

tsvdkit_status fail(tsvdkit_status code, const char* what)
{
    last_error = what;
    return code;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
tsvdkit_status guarded(Body&& body) noexcept
{
    try {
        body();
        return TSVDKIT_OK;
    } catch (const tsvdkit::ArgumentError& e) {
        return fail(TSVDKIT_ERR_ARGUMENT, e.what());
    } catch (const tsvdkit::DimensionError& e) {
        return fail(TSVDKIT_ERR_DIMENSION, e.what());
    } catch (const tsvdkit::FormatError& e) {
        return fail(TSVDKIT_ERR_FORMAT, e.what());
    } catch (const tsvdkit::StructureError& e) {
        return fail(TSVDKIT_ERR_STRUCTURE, e.what());
    } catch (const tsvdkit::NumericalError& e) {
        return fail(TSVDKIT_ERR_NUMERICAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(TSVDKIT_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(TSVDKIT_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(TSVDKIT_ERR_INTERNAL, "unknown error");
    }
}

void require(bool ok, const char* what)
{
    if (!ok)
        throw tsvdkit::ArgumentError(what);
}

tsvdkit_status emit(tsvdkit_tensor** out, auto&& compute)
{
    return guarded([&] {
        require(out != nullptr, "output handle is null");
        *out = new tsvdkit_tensor{compute()};
    });
}

} // namespace

extern "C" {

const char* tsvdkit_version(void)
{
    return "1.0.0";
}

const char* tsvdkit_status_string(tsvdkit_status status)
{
    switch (status) {
    case TSVDKIT_OK: return "ok";
    case TSVDKIT_ERR_ARGUMENT: return "invalid argument";
    case TSVDKIT_ERR_DIMENSION: return "dimension mismatch";
    case TSVDKIT_ERR_FORMAT: return "format error";
    case TSVDKIT_ERR_STRUCTURE: return "structure violation";
    case TSVDKIT_ERR_NUMERICAL: return "numerical failure";
    case TSVDKIT_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* tsvdkit_last_error(void)
{
    return last_error.c_str();
}

tsvdkit_status tsvdkit_tensor_create(size_t m, size_t n, size_t p, const double* data, tsvdkit_tensor** out)
{
    return emit(out, [&] {
        if (data == nullptr)
            return tsvdkit::Tensor3(m, n, p);
        return tsvdkit::Tensor3(m, n, p, std::vector<double>(data, data + m * n * p));
    });
}

void tsvdkit_tensor_destroy(tsvdkit_tensor* t)
{
    delete t;
}

tsvdkit_status tsvdkit_tensor_dims(const tsvdkit_tensor* t, size_t* m, size_t* n, size_t* p)
{
    return guarded([&] {
        require(t && m && n && p, "null argument to tsvdkit_tensor_dims");
        *m = t->value.m();
        *n = t->value.n();
        *p = t->value.p();
    });
}

const double* tsvdkit_tensor_data(const tsvdkit_tensor* t)
{
    return t ? t->value.data().data() : nullptr;
}

tsvdkit_status tsvdkit_tensor_load(const char* path, tsvdkit_tensor** out)
{
    return emit(out, [&] {
        require(path != nullptr, "path is null");
        return tsvdkit::read_tensor_file(path);
    });
}

tsvdkit_status tsvdkit_tensor_save(const tsvdkit_tensor* t, const char* path)
{
    return guarded([&] {
        require(t && path, "null argument to tsvdkit_tensor_save");
        tsvdkit::write_tensor_file(path, t->value);
    });
}

tsvdkit_status tsvdkit_tensor_parse(const char* text, tsvdkit_tensor** out)
{
    return emit(out, [&] {
        require(text != nullptr, "text is null");
        return tsvdkit::parse_tensor(text);
    });
}

tsvdkit_status tsvdkit_frobenius_norm(const tsvdkit_tensor* t, double* out)
{
    return guarded([&] {
        require(t && out, "null argument to tsvdkit_frobenius_norm");
        *out = tsvdkit::frobenius_norm(t->value);
    });
}

tsvdkit_status tsvdkit_identity(size_t n, size_t p, tsvdkit_tensor** out)
{
    return emit(out, [&] { return tsvdkit::identity_tensor(n, p); });
}

tsvdkit_status tsvdkit_transpose(const tsvdkit_tensor* a, tsvdkit_tensor** out)
{
    return emit(out, [&] {
        require(a != nullptr, "tensor is null");
        return tsvdkit::transpose(a->value);
    });
}

tsvdkit_status tsvdkit_subtract(const tsvdkit_tensor* a, const tsvdkit_tensor* b, tsvdkit_tensor** out)
{
    return emit(out, [&] {
        require(a && b, "tensor is null");
        return a->value - b->value;
    });
}

tsvdkit_status tsvdkit_tprod(const tsvdkit_tensor* a, const tsvdkit_tensor* b, tsvdkit_tensor** out)
{
    return emit(out, [&] {
        require(a && b, "tensor is null");
        return tsvdkit::tprod(a->value, b->value);
    });
}

tsvdkit_status tsvdkit_tprod_direct(const tsvdkit_tensor* a, const tsvdkit_tensor* b, tsvdkit_tensor** out)
{
    return emit(out, [&] {
        require(a && b, "tensor is null");
        return tsvdkit::tprod_direct(a->value, b->value);
    });
}

tsvdkit_status tsvdkit_tinverse(const tsvdkit_tensor* a, tsvdkit_tensor** out)
{
    return emit(out, [&] {
        require(a != nullptr, "tensor is null");
        return tsvdkit::tinverse(a->value);
    });
}

tsvdkit_status tsvdkit_is_orthogonal(const tsvdkit_tensor* q, double tol, int* result)
{
    return guarded([&] {
        require(q && result, "null argument to tsvdkit_is_orthogonal");
        *result = tsvdkit::is_orthogonal(q->value, tol) ? 1 : 0;
    });
}

tsvdkit_status tsvdkit_random_orthogonal(size_t n, size_t p, uint64_t seed, tsvdkit_tensor** out)
{
    return emit(out, [&] { return tsvdkit::random_orthogonal(n, p, seed); });
}

tsvdkit_status tsvdkit_km_mapping(const tsvdkit_tensor* a, tsvdkit_tensor** out)
{
    return emit(out, [&] {
        require(a != nullptr, "tensor is null");
        return tsvdkit::km_mapping(a->value);
    });
}

tsvdkit_status tsvdkit_km_equal(const tsvdkit_tensor* a, const tsvdkit_tensor* b, double tol, int* result)
{
    return guarded([&] {
        require(a && b && result, "null argument to tsvdkit_km_equal");
        *result = tsvdkit::km_equal(a->value, b->value, tol) ? 1 : 0;
    });
}

tsvdkit_status tsvdkit_tsvd_compute(const tsvdkit_tensor* a, tsvdkit_tsvd** out)
{
    return guarded([&] {
        require(a && out, "null argument to tsvdkit_tsvd_compute");
        auto f = tsvdkit::tsvd(a->value);
        *out = new tsvdkit_tsvd{{std::move(f.u)}, {std::move(f.s)}, {std::move(f.v)}};
    });
}

void tsvdkit_tsvd_destroy(tsvdkit_tsvd* f)
{
    delete f;
}

const tsvdkit_tensor* tsvdkit_tsvd_u(const tsvdkit_tsvd* f)
{
    return f ? &f->u : nullptr;
}

const tsvdkit_tensor* tsvdkit_tsvd_s(const tsvdkit_tsvd* f)
{
    return f ? &f->s : nullptr;
}

const tsvdkit_tensor* tsvdkit_tsvd_v(const tsvdkit_tsvd* f)
{
    return f ? &f->v : nullptr;
}

tsvdkit_status tsvdkit_tsvd_reconstruct(const tsvdkit_tsvd* f, tsvdkit_tensor** out)
{
    return emit(out, [&] {
        require(f != nullptr, "factorization is null");
        return tsvdkit::tprod(f->u.value, tsvdkit::tprod(f->s.value, tsvdkit::transpose(f->v.value)));
    });
}

tsvdkit_status tsvdkit_truncate_trank(const tsvdkit_tsvd* f, size_t rank, tsvdkit_tensor** out)
{
    return emit(out, [&] {
        require(f != nullptr, "factorization is null");
        return tsvdkit::truncate_trank(tsvdkit::TSvd{f->u.value, f->s.value, f->v.value}, rank);
    });
}

tsvdkit_status tsvdkit_best_trank_one(const tsvdkit_tensor* a, tsvdkit_tensor** out)
{
    return emit(out, [&] {
        require(a != nullptr, "tensor is null");
        return tsvdkit::best_trank_one(a->value);
    });
}

tsvdkit_status tsvdkit_sigma1_bound_check(const tsvdkit_tensor* a, int* result)
{
    return guarded([&] {
        require(a && result, "null argument to tsvdkit_sigma1_bound_check");
        *result = tsvdkit::sigma1_upper_bound_check(a->value) ? 1 : 0;
    });
}

tsvdkit_status tsvdkit_rank_report_compute(const tsvdkit_tensor* a, double tol, tsvdkit_rank_report** out)
{
    return guarded([&] {
        require(a && out, "null argument to tsvdkit_rank_report_compute");
        std::optional<double> t;
        if (tol >= 0.0)
            t = tol;
        else
            require(tol < 0.0, "tolerance is NaN");
        *out = new tsvdkit_rank_report{tsvdkit::singular_values(a->value, t)};
    });
}

void tsvdkit_rank_report_destroy(tsvdkit_rank_report* r)
{
    delete r;
}

const double* tsvdkit_rank_report_singular_values(const tsvdkit_rank_report* r, size_t* count)
{
    if (!r)
        return nullptr;
    if (count)
        *count = r->value.singular_values.size();
    return r->value.singular_values.data();
}

const double* tsvdkit_rank_report_t_singular_values(const tsvdkit_rank_report* r, size_t* count)
{
    if (!r)
        return nullptr;
    if (count)
        *count = r->value.t_singular_values.size();
    return r->value.t_singular_values.data();
}

size_t tsvdkit_rank_report_t_rank(const tsvdkit_rank_report* r)
{
    return r ? r->value.t_rank : 0;
}

size_t tsvdkit_rank_report_tubal_rank(const tsvdkit_rank_report* r)
{
    return r ? r->value.tubal_rank : 0;
}

double tsvdkit_rank_report_threshold(const tsvdkit_rank_report* r)
{
    return r ? r->value.threshold : 0.0;
}

tsvdkit_status tsvdkit_verify(const tsvdkit_tensor* a, uint64_t seed, int trials, tsvdkit_verify_report** out)
{
    return guarded([&] {
        require(a && out, "null argument to tsvdkit_verify");
        require(trials >= 0, "trials must be non-negative");
        *out = new tsvdkit_verify_report{tsvdkit::run_invariant_suite(a->value, seed, trials)};
    });
}

void tsvdkit_verify_report_destroy(tsvdkit_verify_report* r)
{
    delete r;
}

size_t tsvdkit_verify_report_count(const tsvdkit_verify_report* r)
{
    return r ? r->items.size() : 0;
}

tsvdkit_status tsvdkit_verify_report_item(const tsvdkit_verify_report* r, size_t index, const char** name,
                                          int* passed, const char** detail)
{
    return guarded([&] {
        require(r != nullptr, "report is null");
        require(index < r->items.size(), "report index out of range");
        const auto& item = r->items[index];
        if (name)
            *name = item.name.c_str();
        if (passed)
            *passed = item.passed ? 1 : 0;
        if (detail)
            *detail = item.detail.c_str();
    });
}

} // extern "C"
