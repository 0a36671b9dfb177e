#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "tsvdkit/tsvdkit.h"

namespace {

struct TensorHandle {
    tsvdkit_tensor* t = nullptr;
    ~TensorHandle() { tsvdkit_tensor_destroy(t); }
};

std::vector<double> fdiagonal_example_data()
{
    std::vector<double> d(27, 0.0);
    d[0 * 9 + 1 * 3 + 1] = 6;
    d[1 * 9 + 0 * 3 + 0] = 5;
    d[1 * 9 + 2 * 3 + 2] = 9;
    d[2 * 9 + 2 * 3 + 2] = 9;
    return d;
}

double norm_of_difference(const tsvdkit_tensor* a, const tsvdkit_tensor* b)
{
    TensorHandle diff;
    EXPECT_EQ(tsvdkit_subtract(a, b, &diff.t), TSVDKIT_OK);
    double n = -1;
    EXPECT_EQ(tsvdkit_frobenius_norm(diff.t, &n), TSVDKIT_OK);
    return n;
}

TEST(CApi, VersionAndStatusStrings)
{
    EXPECT_STREQ(tsvdkit_version(), "1.0.0");
    EXPECT_STRNE(tsvdkit_status_string(TSVDKIT_OK), tsvdkit_status_string(TSVDKIT_ERR_DIMENSION));
}

TEST(CApi, CreateAndInspect)
{
    const double data[] = {1, 2, 3, 4, 5, 6};
    TensorHandle a;
    ASSERT_EQ(tsvdkit_tensor_create(1, 3, 2, data, &a.t), TSVDKIT_OK);
    size_t m = 0, n = 0, p = 0;
    ASSERT_EQ(tsvdkit_tensor_dims(a.t, &m, &n, &p), TSVDKIT_OK);
    EXPECT_EQ(m, 1u);
    EXPECT_EQ(n, 3u);
    EXPECT_EQ(p, 2u);
    EXPECT_EQ(tsvdkit_tensor_data(a.t)[4], 5.0);

    TensorHandle z;
    ASSERT_EQ(tsvdkit_tensor_create(2, 2, 2, nullptr, &z.t), TSVDKIT_OK);
    double norm = -1;
    ASSERT_EQ(tsvdkit_frobenius_norm(z.t, &norm), TSVDKIT_OK);
    EXPECT_EQ(norm, 0.0);
}

TEST(CApi, ErrorsMapToStatusCodes)
{
    TensorHandle a;
    EXPECT_EQ(tsvdkit_tensor_create(0, 1, 1, nullptr, &a.t), TSVDKIT_ERR_DIMENSION);
    EXPECT_EQ(a.t, nullptr);
    EXPECT_NE(std::string(tsvdkit_last_error()), "");
    const double bad[] = {NAN};
    EXPECT_EQ(tsvdkit_tensor_create(1, 1, 1, bad, &a.t), TSVDKIT_ERR_FORMAT);
    EXPECT_EQ(tsvdkit_tensor_create(1, 1, 1, nullptr, nullptr), TSVDKIT_ERR_ARGUMENT);
    EXPECT_EQ(tsvdkit_tensor_parse("{\"dims\": [1,1]}", &a.t), TSVDKIT_ERR_FORMAT);
    EXPECT_NE(std::string(tsvdkit_last_error()).find("dims"), std::string::npos);
    EXPECT_EQ(tsvdkit_tensor_load("/nonexistent/x.json", &a.t), TSVDKIT_ERR_FORMAT);

    TensorHandle x, y, out;
    ASSERT_EQ(tsvdkit_tensor_create(2, 3, 2, nullptr, &x.t), TSVDKIT_OK);
    ASSERT_EQ(tsvdkit_tensor_create(2, 3, 2, nullptr, &y.t), TSVDKIT_OK);
    EXPECT_EQ(tsvdkit_tprod(x.t, y.t, &out.t), TSVDKIT_ERR_DIMENSION);
    EXPECT_EQ(tsvdkit_tinverse(x.t, &out.t), TSVDKIT_ERR_DIMENSION);

    TensorHandle sq;
    ASSERT_EQ(tsvdkit_tensor_create(2, 2, 3, nullptr, &sq.t), TSVDKIT_OK);
    EXPECT_EQ(tsvdkit_tinverse(sq.t, &out.t), TSVDKIT_ERR_NUMERICAL);
    EXPECT_NE(std::string(tsvdkit_last_error()).find("singular"), std::string::npos);
    EXPECT_EQ(out.t, nullptr);

    tsvdkit_rank_report* r = nullptr;
    EXPECT_EQ(tsvdkit_rank_report_compute(sq.t, NAN, &r), TSVDKIT_ERR_ARGUMENT);
    EXPECT_EQ(r, nullptr);
}

TEST(CApi, TsvdOfExample)
{
    const auto data = fdiagonal_example_data();
    TensorHandle a;
    ASSERT_EQ(tsvdkit_tensor_create(3, 3, 3, data.data(), &a.t), TSVDKIT_OK);
    tsvdkit_tsvd* f = nullptr;
    ASSERT_EQ(tsvdkit_tsvd_compute(a.t, &f), TSVDKIT_OK);
    const double* s = tsvdkit_tensor_data(tsvdkit_tsvd_s(f));
    EXPECT_NEAR(s[0], 12, 1e-12);
    EXPECT_NEAR(s[4], 6, 1e-12);
    EXPECT_NEAR(s[8], 5, 1e-12);
    EXPECT_NEAR(s[9], 3, 1e-12);
    EXPECT_NEAR(s[18], 3, 1e-12);

    int ok = 0;
    ASSERT_EQ(tsvdkit_is_orthogonal(tsvdkit_tsvd_u(f), 1e-9, &ok), TSVDKIT_OK);
    EXPECT_EQ(ok, 1);
    ASSERT_EQ(tsvdkit_is_orthogonal(tsvdkit_tsvd_v(f), 1e-9, &ok), TSVDKIT_OK);
    EXPECT_EQ(ok, 1);

    TensorHandle rec;
    ASSERT_EQ(tsvdkit_tsvd_reconstruct(f, &rec.t), TSVDKIT_OK);
    EXPECT_LE(norm_of_difference(rec.t, a.t), 1e-12);

    TensorHandle a1, best;
    ASSERT_EQ(tsvdkit_truncate_trank(f, 1, &a1.t), TSVDKIT_OK);
    EXPECT_NEAR(std::pow(norm_of_difference(a.t, a1.t), 2), 79.0, 1e-10);
    ASSERT_EQ(tsvdkit_best_trank_one(a.t, &best.t), TSVDKIT_OK);
    EXPECT_LE(norm_of_difference(best.t, a1.t), 1e-12);
    TensorHandle bad;
    EXPECT_EQ(tsvdkit_truncate_trank(f, 0, &bad.t), TSVDKIT_ERR_ARGUMENT);
    EXPECT_EQ(tsvdkit_truncate_trank(f, 10, &bad.t), TSVDKIT_ERR_ARGUMENT);
    tsvdkit_tsvd_destroy(f);

    ASSERT_EQ(tsvdkit_sigma1_bound_check(a.t, &ok), TSVDKIT_OK);
    EXPECT_EQ(ok, 1);
}

TEST(CApi, RankReport)
{
    const auto data = fdiagonal_example_data();
    TensorHandle a;
    ASSERT_EQ(tsvdkit_tensor_create(3, 3, 3, data.data(), &a.t), TSVDKIT_OK);
    tsvdkit_rank_report* r = nullptr;
    ASSERT_EQ(tsvdkit_rank_report_compute(a.t, -1.0, &r), TSVDKIT_OK);
    size_t count = 0;
    const double* sv = tsvdkit_rank_report_singular_values(r, &count);
    ASSERT_EQ(count, 9u);
    EXPECT_NEAR(sv[0], 12, 1e-12);
    EXPECT_NEAR(sv[4], 3, 1e-12);
    const double* lambda = tsvdkit_rank_report_t_singular_values(r, &count);
    ASSERT_EQ(count, 3u);
    EXPECT_NEAR(lambda[0], std::sqrt(162.0), 1e-12);
    EXPECT_EQ(tsvdkit_rank_report_t_rank(r), 5u);
    EXPECT_EQ(tsvdkit_rank_report_tubal_rank(r), 3u);
    EXPECT_GT(tsvdkit_rank_report_threshold(r), 0.0);
    tsvdkit_rank_report_destroy(r);

    ASSERT_EQ(tsvdkit_rank_report_compute(a.t, 4.0, &r), TSVDKIT_OK);
    EXPECT_EQ(tsvdkit_rank_report_t_rank(r), 3u);
    tsvdkit_rank_report_destroy(r);
}

TEST(CApi, AlgebraRoundTrips)
{
    TensorHandle q, qt, prod, direct, id, inv;
    ASSERT_EQ(tsvdkit_random_orthogonal(4, 5, 7, &q.t), TSVDKIT_OK);
    ASSERT_EQ(tsvdkit_transpose(q.t, &qt.t), TSVDKIT_OK);
    ASSERT_EQ(tsvdkit_tprod(qt.t, q.t, &prod.t), TSVDKIT_OK);
    ASSERT_EQ(tsvdkit_tprod_direct(qt.t, q.t, &direct.t), TSVDKIT_OK);
    ASSERT_EQ(tsvdkit_identity(4, 5, &id.t), TSVDKIT_OK);
    EXPECT_LE(norm_of_difference(prod.t, id.t), 1e-10);
    EXPECT_LE(norm_of_difference(direct.t, id.t), 1e-10);
    ASSERT_EQ(tsvdkit_tinverse(q.t, &inv.t), TSVDKIT_OK);
    EXPECT_LE(norm_of_difference(inv.t, qt.t), 1e-10);

    TensorHandle s1, s2;
    ASSERT_EQ(tsvdkit_km_mapping(q.t, &s1.t), TSVDKIT_OK);
    ASSERT_EQ(tsvdkit_km_mapping(id.t, &s2.t), TSVDKIT_OK);
    EXPECT_LE(norm_of_difference(s1.t, s2.t), 1e-10);
    int eq = 0;
    ASSERT_EQ(tsvdkit_km_equal(q.t, id.t, 1e-8, &eq), TSVDKIT_OK);
    EXPECT_EQ(eq, 1);
}

TEST(CApi, SaveLoadAndParse)
{
    TensorHandle a, b, c;
    ASSERT_EQ(tsvdkit_random_orthogonal(3, 2, 1, &a.t), TSVDKIT_OK);
    const auto path = (std::filesystem::temp_directory_path() / "tsvdkit_capi_roundtrip.json").string();
    ASSERT_EQ(tsvdkit_tensor_save(a.t, path.c_str()), TSVDKIT_OK);
    ASSERT_EQ(tsvdkit_tensor_load(path.c_str(), &b.t), TSVDKIT_OK);
    EXPECT_EQ(norm_of_difference(a.t, b.t), 0.0);
    std::filesystem::remove(path);
    ASSERT_EQ(tsvdkit_tensor_parse("{\"dims\": [1, 1, 2], \"data\": [1, 2]}", &c.t), TSVDKIT_OK);
    EXPECT_EQ(tsvdkit_tensor_data(c.t)[1], 2.0);
}

TEST(CApi, VerifyReport)
{
    const auto data = fdiagonal_example_data();
    TensorHandle a;
    ASSERT_EQ(tsvdkit_tensor_create(3, 3, 3, data.data(), &a.t), TSVDKIT_OK);
    tsvdkit_verify_report* r = nullptr;
    ASSERT_EQ(tsvdkit_verify(a.t, 3, 5, &r), TSVDKIT_OK);
    const size_t count = tsvdkit_verify_report_count(r);
    EXPECT_EQ(count, 9u);
    for (size_t i = 0; i < count; ++i) {
        const char* name = nullptr;
        const char* detail = nullptr;
        int passed = 0;
        ASSERT_EQ(tsvdkit_verify_report_item(r, i, &name, &passed, &detail), TSVDKIT_OK);
        EXPECT_EQ(passed, 1) << name << ": " << detail;
    }
    const char* name = nullptr;
    int passed = 0;
    EXPECT_EQ(tsvdkit_verify_report_item(r, count, &name, &passed, nullptr), TSVDKIT_ERR_ARGUMENT);
    tsvdkit_verify_report_destroy(r);
    EXPECT_EQ(tsvdkit_verify(a.t, 3, -1, &r), TSVDKIT_ERR_ARGUMENT);
}

} // namespace
