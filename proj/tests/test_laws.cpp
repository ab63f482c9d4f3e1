#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "levymix/laws.hpp"

using namespace levymix;

namespace {
constexpr double kPi = 3.14159265358979323846;

bool rel_close(double got, double want, double tol) {
    return std::fabs(got - want) <= tol * std::fabs(want);
}
}  // namespace

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(VGParams(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(VGParams(1.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(StudentParams(-3.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(GHParams(1.0, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(NormalParams(0.0), std::domain_error);
    CHECK_THROWS_AS(CauchyParams(0.0), std::domain_error);
}

TEST_CASE("vg pdf: Laplace case and elementary sums") {
    const double alpha = 1.7;
    const VGParams lap(1.0, alpha);
    for (const double x : {-3.0, -0.2, 0.0, 0.5, 4.0})
        CHECK(rel_close(vg_pdf(lap, x), 0.5 * alpha * std::exp(-alpha * std::fabs(x)),
                        1e-13));
    // lambda = 2 (n = 1): f = (alpha/8) e^{-alpha|x|} (2 + 2 alpha |x|)
    const VGParams p2(2.0, alpha);
    for (const double x : {0.1, 0.9, 2.7}) {
        const double want =
            alpha / 8.0 * std::exp(-alpha * x) * (2.0 + 2.0 * alpha * x);
        CHECK(rel_close(vg_pdf(p2, x), want, 1e-10));
    }
    // reference value at non-integer lambda (alpha = 1)
    CHECK(rel_close(vg_pdf(VGParams(0.7, 1.0), 0.3), 0.4224529905518787208202, 1e-11));
    // x = 0: finite for lambda > 1/2, singular otherwise
    CHECK(rel_close(vg_pdf(VGParams(2.0, 1.0), 0.0), 0.25, 1e-13));
    CHECK_THROWS_AS(vg_pdf(VGParams(0.5, 1.0), 0.0), std::domain_error);
    CHECK_THROWS_AS(vg_pdf(VGParams(0.3, 1.0), 0.0), std::domain_error);
}

TEST_CASE("vg chf and moments") {
    CHECK(rel_close(vg_chf(VGParams(1.0, std::sqrt(2.0)), 1.0), 2.0 / 3.0, 1e-14));
    CHECK(vg_chf(VGParams(2.5, 1.0), 0.0) == 1.0);
    CHECK(rel_close(vg_variance(VGParams(1.0, std::sqrt(2.0))), 1.0, 1e-14));
    CHECK(vg_moment(VGParams(1.3, 2.0), 0) == 1.0);
    CHECK(vg_moment(VGParams(1.3, 2.0), 3) == 0.0);
    CHECK(rel_close(vg_moment(VGParams(1.0, 1.0), 4), 24.0, 1e-13));
    CHECK(rel_close(vg_moment(VGParams(1.0, 1.0), 2),
                    vg_variance(VGParams(1.0, 1.0)), 1e-13));
    CHECK_THROWS_AS(vg_moment(VGParams(1.0, 1.0), -2), std::domain_error);
}

TEST_CASE("student pdf/chf closed forms") {
    const StudentParams t3(3.0, 1.0);
    CHECK(rel_close(student_pdf(t3, 0.0), 2.0 / kPi, 1e-14));
    for (const double x : {0.5, 2.0}) {
        const double d = 1.0 + x * x;
        CHECK(rel_close(student_pdf(t3, x), 2.0 / (kPi * d * d), 1e-13));
    }
    // nu = 1 is Cauchy: chf e^{-|u|}
    const StudentParams t1(1.0, 1.0);
    for (const double u : {-2.0, 0.3, 5.0})
        CHECK(rel_close(student_chf(t1, u), std::exp(-std::fabs(u)), 1e-13));
    CHECK(rel_close(student_chf(t3, 1.0), 2.0 * std::exp(-1.0), 1e-13));
    // general real order through the Bessel kernel
    CHECK(rel_close(student_chf(StudentParams(2.4, 1.3), 0.8),
                    0.6485990681275416695098, 1e-11));
    CHECK(student_chf(t3, 0.0) == 1.0);
}

TEST_CASE("odd-index student chfs") {
    CHECK(rel_close(student_chf_odd(2, 1.0), std::exp(-1.0) * (1.0 + 1.0 + 1.0 / 3.0),
                    1e-14));
    CHECK(student_chf_odd(3, 0.0) == 1.0);
    // nu = 7 row: e^{-|u|}(1 + |u| + 2u^2/5 + |u|^3/15)
    for (const double u : {0.4, 1.7, 6.0}) {
        const double want =
            std::exp(-u) * (1.0 + u + 0.4 * u * u + u * u * u / 15.0);
        CHECK(rel_close(student_chf_odd(3, u), want, 1e-13));
    }
    // consistency with the Bessel route on a grid
    for (int i = 1; i <= 100; ++i) {
        const double u = 12.0 * i / 100.0;
        CHECK(rel_close(student_chf_odd(1, u), student_chf(StudentParams(3.0, 1.0), u),
                        1e-12));
    }
}

TEST_CASE("student moments") {
    CHECK(rel_close(student_variance(StudentParams(3.0, 1.0)), 1.0, 1e-14));
    CHECK(rel_close(student_moment(StudentParams(5.0, 1.0), 2), 1.0 / 3.0, 1e-13));
    CHECK(student_moment(StudentParams(5.0, 1.0), 0) == 1.0);
    CHECK(student_moment(StudentParams(5.0, 1.0), 1) == 0.0);
    CHECK_THROWS_AS(student_moment(StudentParams(3.0, 1.0), 4), std::domain_error);
    CHECK_THROWS_AS(student_variance(StudentParams(2.0, 1.0)), std::domain_error);
}

TEST_CASE("gh family") {
    const GHParams p(1.0, 2.0, 1.0);
    CHECK(gh_chf(p, 0.0) == 1.0);
    for (const double x : {0.3, 1.4, 5.0})
        CHECK(rel_close(gh_pdf(p, x), gh_pdf(p, -x), 1e-13));
    CHECK(rel_close(gh_pdf(p, 0.7), 0.311178990206714418781, 1e-11));
    CHECK(rel_close(gh_chf(p, 0.7), 0.8082268789169077941786, 1e-11));
    CHECK(rel_close(gh_pdf(GHParams(-1.5, 0.5, 2.0), 1.1), 0.1961418795521046755285,
                    1e-11));
    // VG limit: delta -> 0+ with lambda > 0
    for (const double lam : {0.8, 1.0, 2.5}) {
        const GHParams g(lam, 1.0, 1e-4);
        const VGParams v(lam, 1.0);
        for (const double x : {0.5, 1.0, 3.0})
            CHECK(rel_close(gh_pdf(g, x), vg_pdf(v, x), 1e-3));
    }
}

TEST_CASE("law variant dispatch") {
    const LawParams vg = VGParams(1.0, std::sqrt(2.0));
    const LawParams st = StudentParams(3.0, 1.0);
    const LawParams no = NormalParams(1.0);
    const LawParams ca = CauchyParams(1.0);
    CHECK(rel_close(law_variance(vg), 1.0, 1e-14));
    CHECK(rel_close(law_variance(st), 1.0, 1e-14));
    CHECK(rel_close(law_variance(no), 1.0, 1e-14));
    CHECK_THROWS_AS(law_variance(ca), std::domain_error);
    CHECK(rel_close(law_pdf(no, 0.0), 1.0 / std::sqrt(2.0 * kPi), 1e-14));
    CHECK(rel_close(law_pdf(ca, 0.0), 1.0 / kPi, 1e-14));
    CHECK(rel_close(law_chf(ca, 2.0), std::exp(-2.0), 1e-14));
}
