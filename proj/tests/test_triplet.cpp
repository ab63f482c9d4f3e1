#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "levymix/errors.hpp"
#include "levymix/grid.hpp"
#include "levymix/triplet.hpp"

using namespace levymix;

namespace {
constexpr double kPi = 3.14159265358979323846;

bool rel_close(double got, double want, double tol) {
    return std::fabs(got - want) <= tol * std::fabs(want);
}

Chf cauchy_chf = [](double u) { return std::exp(-std::fabs(u)); };
Chf cauchy_dchf = [](double u) {
    return -((u >= 0.0) ? 1.0 : -1.0) * std::exp(-std::fabs(u));
};
Chf student3_chf = [](double u) {
    const double au = std::fabs(u);
    return std::exp(-au) * (1.0 + au);
};
Chf student3_dchf = [](double u) {
    const double au = std::fabs(u);
    return -((u >= 0.0) ? 1.0 : -1.0) * au * std::exp(-au);
};
Chf wiener_chf = [](double u) { return std::exp(-0.5 * u * u); };
Chf wiener_dchf = [](double u) { return -u * std::exp(-0.5 * u * u); };
}  // namespace

TEST_CASE("closed-form Levy densities") {
    CHECK(rel_close(w_vg(1.0, 1.0), std::exp(-1.0), 1e-14));
    CHECK(w_vg(-2.3, 0.7) == w_vg(2.3, 0.7));
    CHECK_THROWS_AS(w_vg(0.0, 1.0), std::domain_error);

    // mpmath references
    CHECK(rel_close(w_student3(0.25), 3.722251439990941624206, 1e-12));
    CHECK(rel_close(w_student3(0.5), 0.7254111910223646234957, 1e-12));
    CHECK(rel_close(w_student3(1.0), 0.1204963270243294407851, 1e-12));
    CHECK(rel_close(w_student3(2.0), 0.01607130881376851987502, 1e-12));
    CHECK(rel_close(w_student3(5.0), 0.0007548544153254827557423, 1e-12));
    CHECK(rel_close(w_student3(10.0), 0.00005758114400231956401211, 1e-11));
    CHECK(rel_close(w_student3(1e-3), 317812.2198165877543398, 1e-12));
    CHECK(rel_close(w_student3(1000.0), 6.366121331594832170521e-13, 1e-10));
    CHECK(w_student3(-0.5) == w_student3(0.5));
    CHECK_THROWS_AS(w_student3(0.0), std::domain_error);

    // limits: z^2 W -> 1/pi at 0, z^4 W -> 2/pi at infinity
    CHECK(rel_close(1e-12 * w_student3(1e-6), 1.0 / kPi, 1e-5));
    CHECK(rel_close(1e12 * w_student3(1e3), 2.0 / kPi, 1e-4));
}

TEST_CASE("reference triplets") {
    const LevyTriplet w = reference_triplet(ReferenceProcess::Wiener);
    CHECK(w.A == 0.0);
    CHECK(w.B == 1.0);
    CHECK(w.W(5.0) == 0.0);
    const LevyTriplet c = reference_triplet(ReferenceProcess::Cauchy);
    CHECK(c.B == 0.0);
    CHECK(rel_close(c.W(1.0), 1.0 / kPi, 1e-14));
    CHECK(c.W(-2.0) == c.W(2.0));
    const LevyTriplet w2 = reference_triplet(ReferenceProcess::Wiener, 2.0, 0.5);
    CHECK(w2.B == 8.0);
}

TEST_CASE("numeric Levy density") {
    // Cauchy ground truth
    CHECK(std::fabs(numeric_w(cauchy_chf, cauchy_dchf, 1.0, 600.0) - 1.0 / kPi) <=
          1e-4);
    // VG lambda = 1 vs closed form
    const Chf vgc = [](double u) { return 1.0 / (1.0 + u * u); };
    const Chf vgd = [](double u) {
        return -2.0 * u / ((1.0 + u * u) * (1.0 + u * u));
    };
    CHECK(std::fabs(numeric_w(vgc, vgd, 1.0, 2000.0) - w_vg(1.0, 1.0)) <= 1e-4);
    // T(3) vs closed form
    CHECK(std::fabs(numeric_w(student3_chf, student3_dchf, 2.0, 600.0) -
                    w_student3(2.0)) <= 1e-4);
    CHECK_THROWS_AS(numeric_w(cauchy_chf, cauchy_dchf, 0.0, 600.0),
                    std::domain_error);
}

TEST_CASE("numeric drift and diffusion") {
    CHECK(numeric_a(student3_chf, student3_dchf, 600.0) == 0.0);
    CHECK(numeric_a(cauchy_chf, cauchy_dchf, 600.0) == 0.0);
    CHECK(std::fabs(numeric_b(wiener_chf, wiener_dchf, 20.0) - 1.0) <= 1e-3);
    CHECK(std::fabs(numeric_b(student3_chf, student3_dchf, 600.0)) <= 1e-3);
    const Chf vgc = [](double u) { return 1.0 / (1.0 + u * u); };
    const Chf vgd = [](double u) {
        return -2.0 * u / ((1.0 + u * u) * (1.0 + u * u));
    };
    CHECK(std::fabs(numeric_b(vgc, vgd, 2000.0)) <= 1e-3);
    CHECK_THROWS_AS(numeric_b(student3_chf, student3_dchf, 600.0, {0.1}),
                    std::domain_error);
}

TEST_CASE("Levy-Khinchin residuals") {
    LevyTriplet vg;
    vg.W = [](double z) { return w_vg(z, 1.0); };
    const double res_vg = levy_khinchin_residual(
        vg, [](double u) { return 1.0 / (1.0 + u * u); }, make_grid(-5.0, 5.0, 11));
    CHECK(res_vg <= 1e-8);

    const LevyTriplet cauchy = reference_triplet(ReferenceProcess::Cauchy);
    const double res_c =
        levy_khinchin_residual(cauchy, cauchy_chf, make_grid(-5.0, 5.0, 11));
    CHECK(res_c <= 1e-8);

    LevyTriplet st;
    st.W = [](double z) { return w_student3(z); };
    const double res_st =
        levy_khinchin_residual(st, student3_chf, {0.5, 1.0, 3.0});
    CHECK(res_st <= 1e-6);

    LevyTriplet bad;
    bad.B = 1.0;
    bad.W = [](double) { return 0.0; };
    CHECK_THROWS_AS(levy_khinchin_residual(bad, cauchy_chf, {1.0}),
                    std::domain_error);
}

TEST_CASE("csv emission") {
    std::ostringstream os;
    triplet_csv(os, {0.5, 1.0}, 1.0);
    const std::string got = os.str();
    CHECK(got.find("z,w_student3,w_vg") == 0);
    CHECK(got.find("0.72541119102236462") != std::string::npos);
    CHECK(got.find("0.36787944117144233") != std::string::npos);
}
