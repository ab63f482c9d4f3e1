#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "levymix/errors.hpp"
#include "levymix/specfun.hpp"

using namespace levymix;

namespace {
constexpr double kPi = 3.14159265358979323846;

bool rel_close(double got, double want, double tol) {
    return std::fabs(got - want) <= tol * std::fabs(want);
}
}  // namespace

TEST_CASE("bessel_k_half elementary values") {
    CHECK(rel_close(bessel_k_half(0, 1.0), std::sqrt(kPi / 2.0) * std::exp(-1.0), 1e-14));
    CHECK(rel_close(bessel_k_half(1, 1.0), std::sqrt(kPi / 2.0) * std::exp(-1.0) * 2.0,
                    1e-14));
    // high-precision reference values
    CHECK(rel_close(bessel_k_half(0, 1.0), 0.4610685044478945584396, 1e-14));
    // large-argument decay ~ sqrt(pi/2z) e^{-z}
    const double z = 300.0;
    CHECK(rel_close(bessel_k_half(0, z), std::sqrt(kPi / (2.0 * z)) * std::exp(-z),
                    1e-13));
    CHECK_THROWS_AS(bessel_k_half(0, 0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k_half(0, -1.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k_half(-1, 1.0), std::domain_error);
}

TEST_CASE("bessel_k matches the half-integer sum") {
    for (const double z : {0.05, 0.4, 1.0, 3.7, 20.0}) {
        CHECK(rel_close(bessel_k(0.5, z), bessel_k_half(0, z), 1e-12));
        CHECK(rel_close(bessel_k(2.5, z), bessel_k_half(2, z), 1e-12));
    }
}

TEST_CASE("bessel_k reference values") {
    // mpmath, 22 digits
    CHECK(rel_close(bessel_k(7.3, 0.9), 209358.8786513254502322, 1e-11));
    CHECK(rel_close(bessel_k(0.75, 3.2), 0.02980814990840762436204, 1e-11));
    CHECK(rel_close(bessel_k(25.25, 40.0), 1.762566217845909061191e-15, 1e-11));
    CHECK(rel_close(bessel_k(0.0, 1e-6), 13.93144207362641945869, 1e-11));
    CHECK(rel_close(bessel_k(1.5, 50.0), 3.486992497366216128284e-23, 1e-11));
    CHECK(rel_close(bessel_k(100.0, 14.07), 5.32114039227802057146e+70, 1e-10));
    CHECK(rel_close(bessel_k(33.7, 0.5), 2.946552327352297831549e+56, 1e-10));
    CHECK(rel_close(bessel_k(0.3, 1e-5), 58.17861912671533092439, 1e-11));
    // small-z law: K_nu(z) ~ (1/2) Gamma(nu) (2/z)^nu
    CHECK(rel_close(bessel_k(2.0, 1e-4), 199999999.4999999934266, 1e-10));
    CHECK(rel_close(bessel_k(2.0, 1e-4),
                    0.5 * std::tgamma(2.0) * std::pow(2.0 / 1e-4, 2.0), 1e-8));
    CHECK(rel_close(bessel_k(-7.3, 0.9), bessel_k(7.3, 0.9), 1e-13));
    CHECK_THROWS_AS(bessel_k(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k(60.0, 1e-7), numeric_error);  // overflow signalled
}

TEST_CASE("upper incomplete gamma basics") {
    // a = 1: e^{-z}
    for (const Complex z : {Complex(0.3, 0.0), Complex(1.0, 2.0), Complex(0.0, 5.0)}) {
        const Complex got = upper_gamma_complex(1.0, z);
        const Complex want = std::exp(-z);
        CHECK(std::abs(got - want) <= 1e-13 * std::abs(want));
    }
    // Gamma(a, 0) = Gamma(a)
    CHECK(rel_close(upper_gamma_complex(3.0, Complex(0.0, 0.0)).real(), 2.0, 1e-14));
    CHECK(upper_gamma_complex(3.0, Complex(0.0, 0.0)).imag() == 0.0);
    // integer a: n! e^{-z} sum z^k/k!
    {
        const int n = 4;
        const Complex z(1.3, 0.7);
        Complex partial(0.0, 0.0);
        Complex zk(1.0, 0.0);
        double kfact = 1.0;
        for (int k = 0; k <= n; ++k) {
            partial += zk / kfact;
            zk *= z;
            kfact *= (k + 1.0);
        }
        const Complex want = 24.0 * std::exp(-z) * partial;
        const Complex got = upper_gamma_complex(n + 1.0, z);
        CHECK(std::abs(got - want) <= 1e-12 * std::abs(want));
    }
}

TEST_CASE("upper incomplete gamma reference values") {
    const auto close = [](Complex got, Complex want, double tol) {
        return std::abs(got - want) <= tol * std::abs(want);
    };
    CHECK(close(upper_gamma_complex(2.0, Complex(1.0, 1.0)),
                Complex(0.7070920963459380797015, -0.420353640959811456259), 1e-12));
    CHECK(close(upper_gamma_complex(1.5, Complex(0.5, 200.0)),
                Complex(-2.31095356335597591821, 8.260624120271375992884), 1e-11));
    CHECK(close(upper_gamma_complex(151.0, Complex(150.0, 3.0)),
                Complex(2.980599376833458676144e+262, -5.636345996041817092616e+261),
                1e-10));
    CHECK(close(upper_gamma_complex(4.7, Complex(3.7, 200.0)),
                Complex(7074645.671341677927511, 3899431.473587455830571), 1e-11));
    CHECK(close(upper_gamma_complex(0.5, Complex(2.25, 0.0)),
                Complex(0.06007706365571390497337, 0.0), 1e-12));
    CHECK(close(upper_gamma_complex(120.0, Complex(250.0, 80.0)),
                Complex(2.806840867884103450852e+179, 1.931772167473804308163e+179),
                1e-10));
    CHECK(close(upper_gamma_complex(60.0, Complex(1.0, 9000.0)),
                Complex(-4.444302754573114650329e+232, 5.84811816045585717061e+232),
                1e-10));
    // values beyond the double range are reported, not silently wrong
    CHECK_THROWS_AS(upper_gamma_complex(200.0, Complex(300.0, 100.0)), numeric_error);
    CHECK_THROWS_AS(upper_gamma_complex(0.0, Complex(1.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(upper_gamma_complex(1.0, Complex(-0.5, 1.0)), std::domain_error);
    CHECK_THROWS_AS(upper_gamma_complex(200.0, Complex(0.0, 0.0)), numeric_error);
}

TEST_CASE("sine and cosine integrals") {
    CHECK(sin_integral(0.0) == doctest::Approx(-kPi / 2.0).epsilon(1e-15));
    struct Row {
        double x, si, ci;
    };
    const Row rows[] = {
        {0.5, -1.07768890875182993007, -0.1777840788066129013358},
        {2.0, 0.0346166500077982293454, 0.4229808287748649956986},
        {4.0, 0.1874068121541564388742, -0.1409816978869304116391},
        {8.0, 0.00339049491204543285165, 0.1224338825320095572923},
        {9.5, 0.1036670154865364718401, 0.00267805883565065741927},
        {12.0, -0.06582508526852324870417, -0.04978000688411367559592},
        {30.0, -0.00403978676454550824759, -0.03303241728207114377923},
        {100.0, -0.008570859905840325878977, -0.005148825142610492144444},
        {1000.0, -0.0005632048261254010833589, 0.0008263155110906822820018},
    };
    for (const auto& r : rows) {
        CHECK(std::fabs(sin_integral(r.x) - r.si) <= 1e-13);
        CHECK(std::fabs(cos_integral(r.x) - r.ci) <= 1e-13);
    }
    // ci(x) - log x -> Euler-Mascheroni as x -> 0+
    const double gamma = 0.57721566490153286060651209;
    CHECK(std::fabs((cos_integral(1e-6) - std::log(1e-6)) - gamma) <= 1e-12);
    CHECK_THROWS_AS(cos_integral(0.0), std::domain_error);
    CHECK_THROWS_AS(sin_integral(-1.0), std::domain_error);
}

TEST_CASE("log_gamma and beta") {
    CHECK(rel_close(beta(0.5, 1.5), kPi / 2.0, 1e-13));
    CHECK(rel_close(beta(0.5, 0.5), kPi, 1e-13));
    CHECK(rel_close(beta(0.5, 2.5), 3.0 * kPi / 8.0, 1e-13));
    CHECK(rel_close(log_gamma(5.0), std::log(24.0), 1e-14));
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(beta(-1.0, 2.0), std::domain_error);
}

TEST_CASE("upper gamma scaled form") {
    // scaled(a, z) = e^z z^{-a} Gamma(a, z); recurrence z*s(a+1) = a*s(a) + 1
    for (const Complex z : {Complex(2.0, 1.0), Complex(0.5, 30.0), Complex(80.0, 0.0)}) {
        for (const double a : {0.7, 3.0, 42.0}) {
            const Complex lhs = z * upper_gamma_scaled(a + 1.0, z);
            const Complex rhs = a * upper_gamma_scaled(a, z) + 1.0;
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
        }
    }
}
