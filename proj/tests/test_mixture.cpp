#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "levymix/laws.hpp"
#include "levymix/mixture.hpp"

using namespace levymix;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("weights for the first few times") {
    const MixtureWeights w1 = mixture_weights(1);
    CHECK(w1.rational(0) == "0/1");
    CHECK(w1.rational(1) == "1/1");

    const MixtureWeights w2 = mixture_weights(2);
    CHECK(w2.rational(0) == "0/1");
    CHECK(w2.rational(1) == "1/4");
    CHECK(w2.rational(2) == "3/4");

    const MixtureWeights w3 = mixture_weights(3);
    CHECK(w3.rational(1) == "1/9");
    CHECK(w3.rational(2) == "1/3");
    CHECK(w3.rational(3) == "5/9");

    const MixtureWeights w4 = mixture_weights(4);
    CHECK(w4.rational(1) == "1/16");
    CHECK(w4.rational(2) == "45/256");
    CHECK(w4.rational(3) == "45/128");
    CHECK(w4.rational(4) == "105/256");

    const MixtureWeights w5 = mixture_weights(5);
    CHECK(w5.rational(1) == "1/25");
    CHECK(w5.rational(2) == "66/625");
    CHECK(w5.rational(3) == "27/125");
    CHECK(w5.rational(4) == "42/125");
    CHECK(w5.rational(5) == "189/625");
}

TEST_CASE("exact identities on a modest range") {
    for (int n = 1; n <= 40; ++n) {
        const MixtureWeights w = mixture_weights(n);
        REQUIRE(static_cast<int>(w.weights.size()) == n + 1);
        CHECK(w.weights[0] == 0);
        BigRat sum = 0, harm = 0, second = 0;
        for (int k = 0; k <= n; ++k) {
            if (k >= 1) CHECK(w.weights[k] > 0);
            sum += w.weights[k];
            if (k >= 1) {
                harm += w.weights[k] / BigRat(2 * k - 1);
                second += w.weights[k] * BigRat(n) * BigRat(n) / BigRat(2 * k - 1);
            }
        }
        CHECK(sum == 1);
        CHECK(harm == BigRat(1, n));
        CHECK(second == n);
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(mixture_weights(0), std::domain_error);
    CHECK_THROWS_AS(mixture_weights(-3), std::domain_error);
    CHECK_THROWS_AS(mixture_weights(10001), std::domain_error);
}

TEST_CASE("mixture pdf") {
    // n = 1 reduces to the generating law
    const MixtureWeights w1 = mixture_weights(1);
    const StudentParams t3(3.0, 1.0);
    for (const double x : {-4.0, 0.0, 0.7, 2.0})
        CHECK(std::fabs(mixture_pdf(w1, x) - student_pdf(t3, x)) <= 1e-15);
    // n = 2 at the origin: 1.25/pi
    CHECK(std::fabs(mixture_pdf(2.0 * 0.0, 2) - 1.25 / kPi) <= 1e-15);
    // n = 3 at the origin, high precision reference
    CHECK(std::fabs(mixture_pdf(0.0, 3) - 0.306520631139946573) <= 1e-14);
    // quartic tail at |x| = 500
    for (const int n : {1, 2, 3}) {
        const double x = 500.0;
        const double v = mixture_pdf(x, n) * x * x * x * x;
        CHECK(std::fabs(v / (2.0 * n / kPi) - 1.0) <= 0.01);
    }
}

TEST_CASE("weights csv emission") {
    std::ostringstream os;
    weights_csv(os, 2);
    const std::string got = os.str();
    CHECK(got.find("n,k,q_decimal,q_rational") == 0);
    CHECK(got.find("1,0,0,0/1") != std::string::npos);
    CHECK(got.find("1,1,1,1/1") != std::string::npos);
    CHECK(got.find("2,1,0.25,1/4") != std::string::npos);
    CHECK(got.find("2,2,0.75,3/4") != std::string::npos);
    // single nonzero row for n = 1
    std::istringstream is(got);
    std::string line;
    int nonzero_n1 = 0;
    while (std::getline(is, line))
        if (line.rfind("1,", 0) == 0 && line.find(",0,0/1") == std::string::npos)
            ++nonzero_n1;
    CHECK(nonzero_n1 == 1);
}

TEST_CASE("largest-order weight decreases in n") {
    BigRat prev = mixture_weights(2).weights[2];
    for (int n = 3; n <= 60; ++n) {
        const BigRat cur = mixture_weights(n).weights[n];
        CHECK(cur < prev);
        prev = cur;
    }
}
