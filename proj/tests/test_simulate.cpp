#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "levymix/simulate.hpp"

using namespace levymix;

namespace {
constexpr double kPi = 3.14159265358979323846;

double student3_cdf(double x) {
    return 0.5 + (std::atan(x) + x / (1.0 + x * x)) / kPi;
}
}  // namespace

TEST_CASE("quantile functions invert their CDFs") {
    CounterRng rng = CounterRng::for_path(7, 0);
    for (int i = 0; i < 2000; ++i) {
        const double p = rng.uniform01();
        CHECK(std::fabs(student3_cdf(student3_quantile(p)) - p) <= 1e-12);
    }
    for (const double p : {1e-12, 1e-9, 0.5, 1.0 - 1e-9, 1.0 - 1e-12})
        CHECK(std::fabs(student3_cdf(student3_quantile(p)) - p) <= 1e-12);
    CHECK(student3_quantile(0.5) == 0.0);
    CHECK(student3_quantile(0.25) == -student3_quantile(0.75));
    // reference quantiles
    CHECK(std::fabs(student3_quantile(0.7749075721239495427905) - 0.5) <= 1e-12);
    CHECK(std::fabs(student3_quantile(0.9797403368230829944397) - 2.0) <= 1e-11);
    CHECK_THROWS_AS(student3_quantile(0.0), std::domain_error);
    CHECK_THROWS_AS(normal_quantile(1.0), std::domain_error);
    // normal quantile sanity
    CHECK(std::fabs(normal_quantile(0.5)) <= 1e-15);
    CHECK(std::fabs(normal_quantile(0.975) - 1.959963984540054) <= 1e-9);
}

TEST_CASE("samplers hit their first two moments") {
    const int N = 200000;
    for (const NoiseKind kind :
         {NoiseKind::Normal01, NoiseKind::VG_1_sqrt2, NoiseKind::Student3_1}) {
        CounterRng rng = CounterRng::for_path(2718, static_cast<int>(kind));
        double mean = 0.0;
        for (int i = 0; i < N; ++i) mean += sample_increment(kind, rng);
        mean /= N;
        CHECK(std::fabs(mean) <= 4.0 / std::sqrt(static_cast<double>(N)));
    }
    // variance band for the finite-kurtosis laws
    for (const NoiseKind kind : {NoiseKind::Normal01, NoiseKind::VG_1_sqrt2}) {
        CounterRng rng = CounterRng::for_path(2719, static_cast<int>(kind));
        double m = 0.0, m2 = 0.0;
        for (int i = 0; i < N; ++i) {
            const double v = sample_increment(kind, rng);
            m += v;
            m2 += v * v;
        }
        m /= N;
        const double var = m2 / N - m * m;
        CHECK(std::fabs(var - 1.0) <= 0.03);
    }
}

TEST_CASE("student KS at moderate depth") {
    const int N = 200000;
    CounterRng rng = CounterRng::for_path(31415, 0);
    std::vector<double> xs(N);
    for (int i = 0; i < N; ++i) xs[i] = sample_increment(NoiseKind::Student3_1, rng);
    std::sort(xs.begin(), xs.end());
    double ks = 0.0;
    for (int i = 0; i < N; ++i) {
        const double F = student3_cdf(xs[i]);
        ks = std::max(ks, std::fabs(F - static_cast<double>(i + 1) / N));
        ks = std::max(ks, std::fabs(F - static_cast<double>(i) / N));
    }
    CHECK(ks <= 1.95 / std::sqrt(static_cast<double>(N)));
}

TEST_CASE("paths are deterministic and honor the force") {
    const ForceSpec free(0.0, std::nullopt);
    const TrajectoryRecord a = ou_path(NoiseKind::VG_1_sqrt2, free, 500, 0.0, 99);
    const TrajectoryRecord b = ou_path(NoiseKind::VG_1_sqrt2, free, 500, 0.0, 99);
    CHECK(a.values == b.values);
    CHECK(a.values.size() == 501);
    CHECK(a.values[0] == 0.0);
    CHECK(TrajectoryRecord::dtau == 1.0);

    // different seeds decorrelate
    const TrajectoryRecord c = ou_path(NoiseKind::VG_1_sqrt2, free, 500, 0.0, 100);
    CHECK(a.values != c.values);

    // force validation
    CHECK_THROWS_AS(ForceSpec(-1.0, std::nullopt), std::domain_error);
    CHECK_THROWS_AS(ForceSpec(0.1, -2.0), std::domain_error);
    CHECK_THROWS_AS(ou_path(NoiseKind::Normal01, free, 0, 0.0, 1), std::domain_error);
}

TEST_CASE("free random walk variance grows linearly") {
    const int paths = 10000, m = 50;
    double s2 = 0.0;
    for (int p = 0; p < paths; ++p) {
        CounterRng rng = CounterRng::for_path(5150, p);
        double y = 0.0;
        for (int i = 0; i < m; ++i) y += sample_increment(NoiseKind::Normal01, rng);
        s2 += y * y;
    }
    s2 /= paths;
    CHECK(std::fabs(s2 / m - 1.0) <= 0.05);
}

TEST_CASE("escape statistics") {
    const EscapeStats never =
        escape_stats(NoiseKind::Normal01, 0.1, 1e9, 300, 300, 11);
    CHECK(never.escape_fraction == 0.0);
    CHECK(std::isnan(never.mean_first_escape));

    const EscapeStats instant =
        escape_stats(NoiseKind::Normal01, 0.1, 1e-12, 300, 300, 11);
    CHECK(instant.escape_fraction == 1.0);
    CHECK(instant.mean_first_escape == 1.0);

    CHECK_THROWS_AS(escape_stats(NoiseKind::Normal01, 0.1, 0.0, 10, 10, 1),
                    std::domain_error);

    // worker count does not change anything
    setenv("LEVY_MIX_THREADS", "1", 1);
    const EscapeStats s1 = escape_stats(NoiseKind::Student3_1, 0.1, 8.0, 400, 400, 3);
    setenv("LEVY_MIX_THREADS", "7", 1);
    const EscapeStats s7 = escape_stats(NoiseKind::Student3_1, 0.1, 8.0, 400, 400, 3);
    unsetenv("LEVY_MIX_THREADS");
    CHECK(s1.escape_fraction == s7.escape_fraction);
    CHECK(s1.mean_first_escape == s7.mean_first_escape);
}

TEST_CASE("student-driven OU escapes a confinement the gaussian one respects") {
    int st = 0, no = 0;
    const double bar = 6.0 * std::sqrt(1.0 / (0.1 * 1.9));
    for (int p = 0; p < 100; ++p) {
        const auto mx = [](const TrajectoryRecord& r) {
            double m = 0.0;
            for (const double v : r.values) m = std::max(m, std::fabs(v));
            return m;
        };
        st += mx(ou_path(NoiseKind::Student3_1, ForceSpec(0.1, std::nullopt), 5000,
                         0.0, 400 + p)) > bar;
        no += mx(ou_path(NoiseKind::Normal01, ForceSpec(0.1, std::nullopt), 5000,
                         0.0, 800 + p)) > bar;
    }
    CHECK(st > no + 10);
}

TEST_CASE("cutoff force records escapes") {
    const ForceSpec bounded(0.1, 2.0);
    const TrajectoryRecord r =
        ou_path(NoiseKind::Student3_1, bounded, 3000, 0.0, 12345);
    CHECK(!r.escapes.empty());
    for (const int m : r.escapes) {
        REQUIRE(m >= 1);
        REQUIRE(m < static_cast<int>(r.values.size()));
        CHECK(std::fabs(r.values[m]) > 2.0);
        CHECK(std::fabs(r.values[m - 1]) <= 2.0);
    }
}
