#include "levymix/simulate.hpp"

#include <cmath>
#include <stdexcept>

#include "levymix/errors.hpp"
#include "levymix/parallel.hpp"

namespace levymix {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

std::string noise_name(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::Normal01: return "normal";
        case NoiseKind::VG_1_sqrt2: return "vg";
        case NoiseKind::Student3_1: return "student";
    }
    return "?";
}

NoiseKind noise_from_name(const std::string& name) {
    if (name == "normal") return NoiseKind::Normal01;
    if (name == "vg") return NoiseKind::VG_1_sqrt2;
    if (name == "student") return NoiseKind::Student3_1;
    throw std::domain_error("unknown noise kind: " + name);
}

ForceSpec::ForceSpec(double k_, std::optional<double> q_) : k(k_), q(q_) {
    if (k < 0.0) throw std::domain_error("ForceSpec: k must be >= 0");
    if (q && !(*q > 0.0)) throw std::domain_error("ForceSpec: q must be > 0");
}

double ForceSpec::operator()(double y) const {
    if (q && std::fabs(y) > *q) return 0.0;
    return -k * y;
}

std::uint64_t CounterRng::mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

CounterRng CounterRng::for_path(std::uint64_t seed, std::uint64_t path_index) {
    CounterRng r;
    r.key = mix(seed + 0x632BE59BD9B4E019ull * (path_index + 1));
    return r;
}

std::uint64_t CounterRng::next_u64() {
    return mix(key + 0x9E3779B97F4A7C15ull * (++counter));
}

double CounterRng::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("normal_quantile: p must be in (0,1)");
    // Acklam's rational approximation
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double x;
    if (p < plow) {
        const double qq = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * qq + c[1]) * qq + c[2]) * qq + c[3]) * qq + c[4]) * qq + c[5]) /
            ((((d[0] * qq + d[1]) * qq + d[2]) * qq + d[3]) * qq + 1.0);
    } else if (p <= 1.0 - plow) {
        const double qq = p - 0.5;
        const double r = qq * qq;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * qq /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double qq = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * qq + c[1]) * qq + c[2]) * qq + c[3]) * qq + c[4]) * qq + c[5]) /
            ((((d[0] * qq + d[1]) * qq + d[2]) * qq + d[3]) * qq + 1.0);
    }
    // One Newton step on Phi(x) - p with the erfc-based CDF.
    const double cdf = 0.5 * std::erfc(-x / std::sqrt(2.0));
    const double pdf = std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi);
    if (pdf > 0.0) x -= (cdf - p) / pdf;
    return x;
}

double student3_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("student3_quantile: p must be in (0,1)");
    if (p == 0.5) return 0.0;
    if (p < 0.5) return -student3_quantile(1.0 - p);

    const auto cdf = [](double x) {
        return 0.5 + (std::atan(x) + x / (1.0 + x * x)) / kPi;
    };
    const auto pdf = [](double x) {
        const double d = 1.0 + x * x;
        return 2.0 / (kPi * d * d);
    };
    // The Cauchy quantile overshoots (heavier tails), so [0, x0] brackets;
    // deep in the tail the cubic-tail guess is much closer.
    double x0 = std::tan(kPi * (p - 0.5));
    if (p > 0.9) x0 = std::min(x0, std::cbrt(2.0 / (3.0 * kPi * (1.0 - p))) + 1.0);
    double lo = 0.0, hi = x0;
    double x = std::min(x0, 0.5 * (lo + hi) + 0.5 * hi);
    for (int it = 0; it < 80; ++it) {
        const double f = cdf(x) - p;
        if (f > 0.0)
            hi = x;
        else
            lo = x;
        const double dfdx = pdf(x);
        double next = x - f / dfdx;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::fabs(next - x) <= 1e-13 * (1.0 + std::fabs(next))) return next;
        x = next;
    }
    return x;
}

double sample_increment(NoiseKind noise, CounterRng& rng) {
    const double u = rng.uniform01();
    switch (noise) {
        case NoiseKind::Normal01:
            return normal_quantile(u);
        case NoiseKind::VG_1_sqrt2: {
            // Laplace with alpha = sqrt 2 (unit variance)
            const double s = (u < 0.5) ? std::log(2.0 * u) : -std::log(2.0 * (1.0 - u));
            return s / std::sqrt(2.0);
        }
        case NoiseKind::Student3_1:
            return student3_quantile(u);
    }
    throw std::domain_error("sample_increment: bad noise kind");
}

namespace {

// Shared core: runs one path, returning the first step m with |Y_m| > q
// after being inside (0 if never), optionally recording everything.
int run_path(NoiseKind noise, const ForceSpec& force, int steps, double y0,
             CounterRng rng, double q_escape, TrajectoryRecord* record) {
    double y = y0;
    bool inside = std::fabs(y) <= q_escape;
    int first_escape = 0;
    if (record) {
        record->values.reserve(steps + 1);
        record->values.push_back(y);
    }
    for (int m = 1; m <= steps; ++m) {
        const double dx = sample_increment(noise, rng);
        y = y + force(y) * TrajectoryRecord::dtau + dx;
        if (record) record->values.push_back(y);
        if (q_escape > 0.0) {
            const bool out = std::fabs(y) > q_escape;
            if (out && inside) {
                if (first_escape == 0) first_escape = m;
                if (record) record->escapes.push_back(m);
            }
            inside = !out;
        }
    }
    return first_escape;
}

}  // namespace

TrajectoryRecord ou_path(NoiseKind noise, const ForceSpec& force, int steps,
                         double y0, std::uint64_t seed) {
    if (steps < 1) throw std::domain_error("ou_path: steps must be >= 1");
    TrajectoryRecord rec;
    rec.seed = seed;
    rec.noise = noise;
    rec.force = force;
    rec.steps = steps;
    const double q = force.q ? *force.q : 0.0;
    run_path(noise, force, steps, y0, CounterRng::for_path(seed, 0), q, &rec);
    return rec;
}

EscapeStats escape_stats(NoiseKind noise, double k, double q, int n_paths,
                         int steps, std::uint64_t seed) {
    if (!(q > 0.0)) throw std::domain_error("escape_stats: q must be > 0");
    if (n_paths < 1 || steps < 1)
        throw std::domain_error("escape_stats: n_paths and steps must be >= 1");
    const ForceSpec force(k, q);
    std::vector<int> first(n_paths, 0);
    parallel_for(static_cast<std::size_t>(n_paths), [&](std::size_t i) {
        first[i] = run_path(noise, force, steps, 0.0,
                            CounterRng::for_path(seed, i), q, nullptr);
    });
    long escaped = 0;
    long long step_sum = 0;
    for (const int m : first)
        if (m > 0) {
            ++escaped;
            step_sum += m;
        }
    EscapeStats out;
    out.noise = noise;
    out.k = k;
    out.q = q;
    out.n_paths = n_paths;
    out.steps = steps;
    out.seed = seed;
    out.escape_fraction = static_cast<double>(escaped) / n_paths;
    out.mean_first_escape =
        escaped ? static_cast<double>(step_sum) / escaped
                : std::numeric_limits<double>::quiet_NaN();
    return out;
}

}  // namespace levymix
