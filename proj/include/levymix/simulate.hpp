#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace levymix {

/// The three unit-variance increment laws used by the path engine.
enum class NoiseKind { Normal01, VG_1_sqrt2, Student3_1 };

std::string noise_name(NoiseKind kind);
NoiseKind noise_from_name(const std::string& name);

/// Restoring force -k y, optionally cut off outside [-q, q].
struct ForceSpec {
    double k = 0.0;                 // >= 0
    std::optional<double> q = {};   // > 0 when present
    ForceSpec() = default;
    ForceSpec(double k, std::optional<double> q);
    double operator()(double y) const;
};

/// Counter-based splittable generator: value i of a stream is a bijective
/// 64-bit mix of key + i * odd-constant, so any draw is addressable and
/// per-path streams never overlap by construction.
struct CounterRng {
    std::uint64_t key = 0;
    std::uint64_t counter = 0;

    static std::uint64_t mix(std::uint64_t z);
    static CounterRng for_path(std::uint64_t seed, std::uint64_t path_index);

    std::uint64_t next_u64();
    double uniform01();  // open interval (0, 1)
};

/// Inverse standard normal CDF (rational approximation plus one erfc-based
/// Newton polish, ~1e-15).
double normal_quantile(double p);

/// Inverse CDF of T(3,1): F(x) = 1/2 + (atan x + x/(1+x^2))/pi, solved by
/// safeguarded Newton from a Cauchy-quantile start.
double student3_quantile(double p);

/// One draw from N(0,1), Laplace(sqrt 2) = VG(1, sqrt 2), or T(3,1); consumes
/// exactly one uniform.
double sample_increment(NoiseKind noise, CounterRng& rng);

/// A simulated path; increments are sampled at the fixed step dtau = 1 (the
/// unit-variance laws are increment laws over exactly one time-scale unit, so
/// the engine has no fractional-step mode).
struct TrajectoryRecord {
    std::uint64_t seed = 0;
    NoiseKind noise = NoiseKind::Normal01;
    ForceSpec force;
    int steps = 0;
    static constexpr double dtau = 1.0;
    std::vector<double> values;  // length steps + 1, values[0] = y0
    std::vector<int> escapes;    // first steps beyond |y| > q after being inside
};

/// Euler scheme Y_{m+1} = Y_m + force(Y_m) + dX_m; deterministic given seed.
TrajectoryRecord ou_path(NoiseKind noise, const ForceSpec& force, int steps,
                         double y0, std::uint64_t seed);

struct EscapeStats {
    NoiseKind noise;
    double k = 0.0;
    double q = 0.0;
    int n_paths = 0;
    int steps = 0;
    std::uint64_t seed = 0;
    double escape_fraction = 0.0;
    double mean_first_escape = 0.0;  // NaN when no path escapes
};

/// Fraction of paths (started at 0) that ever leave [-q, q], and the mean
/// first-escape step among escapers. Paths run in parallel on derived
/// streams; aggregation is integer-based, so results are identical for any
/// worker count.
EscapeStats escape_stats(NoiseKind noise, double k, double q, int n_paths,
                         int steps, std::uint64_t seed);

}  // namespace levymix
