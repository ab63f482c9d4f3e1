#include "levymix/triplet.hpp"

#include <cmath>
#include <ostream>

#include "levymix/emit.hpp"
#include "levymix/errors.hpp"
#include "levymix/quadrature.hpp"
#include "levymix/specfun.hpp"

namespace levymix {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Large-u model of r(u) = -phi'(u)/phi(u):  r ~ p u + c + k/u + m/u^2.
// p from a wide difference, then (c, k, m) by a quadratic fit in 1/u.
struct TailModel {
    double p = 0.0, c = 0.0, k = 0.0, m = 0.0;
};

double log_derivative_ratio(const Chf& chf, const Chf& chfd, double u) {
    const double phi = chf(u);
    if (phi == 0.0) throw numeric_error("triplet: chf vanished at u");
    return -chfd(u) / phi;
}

TailModel fit_tail(const Chf& chf, const Chf& chfd, double M) {
    const double u1 = 0.25 * M, u2 = 0.5 * M, u3 = M;
    const double r1 = log_derivative_ratio(chf, chfd, u1);
    const double r2 = log_derivative_ratio(chf, chfd, u2);
    const double r3 = log_derivative_ratio(chf, chfd, u3);
    TailModel tm;
    // A linear term in r means a Brownian component: r doubles per octave.
    // Bounded or decaying r gets p = 0 exactly; a finite-difference slope
    // would leave a tiny growing residual that defeats the lobe averaging.
    if (std::fabs(r3) > 1.5 * std::fabs(r2)) tm.p = (r3 - r2) / (u3 - u2);
    const double h1 = r1 - tm.p * u1;
    const double h2 = r2 - tm.p * u2;
    const double h3 = r3 - tm.p * u3;
    // h(w) = c + k w + m w^2 at w = 1/u; value and slope at w = 0 by Lagrange.
    const double w1 = 1.0 / u1, w2 = 1.0 / u2, w3 = 1.0 / u3;
    const double d1 = (w1 - w2) * (w1 - w3);
    const double d2 = (w2 - w1) * (w2 - w3);
    const double d3 = (w3 - w1) * (w3 - w2);
    tm.c = h1 * w2 * w3 / d1 + h2 * w1 * w3 / d2 + h3 * w1 * w2 / d3;
    tm.k = -h1 * (w2 + w3) / d1 - h2 * (w1 + w3) / d2 - h3 * (w1 + w2) / d3;
    tm.m = h1 / d1 + h2 / d2 + h3 / d3;
    return tm;
}

double remainder_r(const Chf& chf, const Chf& chfd, const TailModel& tm, double u) {
    // Where the chf has underflowed (or gone denormal) the ratio is garbage;
    // continue smoothly with the fitted next-order term instead.
    const double phi = chf(u);
    if (!(phi > 2.3e-308) && !(phi < -2.3e-308)) return tm.m / (u * u);
    return -chfd(u) / phi - tm.p * u - tm.c - tm.k / u;
}

bool chf_is_even(const Chf& chf) {
    for (const double u : {0.37, 1.3, 2.7, 5.1})
        if (std::fabs(chf(u) - chf(-u)) > 1e-13 * (1.0 + std::fabs(chf(u))))
            return false;
    return true;
}

}  // namespace

double w_vg(double z, double lambda) {
    if (z == 0.0) throw std::domain_error("w_vg: z must be nonzero");
    if (!(lambda > 0.0)) throw std::domain_error("w_vg: lambda must be > 0");
    const double az = std::fabs(z);
    return lambda * std::exp(-az) / az;
}

double w_student3(double z) {
    if (z == 0.0) throw std::domain_error("w_student3: z must be nonzero");
    const double az = std::fabs(z);
    if (az >= 60.0) {
        // numerator 1 - z f(z) with f ~ sum (-1)^k (2k)! z^{-2k-1}; the direct
        // form loses ~z^2 ulps to cancellation out here
        const double z2 = az * az;
        double term = 2.0 / z2;
        double num = term;
        for (int k = 2; k <= 40; ++k) {
            term *= -(2.0 * k) * (2.0 * k - 1.0) / z2;
            num += term;
            if (std::fabs(term) < 1e-17 * std::fabs(num)) break;
        }
        return num / (kPi * z2);
    }
    if (az < 1e-3) {
        // numerator series: 1 - (pi/2) z + z^2 (1 - g - ln z) + (pi/4) z^3
        //                    - z^4 (11/36 - (g + ln z)/6) + O(z^6 ln z)
        const double gl = kEulerGamma + std::log(az);
        const double z2 = az * az;
        const double num = 1.0 - 0.5 * kPi * az + z2 * (1.0 - gl) +
                           0.25 * kPi * z2 * az - z2 * z2 * (11.0 / 36.0 - gl / 6.0);
        return num / (kPi * z2);
    }
    const double si = sin_integral(az);
    const double ci = cos_integral(az);
    const double num = 1.0 - az * (std::sin(az) * ci - std::cos(az) * si);
    return num / (kPi * az * az);
}

LevyTriplet reference_triplet(ReferenceProcess kind, double a, double T) {
    if (!(a > 0.0) || !(T > 0.0))
        throw std::domain_error("reference_triplet: a and T must be > 0");
    LevyTriplet t;
    t.kind = LevyTriplet::Kind::ClosedForm;
    if (kind == ReferenceProcess::Wiener) {
        t.B = a * a / T;
        t.W = [](double) { return 0.0; };
    } else {
        t.W = [a, T](double z) {
            if (z == 0.0) throw std::domain_error("W: z must be nonzero");
            return a / (kPi * T * z * z);
        };
    }
    return t;
}

double numeric_w(const Chf& chf, const Chf& chfd, double z, double M) {
    if (z == 0.0) throw std::domain_error("numeric_w: z must be nonzero");
    if (!(M > 8.0)) throw std::domain_error("numeric_w: M must exceed 8");
    const double az = std::fabs(z);
    const TailModel tm = fit_tail(chf, chfd, M);
    // W(z) = (1/pi z)[ c/z + k pi/2 + \int_0^inf rho(u) sin(uz) du ]:
    // the p u part transforms to 0, the constant to c/z, k/u to k pi/2.
    const auto rho = [&](double u) {
        if (u <= 0.0) return 0.0;
        return remainder_r(chf, chfd, tm, u);
    };
    const double osc = quad::fourier_semi_infinite(rho, az, quad::Trig::Sin, M, 1e-9);
    return (tm.c / az + 0.5 * kPi * tm.k + osc) / (kPi * az);
}

double numeric_a(const Chf& chf, const Chf& chfd, double M,
                 const std::vector<double>& eps_sequence) {
    (void)chfd;
    (void)M;
    (void)eps_sequence;
    // Odd phi'/phi against the even kernel sin(u eps)/u integrates to zero.
    if (chf_is_even(chf)) return 0.0;
    throw numeric_error("numeric_a: only symmetric (even) chfs are supported");
}

double numeric_b(const Chf& chf, const Chf& chfd, double M,
                 const std::vector<double>& eps_sequence) {
    if (eps_sequence.size() < 3)
        throw std::domain_error("numeric_b: need at least three epsilon values");
    if (!(M > 8.0)) throw std::domain_error("numeric_b: M must exceed 8");
    const TailModel tm = fit_tail(chf, chfd, M);

    const auto b_of_eps = [&](double eps) {
        const auto integrand = [&](double u) {
            if (u <= 0.0) return 0.0;
            const double x = u * eps;
            const double kern = (std::sin(x) - x * std::cos(x)) / (u * u);
            return remainder_r(chf, chfd, tm, u) * kern;
        };
        // remainder decays like u^{-2}, kernel adds u^{-1}: finite truncation
        const double hi = std::max(M, 40.0 / eps);
        const double cap = kPi / eps;
        double head = 0.0;
        double lo = 0.0;
        while (lo < hi) {
            const double width = std::min(cap, std::max(1.0, 0.5 * lo));
            const double next = std::min(hi, lo + width);
            head += quad::adaptive(integrand, lo, next, 1e-12);
            lo = next;
        }
        return (2.0 / kPi) *
               (0.5 * kPi * tm.p + tm.c * eps + 0.25 * kPi * tm.k * eps * eps + head);
    };

    // quadratic fit through three (eps, B(eps)) points, value at eps = 0
    const auto quad0 = [](double e1, double e2, double e3, double b1, double b2,
                          double b3) {
        return b1 * e2 * e3 / ((e1 - e2) * (e1 - e3)) +
               b2 * e1 * e3 / ((e2 - e1) * (e2 - e3)) +
               b3 * e1 * e2 / ((e3 - e1) * (e3 - e2));
    };
    std::vector<double> bs(eps_sequence.size());
    for (std::size_t i = 0; i < eps_sequence.size(); ++i)
        bs[i] = b_of_eps(eps_sequence[i]);
    const std::size_t n = eps_sequence.size();
    const double q_last = quad0(eps_sequence[n - 3], eps_sequence[n - 2],
                                eps_sequence[n - 1], bs[n - 3], bs[n - 2], bs[n - 1]);
    if (n >= 4) {
        const double q_prev = quad0(eps_sequence[n - 4], eps_sequence[n - 3],
                                    eps_sequence[n - 2], bs[n - 4], bs[n - 3],
                                    bs[n - 2]);
        if (std::fabs(q_last - q_prev) > std::max(1e-3, 0.05 * std::fabs(q_last)))
            throw numeric_error("numeric_b: epsilon extrapolation unstable (" +
                                std::to_string(q_prev) + " vs " +
                                std::to_string(q_last) + ")");
    }
    return q_last;
}

double levy_khinchin_residual(const LevyTriplet& triplet, const Chf& chf,
                              const std::vector<double>& u_grid) {
    if (triplet.B != 0.0)
        throw std::domain_error("levy_khinchin_residual: pure-jump triplet required");
    const double z_split = 60.0;
    double sup = 0.0;
    for (const double u : u_grid) {
        const double phi = chf(u);
        if (!(phi > 0.0))
            throw numeric_error("levy_khinchin_residual: chf must be positive");
        const double lhs = std::log(phi);
        const double au = std::fabs(u);
        if (au == 0.0) {
            sup = std::max(sup, std::fabs(lhs));  // integrand vanishes identically
            continue;
        }

        // \int_0^inf (cos(uz)-1) W(z) dz, with cos(uz)-1 = -2 sin^2(uz/2)
        // near the z^{-2}-type singularity at the origin.
        const auto near = [&](double zz) {
            const double s = std::sin(0.5 * au * zz);
            return -2.0 * s * s * triplet.W(zz);
        };
        double total = quad::adaptive(near, 0.0, 1.0, 1e-11);
        {
            const double cap = (au > 0.0) ? std::min(kPi / au, 4.0) : 4.0;
            double lo = 1.0;
            while (lo < z_split) {
                const double hi = std::min(z_split, lo + cap);
                total += quad::adaptive(near, lo, hi, 1e-12);
                lo = hi;
            }
        }
        // beyond the split: \int cos(uz) W dz - \int W dz
        const double plain =
            quad::tail_integral([&](double zz) { return triplet.W(zz); }, z_split,
                                1e-10);
        double osc = 0.0;
        if (au > 0.0)
            osc = quad::fourier_tail([&](double zz) { return triplet.W(zz); }, au,
                                     quad::Trig::Cos, z_split, 1e-10);
        total += osc - plain;

        sup = std::max(sup, std::fabs(lhs - 2.0 * total));
    }
    return sup;
}

void triplet_csv(std::ostream& os, const std::vector<double>& zs, double lambda) {
    os << "z,w_student3,w_vg\n";
    for (const double z : zs)
        os << emit::g17(z) << ',' << emit::g17(w_student3(z)) << ','
           << emit::g17(w_vg(z, lambda)) << '\n';
}

}  // namespace levymix
