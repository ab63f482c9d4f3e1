#include "levymix/specfun.hpp"

#include <cmath>
#include <limits>

#include "levymix/errors.hpp"

namespace levymix {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kLogDblMax = 709.0;

// Continued fraction for e^{z} z^{-a} Gamma(a, z), modified Lentz.
// Partial numerators -k(k-a), denominators z + 2k + 1 - a. Valid for
// Re z >= 0 away from the small-|z| region (caller switches to the series).
Complex gamma_cf(double a, Complex z) {
    const double tiny = 1e-280;
    Complex b = z + 1.0 - a;
    Complex c = 1.0 / tiny;
    Complex d = 1.0 / b;
    if (std::abs(b) == 0.0) d = 1.0 / Complex(tiny, 0.0);
    Complex h = d;
    for (int k = 1; k <= 5000; ++k) {
        const double an = -static_cast<double>(k) * (static_cast<double>(k) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const Complex delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) return h;
    }
    throw numeric_error("incomplete gamma continued fraction did not converge");
}

// S = sum_{n>=0} z^n / (a (a+1) ... (a+n)); the lower incomplete gamma is
// gamma(a,z) = z^a e^{-z} S. Terms decrease monotonically for |z| < a+1.
Complex lower_gamma_series(double a, Complex z) {
    Complex term = 1.0 / a;
    Complex sum = term;
    for (int n = 1; n <= 1000000; ++n) {
        term *= z / (a + n);
        sum += term;
        if (std::abs(term) < 1e-17 * (std::abs(sum) + 1e-300)) return sum;
    }
    throw numeric_error("incomplete gamma series did not converge");
}

}  // namespace

double bessel_k_half(int n, double z) {
    if (z <= 0.0) throw std::domain_error("bessel_k_half: z must be > 0");
    if (n < 0) throw std::domain_error("bessel_k_half: n must be >= 0");
    // term ratio: t_{j+1}/t_j = (n+j+1)(n-j) / (2z (j+1))
    double term = 1.0;
    double sum = 1.0;
    for (int j = 0; j < n; ++j) {
        term *= static_cast<double>(n + j + 1) * static_cast<double>(n - j) /
                (2.0 * z * (j + 1));
        sum += term;
    }
    return std::sqrt(kPi / (2.0 * z)) * std::exp(-z) * sum;
}

double log_bessel_k(double nu, double z) {
    if (z <= 0.0) throw std::domain_error("bessel_k: z must be > 0");
    nu = std::fabs(nu);

    // Integrand e^{g(t)} with g(t) = nu t - z cosh t, peaked at asinh(nu/z).
    const double t_peak = std::asinh(nu / z);
    const double g_peak = nu * t_peak - std::hypot(nu, z);
    const auto g = [&](double t) { return nu * t - z * std::cosh(t) - g_peak; };

    auto trapezoid = [&](double h) {
        double s = 1.0;  // j = 0 term, e^{g(t_peak)-g_peak} = 1
        for (int dir = -1; dir <= 1; dir += 2) {
            int idle = 0;
            for (int j = 1; j < 2000000; ++j) {
                const double v = std::exp(g(t_peak + dir * j * h));
                s += v;
                idle = (v < 1e-20) ? idle + 1 : 0;
                if (idle >= 3) break;
            }
        }
        return s * h;
    };

    double h = 0.5;
    double prev = trapezoid(h);
    for (int it = 0; it < 8; ++it) {
        h *= 0.5;
        const double cur = trapezoid(h);
        if (std::fabs(cur - prev) <= 1e-14 * cur) {
            prev = cur;
            break;
        }
        prev = cur;
    }
    return g_peak + std::log(0.5 * prev);
}

double bessel_k(double nu, double z) {
    const double lk = log_bessel_k(nu, z);
    if (lk > kLogDblMax)
        throw numeric_error("bessel_k: result overflows double");
    return std::exp(lk);
}

Complex upper_gamma_scaled(double a, Complex z) {
    if (a <= 0.0) throw std::domain_error("upper_gamma: a must be > 0");
    if (z.real() < 0.0)
        throw std::domain_error("upper_gamma: Re(z) must be >= 0");
    if (std::abs(z) == 0.0)
        throw std::domain_error("upper_gamma_scaled: z must be nonzero");
    if (std::abs(z) >= a + 1.0) return gamma_cf(a, z);
    // e^{z} z^{-a} Gamma(a,z) = e^{z - a log z + lgamma(a)} - S
    const Complex w = z - a * std::log(z) + std::lgamma(a);
    if (w.real() > kLogDblMax)
        throw numeric_error("upper_gamma: scaled value overflows double");
    return std::exp(w) - lower_gamma_series(a, z);
}

Complex upper_gamma_complex(double a, Complex z) {
    if (a <= 0.0) throw std::domain_error("upper_gamma: a must be > 0");
    if (z.real() < 0.0)
        throw std::domain_error("upper_gamma: Re(z) must be >= 0");
    if (std::abs(z) == 0.0) {
        const double lg = std::lgamma(a);
        if (lg > kLogDblMax)
            throw numeric_error("upper_gamma: Gamma(a) overflows double");
        return Complex(std::exp(lg), 0.0);
    }
    const Complex scaled = upper_gamma_scaled(a, z);
    const Complex w = a * std::log(z) - z;
    if (w.real() + std::log(std::abs(scaled) + 1e-300) > kLogDblMax)
        throw numeric_error("upper_gamma: result overflows double");
    return std::exp(w) * scaled;
}

namespace {

// Power series, |x| <= 8:
//   Si(x) = sum (-1)^k x^{2k+1} / ((2k+1)(2k+1)!)
//   Ci(x) = gamma + ln x + sum_{k>=1} (-1)^k x^{2k} / ((2k)(2k)!)
void sici_series(double x, double& si, double& ci) {
    const double x2 = x * x;
    double t = x;  // x^{2k+1}/(2k+1)!
    double s = x;
    for (int k = 1; k <= 60; ++k) {
        t *= -x2 / ((2.0 * k) * (2.0 * k + 1.0));
        const double add = t / (2.0 * k + 1.0);
        s += add;
        if (std::fabs(add) < 1e-18 * std::fabs(s) + 1e-300) break;
    }
    si = s - kPi / 2.0;

    double u = 1.0;  // x^{2k}/(2k)!
    double c = 0.0;
    for (int k = 1; k <= 60; ++k) {
        u *= -x2 / ((2.0 * k - 1.0) * (2.0 * k));
        const double add = u / (2.0 * k);
        c += add;
        if (std::fabs(add) < 1e-18) break;
    }
    ci = kEulerGamma + std::log(x) + c;
}

// Large x through E1(ix) = e^{-ix} * CF, where the continued fraction is the
// a = 0 case of gamma_cf. Then ci(x) = -Re E1(ix), si(x) = Im E1(ix).
void sici_cf(double x, double& si, double& ci) {
    const Complex z(0.0, x);
    Complex b = z + 1.0;
    Complex c = Complex(1e280, 0.0);
    Complex d = 1.0 / b;
    Complex h = d;
    for (int k = 1; k <= 5000; ++k) {
        const double an = -static_cast<double>(k) * static_cast<double>(k);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < 1e-280) d = 1e-280;
        c = b + an / c;
        if (std::abs(c) < 1e-280) c = 1e-280;
        d = 1.0 / d;
        const Complex delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) {
            const Complex e1 = Complex(std::cos(x), -std::sin(x)) * h;
            ci = -e1.real();
            si = e1.imag();
            return;
        }
    }
    throw numeric_error("sine/cosine integral continued fraction did not converge");
}

}  // namespace

double sin_integral(double x) {
    if (x < 0.0) throw std::domain_error("sin_integral: x must be >= 0");
    if (x == 0.0) return -kPi / 2.0;
    double si, ci;
    if (x <= 8.0)
        sici_series(x, si, ci);
    else
        sici_cf(x, si, ci);
    return si;
}

double cos_integral(double x) {
    if (x <= 0.0) throw std::domain_error("cos_integral: x must be > 0");
    double si, ci;
    if (x <= 8.0)
        sici_series(x, si, ci);
    else
        sici_cf(x, si, ci);
    return ci;
}

double log_gamma(double x) {
    if (x <= 0.0) throw std::domain_error("log_gamma: x must be > 0");
    return std::lgamma(x);
}

double beta(double a, double b) {
    if (a <= 0.0 || b <= 0.0) throw std::domain_error("beta: arguments must be > 0");
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

}  // namespace levymix
