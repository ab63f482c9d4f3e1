#include "levymix/laws.hpp"

#include <cmath>

#include "levymix/errors.hpp"
#include "levymix/specfun.hpp"

namespace levymix {

namespace {
constexpr double kPi = 3.14159265358979323846;

// Orders within rounding distance of a half integer go through the
// elementary finite sum; everything else through the quadrature kernel.
double bessel_k_any(double nu, double z) {
    nu = std::fabs(nu);
    const double half_index = nu - 0.5;
    const double n = std::round(half_index);
    if (n >= 0.0 && std::fabs(half_index - n) < 1e-13)
        return bessel_k_half(static_cast<int>(n), z);
    return bessel_k(nu, z);
}

double log_bessel_k_any(double nu, double z) {
    nu = std::fabs(nu);
    const double half_index = nu - 0.5;
    const double n = std::round(half_index);
    if (n >= 0.0 && std::fabs(half_index - n) < 1e-13) {
        const double v = bessel_k_half(static_cast<int>(n), z);
        if (std::isfinite(v) && v > 0.0) return std::log(v);
    }
    return log_bessel_k(nu, z);
}
}  // namespace

VGParams::VGParams(double lambda_, double alpha_) : lambda(lambda_), alpha(alpha_) {
    if (!(lambda > 0.0)) throw std::domain_error("VGParams: lambda must be > 0");
    if (!(alpha > 0.0)) throw std::domain_error("VGParams: alpha must be > 0");
}

StudentParams::StudentParams(double nu_, double delta_) : nu(nu_), delta(delta_) {
    if (!(nu > 0.0)) throw std::domain_error("StudentParams: nu must be > 0");
    if (!(delta > 0.0)) throw std::domain_error("StudentParams: delta must be > 0");
}

GHParams::GHParams(double lambda_, double alpha_, double delta_)
    : lambda(lambda_), alpha(alpha_), delta(delta_) {
    if (!(alpha > 0.0)) throw std::domain_error("GHParams: alpha must be > 0");
    if (!(delta > 0.0)) throw std::domain_error("GHParams: delta must be > 0");
}

NormalParams::NormalParams(double sigma_) : sigma(sigma_) {
    if (!(sigma > 0.0)) throw std::domain_error("NormalParams: sigma must be > 0");
}

CauchyParams::CauchyParams(double delta_) : delta(delta_) {
    if (!(delta > 0.0)) throw std::domain_error("CauchyParams: delta must be > 0");
}

double gh_pdf(const GHParams& p, double x) {
    const double q = p.alpha * std::sqrt(p.delta * p.delta + x * x);
    // log-space: alpha / ((delta alpha)^l K_l(delta alpha) sqrt(2pi)) * q^{l-1/2} K_{l-1/2}(q)
    const double da = p.delta * p.alpha;
    const double lg = std::log(p.alpha) - p.lambda * std::log(da) -
                      log_bessel_k_any(p.lambda, da) - 0.5 * std::log(2.0 * kPi) +
                      (p.lambda - 0.5) * std::log(q) +
                      log_bessel_k_any(p.lambda - 0.5, q);
    return std::exp(lg);
}

double gh_chf(const GHParams& p, double u) {
    if (u == 0.0) return 1.0;
    const double da = p.delta * p.alpha;
    const double s = p.delta * std::sqrt(p.alpha * p.alpha + u * u);
    const double lg = p.lambda * std::log(da) - log_bessel_k_any(p.lambda, da) +
                      log_bessel_k_any(p.lambda, s) - p.lambda * std::log(s);
    return std::exp(lg);
}

double vg_pdf(const VGParams& p, double x) {
    const double ax = p.alpha * std::fabs(x);
    if (ax == 0.0) {
        if (p.lambda <= 0.5)
            throw std::domain_error("vg_pdf: singular at x = 0 for lambda <= 1/2");
        // limit of z^{l-1/2} K_{l-1/2}(z) as z -> 0
        return p.alpha * std::exp(std::lgamma(p.lambda - 0.5) - std::lgamma(p.lambda)) /
               (2.0 * std::sqrt(kPi));
    }
    const double lg = std::log(2.0 * p.alpha) - p.lambda * std::log(2.0) -
                      std::lgamma(p.lambda) - 0.5 * std::log(2.0 * kPi) +
                      (p.lambda - 0.5) * std::log(ax) +
                      log_bessel_k_any(p.lambda - 0.5, ax);
    return std::exp(lg);
}

double vg_chf(const VGParams& p, double u) {
    const double a2 = p.alpha * p.alpha;
    return std::pow(a2 / (a2 + u * u), p.lambda);
}

double vg_moment(const VGParams& p, int order) {
    if (order < 0) throw std::domain_error("vg_moment: order must be >= 0");
    if (order % 2 == 1) return 0.0;
    const int k = order / 2;
    double dfact = 1.0;  // (2k-1)!!
    for (int j = 3; j <= 2 * k - 1; j += 2) dfact *= j;
    return std::pow(2.0, k) * dfact * std::pow(p.alpha, -2.0 * k) *
           std::exp(std::lgamma(p.lambda + k) - std::lgamma(p.lambda));
}

double vg_variance(const VGParams& p) { return 2.0 * p.lambda / (p.alpha * p.alpha); }

double student_pdf(const StudentParams& p, double x) {
    const double r = p.delta * p.delta / (p.delta * p.delta + x * x);
    return std::pow(r, 0.5 * (p.nu + 1.0)) / (p.delta * beta(0.5, 0.5 * p.nu));
}

double student_chf(const StudentParams& p, double u) {
    const double x = p.delta * std::fabs(u);
    if (x < 1e-8) return 1.0;
    const double n2 = std::round(p.nu);
    if (std::fabs(p.nu - n2) < 1e-12 && static_cast<long>(n2) % 2 == 1)
        return student_chf_odd(static_cast<int>((n2 - 1) / 2), x);
    const double h = 0.5 * p.nu;
    return std::exp(std::log(2.0) + h * std::log(x) + log_bessel_k_any(h, x) -
                    h * std::log(2.0) - std::lgamma(h));
}

double student_chf_odd(int n, double u) {
    if (n < 0) throw std::domain_error("student_chf_odd: n must be >= 0");
    const double au = std::fabs(u);
    double coeff = 1.0;  // [n!/(2n)!] (2n-l)!/(n-l)! / l! at l = 0 equals 1
    double poly = 1.0;
    double pw = 1.0;
    for (int l = 1; l <= n; ++l) {
        // ratio of successive coefficients: (n-l+1) / ((2n-l+1) l)
        coeff *= static_cast<double>(n - l + 1) /
                 (static_cast<double>(2 * n - l + 1) * static_cast<double>(l));
        pw *= 2.0 * au;
        poly += coeff * pw;
    }
    return std::exp(-au) * poly;
}

double student_moment(const StudentParams& p, int order) {
    if (order < 0) throw std::domain_error("student_moment: order must be >= 0");
    if (order % 2 == 1) return 0.0;
    if (order >= p.nu)
        throw std::domain_error("student_moment: moment of order " +
                                std::to_string(order) + " does not exist for nu = " +
                                std::to_string(p.nu));
    const int k = order / 2;
    return std::pow(p.delta, order) * beta(0.5 + k, 0.5 * p.nu - k) /
           beta(0.5, 0.5 * p.nu);
}

double student_variance(const StudentParams& p) {
    if (p.nu <= 2.0)
        throw std::domain_error("student_variance: undefined for nu <= 2");
    return p.delta * p.delta / (p.nu - 2.0);
}

double normal_pdf(const NormalParams& p, double x) {
    const double z = x / p.sigma;
    return std::exp(-0.5 * z * z) / (p.sigma * std::sqrt(2.0 * kPi));
}

double normal_chf(const NormalParams& p, double u) {
    return std::exp(-0.5 * p.sigma * p.sigma * u * u);
}

double cauchy_pdf(const CauchyParams& p, double x) {
    return p.delta / (kPi * (p.delta * p.delta + x * x));
}

double cauchy_chf(const CauchyParams& p, double u) {
    return std::exp(-p.delta * std::fabs(u));
}

double law_pdf(const LawParams& law, double x) {
    return std::visit(
        [x](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, VGParams>) return vg_pdf(p, x);
            else if constexpr (std::is_same_v<T, StudentParams>) return student_pdf(p, x);
            else if constexpr (std::is_same_v<T, GHParams>) return gh_pdf(p, x);
            else if constexpr (std::is_same_v<T, NormalParams>) return normal_pdf(p, x);
            else return cauchy_pdf(p, x);
        },
        law);
}

double law_chf(const LawParams& law, double u) {
    return std::visit(
        [u](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, VGParams>) return vg_chf(p, u);
            else if constexpr (std::is_same_v<T, StudentParams>) return student_chf(p, u);
            else if constexpr (std::is_same_v<T, GHParams>) return gh_chf(p, u);
            else if constexpr (std::is_same_v<T, NormalParams>) return normal_chf(p, u);
            else return cauchy_chf(p, u);
        },
        law);
}

double law_variance(const LawParams& law) {
    return std::visit(
        [](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, VGParams>) return vg_variance(p);
            else if constexpr (std::is_same_v<T, StudentParams>) return student_variance(p);
            else if constexpr (std::is_same_v<T, NormalParams>) return p.sigma * p.sigma;
            else
                throw std::domain_error("law_variance: undefined for this family");
        },
        law);
}

}  // namespace levymix
