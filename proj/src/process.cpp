#include "levymix/process.hpp"

#include <cmath>
#include <limits>

#include "levymix/errors.hpp"
#include "levymix/parallel.hpp"
#include "levymix/quadrature.hpp"
#include "levymix/specfun.hpp"

namespace levymix {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double transition_chf(const ProcessSpec& spec, double u, double dt) {
    if (!(dt > 0.0)) throw std::domain_error("transition_chf: dt must be > 0");
    const double phi = law_chf(spec.law, u);
    const double s = dt / spec.time_scale_T;
    if (phi <= 0.0)
        throw numeric_error("transition_chf: generating chf not positive at u");
    return std::exp(s * std::log(phi));
}

GridFunction invert_chf(const std::function<double(double)>& chf,
                        const std::vector<double>& xs, double truncation_M,
                        int panels, double abs_tol) {
    if (!(truncation_M > 0.0))
        throw std::domain_error("invert_chf: truncation must be > 0");
    if (!(abs_tol > 0.0)) throw std::domain_error("invert_chf: abs_tol must be > 0");
    GridFunction out;
    out.xs = xs;
    out.values.assign(xs.size(), 0.0);
    const double max_panel = (panels > 0) ? truncation_M / panels
                                          : std::numeric_limits<double>::infinity();
    parallel_for(xs.size(), [&](std::size_t i) {
        out.values[i] = quad::fourier_semi_infinite(chf, xs[i], quad::Trig::Cos,
                                                    truncation_M, abs_tol, max_panel) /
                        kPi;
    });
    out.validate();
    return out;
}

double vg_transition_pdf(double lambda, double x, double t) {
    if (!(lambda > 0.0)) throw std::domain_error("vg_transition_pdf: lambda must be > 0");
    if (!(t > 0.0)) throw std::domain_error("vg_transition_pdf: t must be > 0");
    const double lt = lambda * t;
    const double ax = std::fabs(x);
    if (ax == 0.0) {
        if (lt <= 0.5)
            throw std::domain_error(
                "vg_transition_pdf: singular at x = 0 for lambda t <= 1/2");
        return std::exp(std::lgamma(lt - 0.5) - std::lgamma(lt)) /
               (2.0 * std::sqrt(kPi));
    }
    return vg_pdf(VGParams(lt, 1.0), x);
}

SmallXRegime vg_small_x_regime(double lambda, double t) {
    if (!(lambda > 0.0) || !(t > 0.0))
        throw std::domain_error("vg_small_x_regime: lambda and t must be > 0");
    const double lt2 = 2.0 * lambda * t;
    if (lt2 < 1.0) return SmallXRegime::Singular;
    if (lt2 == 1.0) return SmallXRegime::LogSingular;
    return SmallXRegime::Finite;
}

double student3_transition_pdf(double x, double t) {
    if (!(t > 0.0)) throw std::domain_error("student3_transition_pdf: t must be > 0");
    const double ax = std::fabs(x);
    if (t > 150.0) {
        // Gaussian asymptote of the reduced law, floored by the quartic tail.
        const double gauss = std::exp(-ax * ax / (2.0 * t)) / std::sqrt(2.0 * kPi * t);
        if (ax == 0.0) return gauss;
        const double tail = 2.0 * t / (kPi * ax * ax * ax * ax);
        return std::max(gauss, tail);
    }
    const Complex z(t, ax);
    return upper_gamma_scaled(t + 1.0, z).real() / kPi;
}

double student3_tail_coefficient(double t) {
    if (t < 0.0) throw std::domain_error("student3_tail_coefficient: t must be >= 0");
    return 2.0 * t / kPi;
}

double gaussian_limit_distance(double t, const std::vector<double>& u_grid) {
    if (!(t > 0.0)) throw std::domain_error("gaussian_limit_distance: t must be > 0");
    double sup = 0.0;
    for (const double u : u_grid) {
        const double v = std::fabs(u) / std::sqrt(t);
        // [e^{-v}(1+v)]^t computed as exp(t (log1p(v) - v))
        const double powed = std::exp(t * (std::log1p(v) - v));
        const double gauss = std::exp(-0.5 * u * u);
        sup = std::max(sup, std::fabs(powed - gauss));
    }
    return sup;
}

}  // namespace levymix
