#include "levymix/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "levymix/errors.hpp"

namespace levymix::quad {

namespace {

constexpr double kPi = 3.14159265358979323846;

Rule make_rule(int n) {
    // Newton iteration on Legendre P_n from the Chebyshev initial guess.
    Rule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double p0 = 0.0, p1 = 0.0;
        for (int it = 0; it < 100; ++it) {
            p0 = 1.0;
            p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        p0 = 1.0;
        p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        const double dp = n * (x * p1 - p0) / (x * x - 1.0);
        r.x[i] = -x;
        r.x[n - 1 - i] = x;
        r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

}  // namespace

const Rule& gauss_legendre(int n) {
    static const Rule r8 = make_rule(8);
    static const Rule r16 = make_rule(16);
    static const Rule r32 = make_rule(32);
    switch (n) {
        case 8: return r8;
        case 16: return r16;
        case 32: return r32;
        default: throw std::domain_error("gauss_legendre: unsupported order");
    }
}

double panel(const Fn& f, double a, double b, int n) {
    const Rule& r = gauss_legendre(n);
    const double mid = 0.5 * (a + b);
    const double hal = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += r.w[i] * f(mid + hal * r.x[i]);
    return s * hal;
}

namespace {

// Leaves accumulate their error estimates; the caller checks the total
// against the requested budget, so isolated hard spots (integrable cusps)
// only fail the integral when they genuinely exhaust it.
double adaptive_impl(const Fn& f, double a, double b, double tol, int depth,
                     double* err_sum) {
    const double coarse = panel(f, a, b, 8);
    const double fine = panel(f, a, b, 16);
    const double err = std::fabs(fine - coarse);
    if (err <= tol || depth <= 0 || b - a < 1e-14 * (std::fabs(a) + 1.0)) {
        *err_sum += err;
        return fine;
    }
    const double mid = 0.5 * (a + b);
    return adaptive_impl(f, a, mid, tol * 0.5, depth - 1, err_sum) +
           adaptive_impl(f, mid, b, tol * 0.5, depth - 1, err_sum);
}

}  // namespace

double adaptive(const Fn& f, double a, double b, double abs_tol, int max_depth) {
    if (!(b > a)) return 0.0;
    double err_sum = 0.0;
    const double result = adaptive_impl(f, a, b, abs_tol, max_depth, &err_sum);
    if (err_sum > 4.0 * abs_tol)
        throw numeric_error("adaptive quadrature: error estimate " +
                            std::to_string(err_sum) + " exceeds tolerance " +
                            std::to_string(abs_tol));
    return result;
}

double tail_integral(const Fn& f, double a, double abs_tol) {
    if (a <= 0.0) throw std::domain_error("tail_integral: a must be > 0");
    double total = 0.0;
    double prev_block = 0.0;
    double prev_extrap = 0.0;
    bool have_prev = false;
    double lo = a;
    for (int j = 0; j < 60; ++j) {
        const double hi = lo * 2.0;
        const double block = adaptive(f, lo, hi, abs_tol / 16.0);
        total += block;
        if (std::fabs(block) < 0.05 * abs_tol) return total;
        if (have_prev && prev_block != 0.0) {
            const double q = block / prev_block;
            if (q > 0.0 && q < 0.985) {
                const double extrap = total + block * q / (1.0 - q);
                if (j > 2 && std::fabs(extrap - prev_extrap) < 0.2 * abs_tol)
                    return extrap;
                prev_extrap = extrap;
            }
        }
        prev_block = block;
        have_prev = true;
        lo = hi;
    }
    throw numeric_error("tail_integral: tail did not converge by u = " +
                        std::to_string(lo));
}

namespace {

// Integrate f*trig over [a, b] with panels capped at a half oscillation.
double smooth_range(const Fn& g, double a, double b, double half_period,
                    double abs_tol, double max_panel) {
    if (!(b > a)) return 0.0;
    const double cap = std::min(0.5 * half_period, max_panel);
    const double n_est = std::max(8.0, std::ceil((b - a) / cap));
    if (n_est > 4000000) throw numeric_error("fourier head: too many panels");
    const double tol_panel = abs_tol / (2.0 * n_est);
    double total = 0.0;
    double lo = a;
    while (lo < b) {
        const double hi = std::min(b, lo + cap);
        total += adaptive(g, lo, hi, tol_panel);
        lo = hi;
    }
    return total;
}

}  // namespace

namespace {

Fn make_osc(const Fn& f, double x, Trig trig) {
    if (trig == Trig::Cos)
        return [&f, x](double u) { return f(u) * std::cos(x * u); };
    return [&f, x](double u) { return f(u) * std::sin(x * u); };
}

// First zero of trig(x u) at or beyond `from` (x > 0).
double first_zero(double x, Trig trig, double from) {
    const double half = kPi / x;
    double u0;
    if (trig == Trig::Cos) {
        const double m = std::ceil(from * x / kPi - 0.5);
        u0 = (std::max(m, 0.0) + 0.5) * half;
    } else {
        const double m = std::ceil(from * x / kPi);
        u0 = std::max(m, 1.0) * half;
    }
    while (u0 < from) u0 += half;
    return u0;
}

}  // namespace

double fourier_tail(const Fn& f, double x, Trig trig, double from, double abs_tol) {
    double sign = 1.0;
    if (x < 0.0) {
        x = -x;
        if (trig == Trig::Sin) sign = -1.0;
    }
    if (x == 0.0) throw std::domain_error("fourier_tail: x must be nonzero");
    const double half = kPi / x;
    const Fn g = make_osc(f, x, trig);
    const double u0 = first_zero(x, trig, from);
    double result = smooth_range(g, from, u0, half, abs_tol,
                                 std::numeric_limits<double>::infinity());

    // For eventually monotone decaying f the lobes alternate, so the whole
    // remaining tail is bounded by the first lobe.
    const double probe =
        std::max(std::fabs(f(u0 + 0.123 * half)), std::fabs(f(2.0 * u0 + 0.37 * half)));
    if (probe * half < 0.02 * abs_tol) return sign * result;

    const int max_lobes = 64;
    std::vector<double> partial;
    partial.reserve(max_lobes);
    double s = result;
    double lo = u0;
    for (int j = 0; j < max_lobes; ++j) {
        const double hi = lo + half;
        const double lobe = panel(g, lo, hi, 16);
        s += lobe;
        partial.push_back(s);
        lo = hi;
        if (std::fabs(lobe) < 0.01 * abs_tol && j >= 3) return sign * s;
    }
    // Iterated averaging of the partial sums.
    std::vector<double> v = partial;
    double est = v.back();
    double change = std::fabs(est - v.front());
    while (v.size() > 1) {
        for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = 0.5 * (v[i] + v[i + 1]);
        v.pop_back();
        change = std::fabs(v.front() - est);
        est = v.front();
        if (v.size() < partial.size() / 2 && change < 0.05 * abs_tol) break;
    }
    if (change > abs_tol)
        throw numeric_error("fourier tail averaging stalled at estimate change " +
                            std::to_string(change));
    return sign * est;
}

double fourier_semi_infinite(const Fn& f, double x, Trig trig, double head_end,
                             double abs_tol, double max_panel) {
    if (trig == Trig::Sin && x == 0.0) return 0.0;
    double sign = 1.0;
    if (x < 0.0) {
        x = -x;
        if (trig == Trig::Sin) sign = -1.0;
    }
    if (x == 0.0) {
        double head = adaptive(f, 0.0, head_end, abs_tol / 4.0);
        return head + tail_integral(f, head_end, abs_tol / 4.0);
    }
    const double half = kPi / x;
    const Fn g = make_osc(f, x, trig);
    const double head = smooth_range(g, 0.0, head_end, half, abs_tol / 2.0, max_panel);
    return sign * (head + fourier_tail(f, x, trig, head_end, abs_tol / 2.0));
}

}  // namespace levymix::quad
