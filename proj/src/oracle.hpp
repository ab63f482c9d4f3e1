// High-accuracy quadrature oracle used only by the verification suites.
// Long-double tanh-sinh panels over the defining integrals; independent of
// the double-precision algorithms it checks (different discretizations,
// different precision).
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace levymix::oracle {

using LD = long double;
using CLD = std::complex<long double>;

inline constexpr LD kPiL = 3.141592653589793238462643383279502884L;

// tanh-sinh on [a, b], levels halved until convergence. Nodes are anchored
// from the nearest endpoint through the stable complement
// 1 - tanh(u) = 2 e^{-2u}/(1 + e^{-2u}), so integrable endpoint
// singularities keep full relative precision in the node position.
template <class F, class R>
R tanh_sinh(F&& f, LD a, LD b, R zero) {
    const LD s = (b - a) / 2;

    const auto add_pair = [&](R& sum, LD t_param) {
        const LD u = (kPiL / 2) * std::sinh(t_param);
        const LD e = std::exp(-2.0L * u);
        const LD delta = 2.0L * e / (1.0L + e);  // = 1 - tanh(u)
        if (delta < 1e-300L) return false;
        const LD w = (kPiL / 2) * std::cosh(t_param) / std::pow(std::cosh(u), 2.0L);
        sum += (f(a + s * delta) + f(b - s * delta)) * w;
        return true;
    };

    R best = zero;
    LD h = 1.0L;
    {
        R sum = f(a + s) * (kPiL / 2);  // j = 0 midpoint
        for (int j = 1; j <= 7; ++j)
            if (!add_pair(sum, j * h)) break;
        best = sum * (s * h);
    }
    R prev = zero;
    for (int level = 1; level <= 10; ++level) {
        h /= 2;
        R sum = zero;
        const int nmax = static_cast<int>(7.0L / h);
        for (int j = 1; j <= nmax; j += 2)  // only new (odd) nodes
            if (!add_pair(sum, j * h)) break;
        prev = best;
        best = best * 0.5L + sum * (s * h);
        if (level >= 3 && std::abs(best - prev) <= 1e-18L * (std::abs(best) + 1e-300L))
            break;
    }
    return best;
}

// K_nu(z) = \int_0^inf e^{-z cosh t} cosh(nu t) dt, evaluated scaled by the
// peak and panelled in t.
inline LD bessel_k_scaled(LD nu, LD z, LD* log_scale) {
    nu = std::fabs(nu);
    const LD tp = std::asinh(nu / z);
    const LD gp = nu * tp - std::sqrt(nu * nu + z * z);
    *log_scale = gp;
    const auto g = [&](LD t) {
        // log of cosh(nu t) e^{-z cosh t}, relative to the peak
        LD lc;
        const LD a = nu * t;
        if (a > 30.0L)
            lc = a - std::log(2.0L);
        else
            lc = std::log(std::cosh(a));
        return lc - z * std::cosh(t) - gp;
    };
    // find cutoff where the integrand is negligible
    LD tmax = tp + 1.0L;
    while (g(tmax) > -80.0L && tmax < 1e4L) tmax += 1.0L;
    LD total = 0.0L;
    LD lo = 0.0L;
    const LD width = std::max((tmax - 0.0L) / 24.0L, 0.25L);
    while (lo < tmax) {
        const LD hi = std::min(tmax, lo + width);
        total += tanh_sinh([&](LD t) { return std::exp(g(t)); }, lo, hi, 0.0L);
        lo = hi;
    }
    return total;
}

inline LD log_bessel_k(LD nu, LD z) {
    LD ls;
    const LD v = bessel_k_scaled(nu, z, &ls);
    return ls + std::log(v);
}

// Gamma(a, z) = \int_0^inf e^{-(z+s)} (z+s)^{a-1} ds along the real ray.
inline CLD upper_gamma(LD a, CLD z) {
    const auto f = [&](LD s) -> CLD {
        const CLD w = z + s;
        return std::exp(-w + (a - 1.0L) * std::log(w));
    };
    // scan for the decay cutoff
    LD smax = 8.0L + 4.0L * a;
    const LD ref = std::abs(f(0.0L)) + std::abs(f(a)) + 1e-300L;
    while (std::abs(f(smax)) > 1e-26L * ref && smax < 1e6L) smax *= 1.5L;
    CLD total(0.0L, 0.0L);
    LD lo = 0.0L;
    const LD width = smax / 40.0L;
    while (lo < smax) {
        const LD hi = std::min(smax, lo + width);
        total += tanh_sinh(f, lo, hi, CLD(0.0L, 0.0L));
        lo = hi;
    }
    return total;
}

// si/ci via alternating half-period lobes plus iterated averaging.
inline LD lobed_trig_tail(bool use_sin, LD x) {
    // \int_x^inf trig(t)/t dt
    const auto f = [&](LD t) { return (use_sin ? std::sin(t) : std::cos(t)) / t; };
    const LD period = kPiL;
    LD first = use_sin ? std::ceil(x / kPiL) * kPiL
                       : (std::ceil(x / kPiL - 0.5L) + 0.5L) * kPiL;
    while (first < x) first += period;
    LD bridge = (first > x) ? tanh_sinh(f, x, first, 0.0L) : 0.0L;
    std::vector<LD> partial;
    LD s = bridge;
    LD lo = first;
    for (int j = 0; j < 96; ++j) {
        const LD hi = lo + period;
        s += tanh_sinh(f, lo, hi, 0.0L);
        partial.push_back(s);
        lo = hi;
    }
    std::vector<LD> v = partial;
    while (v.size() > 1) {
        for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = (v[i] + v[i + 1]) / 2;
        v.pop_back();
    }
    return v.front();
}

inline LD si(LD x) { return -lobed_trig_tail(true, x); }
inline LD ci(LD x) { return -lobed_trig_tail(false, x); }

inline LD beta(LD a, LD b) {
    // two half-range pieces, each singular only at its left endpoint t = 0
    const auto piece = [](LD p, LD q) {
        return tanh_sinh(
            [&](LD t) { return std::pow(t, p - 1.0L) * std::pow(1.0L - t, q - 1.0L); },
            0.0L, 0.5L, 0.0L);
    };
    return piece(a, b) + piece(b, a);
}

}  // namespace levymix::oracle
