#pragma once

#include <functional>
#include <limits>
#include <vector>

namespace levymix::quad {

using Fn = std::function<double(double)>;

struct Rule {
    std::vector<double> x;  // nodes on (-1, 1)
    std::vector<double> w;
};

/// Gauss-Legendre rule of order n (supported: 8, 16, 32), cached.
const Rule& gauss_legendre(int n);

/// Single Gauss-Legendre panel on [a, b].
double panel(const Fn& f, double a, double b, int n);

/// Adaptive bisection with a GL8/GL16 error estimate per panel.
double adaptive(const Fn& f, double a, double b, double abs_tol, int max_depth = 30);

/// \int_a^inf f du for smooth decaying f (exponential, or power u^{-p} with
/// p > 1): octave blocks plus Aitken extrapolation of the block series.
double tail_integral(const Fn& f, double a, double abs_tol);

enum class Trig { Cos, Sin };

/// \int_0^inf f(u) trig(x u) du for smooth f decaying to 0 (possibly only
/// algebraically). Head integrated with oscillation-capped adaptive panels up
/// to the first trig zero past head_end, then lobe-by-lobe with iterated
/// averaging of the partial sums (regularizes conditionally convergent tails).
/// For x = 0 the Cos case reduces to adaptive + tail_integral, Sin returns 0.
/// max_panel, when finite, caps the head panel width on top of the
/// half-oscillation rule.
double fourier_semi_infinite(const Fn& f, double x, Trig trig, double head_end,
                             double abs_tol,
                             double max_panel = std::numeric_limits<double>::infinity());

/// \int_from^inf f(u) trig(x u) du, same tail treatment (bridge to the first
/// trig zero, then lobes with iterated averaging). Requires x != 0.
double fourier_tail(const Fn& f, double x, Trig trig, double from, double abs_tol);

}  // namespace levymix::quad
