#pragma once

#include <complex>

namespace levymix {

using Complex = std::complex<double>;

/// K_{n+1/2}(z) for integer n >= 0 through the elementary finite sum
///   K_{n+1/2}(z) = sqrt(pi/2z) e^{-z} sum_{j=0}^{n} (n+j)!/(j!(n-j)!) (2z)^{-j}.
/// Exact up to rounding, no quadrature involved.
double bessel_k_half(int n, double z);

/// Modified Bessel function of the second kind at real order.
/// Evaluates K_nu(z) = (1/2) \int_{-inf}^{inf} e^{nu t - z cosh t} dt by a
/// peak-anchored trapezoidal rule with step halving; uniformly valid in nu.
/// Symmetric in the order: K_nu = K_{-nu}.
double bessel_k(double nu, double z);

/// log K_nu(z); stays finite where K itself would overflow a double.
double log_bessel_k(double nu, double z);

/// Upper incomplete gamma Gamma(a, z) = \int_z^inf e^{-w} w^{a-1} dw for
/// a > 0 and Re z >= 0. Series below |z| = a + 1, modified-Lentz continued
/// fraction above.
Complex upper_gamma_complex(double a, Complex z);

/// e^{z} z^{-a} Gamma(a, z), the prefactored form. Well scaled where the
/// plain Gamma(a, z) would overflow; requires z != 0.
Complex upper_gamma_scaled(double a, Complex z);

/// si(x) = -\int_x^inf sin(t)/t dt  (so si(0) = -pi/2).
double sin_integral(double x);

/// ci(x) = -\int_x^inf cos(t)/t dt; diverges at x = 0.
double cos_integral(double x);

double log_gamma(double x);

/// B(a, b) = exp(lgamma(a) + lgamma(b) - lgamma(a+b)).
double beta(double a, double b);

}  // namespace levymix
