#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

namespace levymix {

/// Drift, diffusion coefficient and Levy-measure density (A, B, W).
struct LevyTriplet {
    enum class Kind { ClosedForm, Numeric };
    double A = 0.0;
    double B = 0.0;  // >= 0
    std::function<double(double)> W;
    Kind kind = Kind::ClosedForm;
};

/// VG Levy density in reduced units (T = 1, alpha = 1): lambda e^{-|z|}/|z|.
double w_vg(double z, double lambda);

/// T(3) Levy density: [1 - |z|(sin|z| ci|z| - cos|z| si|z|)] / (pi z^2).
/// Series evaluation below |z| = 1e-3 avoids the 1 - 1 cancellation.
double w_student3(double z);

enum class ReferenceProcess { Wiener, Cauchy };

/// Wiener: (0, a^2/T, W = 0). Cauchy: (0, 0, W(z) = a/(pi T z^2)).
LevyTriplet reference_triplet(ReferenceProcess kind, double a = 1.0, double T = 1.0);

using Chf = std::function<double(double)>;

/// W(z) = (1/2 pi i z) lim_M \int_{-M}^{M} [phi'/phi](u) e^{-iuz} du, with the
/// distributional limit regularized by fitting and subtracting the large-u
/// model p u + c + k/u of -phi'/phi (each part has a closed transform) and
/// integrating the remainder as a real oscillatory sine transform.
double numeric_w(const Chf& chf, const Chf& chf_derivative, double z, double M);

/// Iterated-limit drift. Even chfs short-circuit to exactly 0.
double numeric_a(const Chf& chf, const Chf& chf_derivative, double M,
                 const std::vector<double>& eps_sequence = {0.2, 0.1, 0.05, 0.025});

/// Iterated-limit diffusion coefficient: evaluated over the epsilon sequence
/// with quadratic extrapolation to 0; the fitted model parts are carried
/// analytically (p -> p, c -> c eps, k -> k eps^2 pi/4).
double numeric_b(const Chf& chf, const Chf& chf_derivative, double M,
                 const std::vector<double>& eps_sequence = {0.2, 0.1, 0.05, 0.025});

/// sup over the grid of |log phi(u) - 2 \int_0^inf (cos(uz)-1) W(z) dz| for a
/// pure-jump (B = 0) symmetric triplet.
double levy_khinchin_residual(const LevyTriplet& triplet, const Chf& chf,
                              const std::vector<double>& u_grid);

/// CSV columns `z,w_student3,w_vg` over the grid (VG at the given lambda).
void triplet_csv(std::ostream& os, const std::vector<double>& zs, double lambda);

}  // namespace levymix
