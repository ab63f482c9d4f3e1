#pragma once

#include <functional>
#include <vector>

#include "levymix/grid.hpp"
#include "levymix/laws.hpp"

namespace levymix {

/// A Levy process identified by its generating law (the increment law over
/// one time-scale unit T) and the time scale itself.
struct ProcessSpec {
    LawParams law;
    double time_scale_T = 1.0;
};

/// Chf of the increment over dt: [phi(u)]^{dt/T}. Real-valued since all
/// supported laws are symmetric (their chfs are real and positive).
double transition_chf(const ProcessSpec& spec, double u, double dt);

/// Recover a density from a real even chf: (1/pi) \int_0^inf cos(ux) chf(u) du
/// per grid point. truncation_M bounds the directly panelled head; slowly
/// decaying tails are handled by lobe averaging / power extrapolation.
/// panels, when > 0, overrides the head panel hint.
GridFunction invert_chf(const std::function<double(double)>& chf,
                        const std::vector<double>& xs, double truncation_M,
                        int panels = 0, double abs_tol = 1e-9);

/// Transition density of the VG process in reduced units (alpha = 1, T = 1):
///   p(x,t) = 2 / (2^{lt} Gamma(lt) sqrt(2pi)) |x|^{lt-1/2} K_{lt-1/2}(|x|).
/// At x = 0 returns the finite limit Gamma(lt-1/2)/(2 sqrt(pi) Gamma(lt))
/// for lt > 1/2 and reports the singularity otherwise.
double vg_transition_pdf(double lambda, double x, double t);

enum class SmallXRegime { Singular, LogSingular, Finite };

/// Behavior of the VG transition density near the origin:
/// |x|^{2lt-1} for t < 1/(2l), -log|x| at t = 1/(2l), finite beyond.
SmallXRegime vg_small_x_regime(double lambda, double t);

/// Closed-form transition density of the T(3) Student process,
///   p(x,t) = Re{ e^{t+ix} Gamma(t+1, t+ix) / (pi (t+ix)^{t+1}) },
/// evaluated through the prefactored incomplete gamma. Beyond t = 150 falls
/// back to the Gaussian asymptote floored by the quartic tail.
double student3_transition_pdf(double x, double t);

/// x^4 p(x,t|3) -> 2t/pi as |x| -> inf; returns that limit.
double student3_tail_coefficient(double t);

/// sup over the grid of |[phi(u/sqrt(t)|3)]^t - e^{-u^2/2}|.
double gaussian_limit_distance(double t, const std::vector<double>& u_grid);

}  // namespace levymix
