#pragma once

#include <variant>

namespace levymix {

// Parameter records validate at construction and are immutable by convention.

struct VGParams {
    double lambda;  // type index, > 0
    double alpha;   // inverse spatial scale, > 0
    VGParams(double lambda, double alpha);
};

struct StudentParams {
    double nu;     // tail index, > 0
    double delta;  // scale, > 0
    StudentParams(double nu, double delta);
};

struct GHParams {
    double lambda;
    double alpha;  // > 0
    double delta;  // > 0
    GHParams(double lambda, double alpha, double delta);
};

struct NormalParams {
    double sigma;  // > 0
    explicit NormalParams(double sigma);
};

struct CauchyParams {
    double delta;  // > 0
    explicit CauchyParams(double delta);
};

using LawParams =
    std::variant<VGParams, StudentParams, GHParams, NormalParams, CauchyParams>;

double gh_pdf(const GHParams& p, double x);
double gh_chf(const GHParams& p, double u);

/// Symmetric centered density with chf (alpha^2/(alpha^2+u^2))^lambda.
/// Diverges at x = 0 when lambda <= 1/2 (integrable singularity).
double vg_pdf(const VGParams& p, double x);
double vg_chf(const VGParams& p, double u);

/// m(2k) = 2^k (2k-1)!! alpha^{-2k} Gamma(lambda+k)/Gamma(lambda);
/// odd orders are exactly 0 by symmetry.
double vg_moment(const VGParams& p, int order);
double vg_variance(const VGParams& p);

double student_pdf(const StudentParams& p, double x);
double student_chf(const StudentParams& p, double u);

/// Elementary chf of the odd-index laws nu = 2n+1 (delta = 1):
/// e^{-|u|} sum_{l=0}^{n} [n!/(2n)!] [(2n-l)!/(n-l)!] (2|u|)^l / l!.
double student_chf_odd(int n, double u);

/// m(2k) = delta^{2k} B(1/2+k, nu/2-k)/B(1/2, nu/2), defined only for 2k < nu.
double student_moment(const StudentParams& p, int order);
double student_variance(const StudentParams& p);

double normal_pdf(const NormalParams& p, double x);
double normal_chf(const NormalParams& p, double u);
double cauchy_pdf(const CauchyParams& p, double x);
double cauchy_chf(const CauchyParams& p, double u);

double law_pdf(const LawParams& law, double x);
double law_chf(const LawParams& law, double u);
double law_variance(const LawParams& law);

}  // namespace levymix
