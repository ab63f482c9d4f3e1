#include "levymix/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>

#include "levymix/emit.hpp"
#include "levymix/errors.hpp"
#include "levymix/grid.hpp"
#include "levymix/laws.hpp"
#include "levymix/mixture.hpp"
#include "levymix/process.hpp"
#include "levymix/quadrature.hpp"
#include "levymix/simulate.hpp"
#include "levymix/specfun.hpp"
#include "levymix/triplet.hpp"
#include "oracle.hpp"

namespace levymix::verify {

namespace {

constexpr double kPi = 3.14159265358979323846;

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass;
    std::string detail;
};

CheckResult timed(const std::string& suite, const std::string& name,
                  const std::function<Outcome()>& body) {
    CheckResult r;
    r.suite = suite;
    r.name = name;
    const auto t0 = Clock::now();
    try {
        const Outcome o = body();
        r.pass = o.pass;
        r.detail = o.detail;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

std::string fmt(double v) { return emit::g17(v); }

Outcome bound(double value, double limit, const std::string& label) {
    std::ostringstream os;
    os << label << " = " << fmt(value) << " (limit " << fmt(limit) << ")";
    return {value <= limit, os.str()};
}

// ---------------------------------------------------------------- specfun --

Outcome check_bessel_symmetry() {
    std::mt19937_64 rng(0xB355E1u);
    std::uniform_real_distribution<double> unu(0.0, 40.0);
    std::uniform_real_distribution<double> ulz(std::log(1e-4), std::log(50.0));
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double nu = unu(rng);
        const double z = std::exp(ulz(rng));
        const double lp = log_bessel_k(nu, z);
        if (lp > 700.0) continue;
        const double kp = std::exp(lp);
        const double km = bessel_k(-nu, z);
        worst = std::max(worst, std::fabs(kp - km) / kp);
    }
    return bound(worst, 1e-12, "max rel |K_nu - K_-nu|");
}

Outcome check_bessel_oracle() {
    std::mt19937_64 rng(0xB355E2u);
    std::uniform_real_distribution<double> unu(0.0, 60.0);
    std::uniform_real_distribution<double> ulz(std::log(1e-6), std::log(50.0));
    double worst = 0.0;
    int done = 0;
    while (done < 100) {
        const double nu = unu(rng);
        const double z = std::exp(ulz(rng));
        const double lk = log_bessel_k(nu, z);
        if (lk > 690.0 || lk < -690.0) continue;
        const long double lo = oracle::log_bessel_k(nu, z);
        const double rel = std::fabs(std::expm1(static_cast<double>(lo - lk)));
        worst = std::max(worst, rel);
        ++done;
    }
    return bound(worst, 1e-10, "max rel error vs oracle, 100 points");
}

Outcome check_gamma_oracle() {
    std::mt19937_64 rng(0x6A44Au);
    std::uniform_real_distribution<double> ula(std::log(0.2), std::log(200.0));
    std::uniform_real_distribution<double> ulz(std::log(0.05), std::log(1e4));
    std::uniform_real_distribution<double> uarg(0.0, 0.5 * kPi);
    double worst = 0.0;
    int done = 0;
    while (done < 100) {
        const double a = std::exp(ula(rng));
        const double r = std::exp(ulz(rng));
        const double th = uarg(rng);
        const Complex z(r * std::cos(th), r * std::sin(th));
        Complex got;
        try {
            got = upper_gamma_complex(a, z);
        } catch (const numeric_error&) {
            continue;  // overflow region
        }
        if (std::abs(got) < 1e-280 || std::abs(got) > 1e280) continue;
        const oracle::CLD want = oracle::upper_gamma(a, oracle::CLD(z.real(), z.imag()));
        const double rel = static_cast<double>(
            std::abs(oracle::CLD(got.real(), got.imag()) - want) / std::abs(want));
        worst = std::max(worst, rel);
        ++done;
    }
    return bound(worst, 1e-10, "max rel error vs oracle, 100 points");
}

Outcome check_gamma_recurrence() {
    // z * scaled(a+1, z) = a * scaled(a, z) + 1, the overflow-free form of
    // Gamma(a+1, z) = a Gamma(a, z) + z^a e^{-z}.
    std::mt19937_64 rng(0x6A44Bu);
    std::uniform_real_distribution<double> ula(std::log(0.2), std::log(199.0));
    std::uniform_real_distribution<double> ulz(std::log(0.05), std::log(1e4));
    std::uniform_real_distribution<double> uarg(0.0, 0.5 * kPi);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double a = std::exp(ula(rng));
        const double r = std::exp(ulz(rng));
        const double th = uarg(rng);
        const Complex z(r * std::cos(th), r * std::sin(th));
        Complex lhs, rhs;
        try {
            lhs = z * upper_gamma_scaled(a + 1.0, z);
            rhs = a * upper_gamma_scaled(a, z) + 1.0;
        } catch (const numeric_error&) {
            continue;
        }
        const double rel = std::abs(lhs - rhs) / (std::abs(rhs) + 1e-300);
        worst = std::max(worst, rel);
    }
    return bound(worst, 1e-9, "max rel recurrence defect");
}

Outcome check_gamma_real_imag() {
    std::mt19937_64 rng(0x6A44Cu);
    std::uniform_real_distribution<double> ula(std::log(0.3), std::log(80.0));
    std::uniform_real_distribution<double> ulz(std::log(0.05), std::log(300.0));
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double a = std::exp(ula(rng));
        const double z = std::exp(ulz(rng));
        Complex g;
        try {
            g = upper_gamma_complex(a, Complex(z, 0.0));
        } catch (const numeric_error&) {
            continue;
        }
        const double rel = std::fabs(g.imag()) / (std::abs(g) + 1e-300);
        worst = std::max(worst, rel);
    }
    return bound(worst, 1e-12, "max |Im|/|value| on the real axis");
}

Outcome check_sici_oracle() {
    std::mt19937_64 rng(0x51C1u);
    std::uniform_real_distribution<double> ulx(std::log(1e-3), std::log(1e3));
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double x = std::exp(ulx(rng));
        const double dsi =
            std::fabs(sin_integral(x) - static_cast<double>(oracle::si(x)));
        const double dci =
            std::fabs(cos_integral(x) - static_cast<double>(oracle::ci(x)));
        worst = std::max({worst, dsi, dci});
    }
    return bound(worst, 1e-12, "max abs error vs oracle, 100 points");
}

Outcome check_beta_oracle() {
    std::mt19937_64 rng(0xBE7Au);
    std::uniform_real_distribution<double> ul(std::log(0.1), std::log(50.0));
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double a = std::exp(ul(rng));
        const double b = std::exp(ul(rng));
        const double got = beta(a, b);
        const double want = static_cast<double>(oracle::beta(a, b));
        worst = std::max(worst, std::fabs(got - want) / want);
    }
    return bound(worst, 1e-12, "max rel error vs oracle, 100 points");
}

std::vector<CheckResult> suite_specfun() {
    std::vector<CheckResult> out;
    out.push_back(timed("specfun", "bessel_k order symmetry", check_bessel_symmetry));
    out.push_back(timed("specfun", "bessel_k vs quadrature oracle", check_bessel_oracle));
    out.push_back(timed("specfun", "upper_gamma vs quadrature oracle", check_gamma_oracle));
    out.push_back(timed("specfun", "upper_gamma recurrence", check_gamma_recurrence));
    out.push_back(timed("specfun", "upper_gamma real axis imaginary part",
                        check_gamma_real_imag));
    out.push_back(timed("specfun", "si/ci vs lobe oracle", check_sici_oracle));
    out.push_back(timed("specfun", "beta vs quadrature oracle", check_beta_oracle));
    return out;
}

// ------------------------------------------------------------------- laws --

double pdf_mass(const std::function<double(double)>& pdf, double inner,
                double abs_tol) {
    // symmetric pdfs: 2 * (\int_0^inner + tail)
    const double head = quad::adaptive(pdf, 0.0, inner, abs_tol / 4.0);
    const double tail = quad::tail_integral(pdf, inner, abs_tol / 4.0);
    return 2.0 * (head + tail);
}

Outcome check_laws_normalization() {
    double worst = 0.0;
    std::string worst_at = "-";
    const auto note = [&](double mass, const std::string& label) {
        const double err = std::fabs(mass - 1.0);
        if (err > worst) {
            worst = err;
            worst_at = label;
        }
    };
    for (const double lam : {0.7, 1.0, 2.5})
        for (const double al : {1.0, std::sqrt(2.0)}) {
            const VGParams p(lam, al);
            note(pdf_mass([&](double x) { return vg_pdf(p, x); }, 30.0, 1e-8),
                 "vg(" + fmt(lam) + "," + fmt(al) + ")");
        }
    for (const double nu : {1.0, 3.0, 5.0, 7.0}) {
        const StudentParams p(nu, 1.0);
        note(pdf_mass([&](double x) { return student_pdf(p, x); }, 50.0, 1e-8),
             "student(" + fmt(nu) + ")");
    }
    {
        const GHParams p(1.0, 2.0, 1.0);
        note(pdf_mass([&](double x) { return gh_pdf(p, x); }, 30.0, 1e-8), "gh(1,2,1)");
    }
    return bound(worst, 1e-6, "max |mass - 1| (worst: " + worst_at + ")");
}

Outcome check_laws_chf_props() {
    double worst_even = 0.0, worst_bound = 0.0, worst_one = 0.0;
    const auto probe = [&](const std::function<double(double)>& chf) {
        worst_one = std::max(worst_one, std::fabs(chf(0.0) - 1.0));
        for (int i = 1; i <= 1000; ++i) {
            const double u = 30.0 * i / 1000.0;
            const double a = chf(u), b = chf(-u);
            worst_even = std::max(worst_even, std::fabs(a - b));
            worst_bound = std::max(worst_bound, std::fabs(a) - 1.0);
        }
    };
    for (const double lam : {0.7, 1.0, 2.5}) {
        const VGParams p(lam, 1.0);
        probe([&](double u) { return vg_chf(p, u); });
    }
    for (const double nu : {1.0, 2.4, 3.0, 5.0, 7.0}) {
        const StudentParams p(nu, 1.0);
        probe([&](double u) { return student_chf(p, u); });
    }
    {
        const GHParams p(1.0, 2.0, 1.0);
        probe([&](double u) { return gh_chf(p, u); });
    }
    const double worst = std::max({worst_even, worst_bound, worst_one});
    return bound(worst, 1e-12, "max of |chf(0)-1|, evenness defect, |chf|-1");
}

Outcome check_laws_fourier_consistency() {
    const std::vector<double> xs = make_grid(-20.0, 20.0, 161);
    double worst = 0.0;
    std::string worst_at = "-";
    const auto run = [&](const std::function<double(double)>& chf,
                         const std::function<double(double)>& pdf,
                         const std::string& label) {
        const GridFunction g = invert_chf(chf, xs, 60.0);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double err = std::fabs(g.values[i] - pdf(xs[i]));
            if (err > worst) {
                worst = err;
                worst_at = label + " @ x=" + fmt(xs[i]);
            }
        }
    };
    for (const double lam : {0.7, 1.0, 2.5})
        for (const double al : {1.0, std::sqrt(2.0)}) {
            const VGParams p(lam, al);
            run([&](double u) { return vg_chf(p, u); },
                [&](double x) { return vg_pdf(p, x); },
                "vg(" + fmt(lam) + "," + fmt(al) + ")");
        }
    for (const double nu : {1.0, 3.0, 5.0, 7.0}) {
        const StudentParams p(nu, 1.0);
        run([&](double u) { return student_chf(p, u); },
            [&](double x) { return student_pdf(p, x); }, "student(" + fmt(nu) + ")");
    }
    return bound(worst, 1e-6, "sup inversion error (worst: " + worst_at + ")");
}

Outcome check_laws_normal_limit() {
    const double nu = 200.0;
    const StudentParams p(nu, std::sqrt(nu - 2.0));
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double u = -5.0 + 10.0 * i / 100.0;
        worst = std::max(worst,
                         std::fabs(student_chf(p, u) - std::exp(-0.5 * u * u)));
    }
    return bound(worst, 1e-2, "sup |chf - gaussian| at nu=200");
}

std::vector<CheckResult> suite_laws() {
    std::vector<CheckResult> out;
    out.push_back(timed("laws", "pdf normalization", check_laws_normalization));
    out.push_back(timed("laws", "chf normalization/evenness/bound", check_laws_chf_props));
    out.push_back(timed("laws", "fourier consistency pdf vs chf",
                        check_laws_fourier_consistency));
    out.push_back(timed("laws", "normal limit of student chfs", check_laws_normal_limit));
    return out;
}

// ---------------------------------------------------------------- process --

Outcome check_chapman_kolmogorov() {
    const ProcessSpec spec{LawParams(StudentParams(3.0, 1.0)), 1.0};
    double worst = 0.0;
    for (const double u : {0.3, 1.0, 2.7})
        for (const double t1 : {0.4, 1.0, 2.3})
            for (const double t2 : {0.6, 1.7}) {
                const double lhs = transition_chf(spec, u, t1 + t2);
                const double rhs =
                    transition_chf(spec, u, t1) * transition_chf(spec, u, t2);
                worst = std::max(worst, std::fabs(lhs - rhs) / (std::fabs(lhs) + 1e-300));
            }
    return bound(worst, 1e-14, "max rel Chapman-Kolmogorov defect");
}

Outcome check_vg_closure() {
    const std::vector<double> xs = make_grid(-10.0, 10.0, 101);
    double worst = 0.0;
    for (const auto& [t1, t2] : std::vector<std::pair<double, double>>{{0.5, 0.5},
                                                                       {1.0, 2.0}}) {
        const double t = t1 + t2;
        const GridFunction g = invert_chf(
            [t](double u) { return std::pow(1.0 + u * u, -t); }, xs, 60.0);
        for (std::size_t i = 0; i < xs.size(); ++i)
            worst = std::max(worst,
                             std::fabs(g.values[i] - vg_transition_pdf(1.0, xs[i], t)));
    }
    return bound(worst, 1e-6, "sup |inverted chf - closed form|");
}

Outcome check_student3_tail() {
    double worst = 0.0;
    for (const double t : {0.5, 1.0, 2.0, 3.7}) {
        const double x = 200.0;
        const double p = student3_transition_pdf(x, t);
        const double lim = student3_tail_coefficient(t) / (x * x * x * x);
        worst = std::max(worst, std::fabs(p / lim - 1.0));
    }
    return bound(worst, 0.01, "max |x^4 p / (2t/pi) - 1| at |x|=200");
}

Outcome check_student3_normalization() {
    double worst = 0.0;
    for (const double t : {0.5, 1.0, 2.0, 5.0}) {
        const double X = 100.0;
        const double head = quad::adaptive(
            [t](double x) { return student3_transition_pdf(x, t); }, 0.0, X, 1e-9);
        const double tail = student3_tail_coefficient(t) / (3.0 * X * X * X);
        worst = std::max(worst, std::fabs(2.0 * (head + tail) - 1.0));
    }
    return bound(worst, 1e-5, "max |mass - 1| (tail-corrected)");
}

Outcome check_student3_variance() {
    double worst = 0.0;
    for (const double t : {0.5, 1.0, 2.0, 5.0}) {
        const double X = 500.0;
        const double head = quad::adaptive(
            [t](double x) { return x * x * student3_transition_pdf(x, t); }, 0.0, X,
            1e-7);
        // \int_X^inf x^2 (2t/pi x^4) dx = 2t/(pi X)
        const double tail = student3_tail_coefficient(t) / X;
        worst = std::max(worst, std::fabs(2.0 * (head + tail) - t) / t);
    }
    return bound(worst, 1e-3, "max rel |variance - t| (tail-corrected)");
}

Outcome check_gaussian_limit() {
    const std::vector<double> us = make_grid(-5.0, 5.0, 101);
    // sup distance decays exactly like 0.3862/sqrt(t) (leading error term
    // e^{-u^2/2} u^3/(3 sqrt t) at u = sqrt 3)
    const double c = std::sqrt(27.0) * std::exp(-1.5) / 3.0;
    bool rate_ok = true;
    for (const double t : {1e4, 1e5, 1e6}) {
        const double d = gaussian_limit_distance(t, us);
        if (std::fabs(d * std::sqrt(t) / c - 1.0) > 0.05) rate_ok = false;
    }
    bool monotone = true;
    double prev = 1e300;
    for (const double t : {1.0, 10.0, 100.0, 1000.0, 1e4, 1e6}) {
        const double d = gaussian_limit_distance(t, us);
        if (d >= prev) monotone = false;
        prev = d;
    }
    const double d4 = gaussian_limit_distance(1e4, us);
    std::ostringstream os;
    os << "distance(1e4) = " << fmt(d4) << ", asymptote 0.3862/sqrt(t) "
       << (rate_ok ? "matches" : "VIOLATED") << ", "
       << (monotone ? "monotone in t" : "NOT monotone in t");
    return {rate_ok && monotone && gaussian_limit_distance(1.0, us) > 1e-3, os.str()};
}

std::vector<CheckResult> suite_process() {
    std::vector<CheckResult> out;
    out.push_back(timed("process", "Chapman-Kolmogorov (chf powers)",
                        check_chapman_kolmogorov));
    out.push_back(timed("process", "VG convolution closure", check_vg_closure));
    out.push_back(timed("process", "T(3) quartic tail", check_student3_tail));
    out.push_back(timed("process", "T(3) normalization", check_student3_normalization));
    out.push_back(timed("process", "T(3) variance growth", check_student3_variance));
    out.push_back(timed("process", "gaussian limit of the reduced law",
                        check_gaussian_limit));
    return out;
}

// ---------------------------------------------------------------- mixture --

Outcome check_mixture_exact_identities() {
    BigRat worst_sum_defect = 0;
    bool structure_ok = true;
    bool decreasing_ok = true;
    BigRat prev_qnn;
    for (int n = 1; n <= 200; ++n) {
        const MixtureWeights w = mixture_weights(n);
        if (w.weights[0] != 0) structure_ok = false;
        BigRat sum = 0, harm = 0;
        for (int k = 0; k <= n; ++k) {
            if (k >= 1 && !(w.weights[k] > 0)) structure_ok = false;
            sum += w.weights[k];
            if (k >= 1) harm += w.weights[k] / BigRat(2 * k - 1);
        }
        if (sum != 1) structure_ok = false;
        if (harm != BigRat(1, n)) structure_ok = false;
        // second-moment identity: sum q n^2/(2k-1) = n, equivalent to harm = 1/n
        if (n >= 3 && !(w.weights[n] < prev_qnn)) decreasing_ok = false;
        if (n >= 2) prev_qnn = w.weights[n];
    }
    std::ostringstream os;
    os << (structure_ok ? "q(0)=0, q(k)>0, sum=1, sum q/(2k-1)=1/n exact for n<=200"
                        : "identity violated");
    os << (decreasing_ok ? "; q_n(n) decreasing (observation)"
                         : "; q_n(n) NOT decreasing");
    (void)worst_sum_defect;
    return {structure_ok, os.str()};
}

Outcome check_mixture_fourier() {
    const std::vector<double> xs = make_grid(-20.0, 20.0, 161);
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n) {
        const MixtureWeights w = mixture_weights(n);
        const double nn = n;
        const GridFunction g = invert_chf(
            [nn](double u) {
                const double au = std::fabs(u);
                return std::exp(nn * (std::log1p(au) - au));
            },
            xs, 50.0);
        for (std::size_t i = 0; i < xs.size(); ++i)
            worst = std::max(worst, std::fabs(g.values[i] - mixture_pdf(w, xs[i])));
    }
    return bound(worst, 1e-6, "sup |mixture - inverted chf|, n = 1..6");
}

Outcome check_mixture_tail() {
    double worst = 0.0;
    for (const int n : {1, 2, 3, 5}) {
        const double x = 500.0;
        const double v = mixture_pdf(x, n) * x * x * x * x;
        worst = std::max(worst, std::fabs(v / (2.0 * n / kPi) - 1.0));
    }
    return bound(worst, 0.01, "max |x^4 p / (2n/pi) - 1| at |x|=500");
}

std::vector<CheckResult> suite_mixture() {
    std::vector<CheckResult> out;
    out.push_back(timed("mixture", "exact weight identities n<=200",
                        check_mixture_exact_identities));
    out.push_back(timed("mixture", "mixture vs fourier inversion", check_mixture_fourier));
    out.push_back(timed("mixture", "quartic tail of the mixture", check_mixture_tail));
    return out;
}

// ---------------------------------------------------------------- triplet --

// chfs and derivatives used by the numeric-triplet checks
struct NamedChf {
    std::string name;
    Chf chf;
    Chf dchf;
    double M;
    std::function<double(double)> w_closed;  // null if W = 0
};

NamedChf chf_wiener() {
    return {"wiener",
            [](double u) { return std::exp(-0.5 * u * u); },
            [](double u) { return -u * std::exp(-0.5 * u * u); },
            20.0,
            nullptr};
}

NamedChf chf_cauchy() {
    return {"cauchy",
            [](double u) { return std::exp(-std::fabs(u)); },
            [](double u) {
                const double s = (u >= 0.0) ? 1.0 : -1.0;
                return -s * std::exp(-std::fabs(u));
            },
            600.0,
            [](double z) { return 1.0 / (kPi * z * z); }};
}

NamedChf chf_vg(double lambda) {
    return {"vg(" + fmt(lambda) + ")",
            [lambda](double u) { return std::pow(1.0 + u * u, -lambda); },
            [lambda](double u) {
                return -2.0 * lambda * u * std::pow(1.0 + u * u, -lambda - 1.0);
            },
            2000.0,
            [lambda](double z) { return w_vg(z, lambda); }};
}

NamedChf chf_student3() {
    return {"student3",
            [](double u) {
                const double au = std::fabs(u);
                return std::exp(-au) * (1.0 + au);
            },
            [](double u) {
                const double au = std::fabs(u);
                const double s = (u >= 0.0) ? 1.0 : -1.0;
                return -s * au * std::exp(-au);
            },
            600.0,
            [](double z) { return w_student3(z); }};
}

Outcome check_w_evenness() {
    double worst = 0.0;
    for (const double z : {0.25, 0.5, 1.0, 2.0, 5.0}) {
        worst = std::max(worst, std::fabs(w_vg(z, 1.3) - w_vg(-z, 1.3)) / w_vg(z, 1.3));
        worst = std::max(worst,
                         std::fabs(w_student3(z) - w_student3(-z)) / w_student3(z));
    }
    return bound(worst, 1e-12, "max rel evenness defect of W");
}

Outcome check_w_cross_validation() {
    double worst = 0.0;
    std::string worst_at = "-";
    std::vector<NamedChf> laws;
    for (const double lam : {0.5, 1.0, 2.0}) laws.push_back(chf_vg(lam));
    laws.push_back(chf_student3());
    laws.push_back(chf_cauchy());
    for (const auto& nc : laws)
        for (const double z : {0.25, 0.5, 1.0, 2.0, 5.0}) {
            const double got = numeric_w(nc.chf, nc.dchf, z, nc.M);
            const double want = nc.w_closed(z);
            const double rel = std::fabs(got - want) / want;
            if (rel > worst) {
                worst = rel;
                worst_at = nc.name + " @ z=" + fmt(z);
            }
        }
    return bound(worst, 1e-3, "max rel |numeric W - closed form| (worst: " + worst_at + ")");
}

Outcome check_numeric_ab() {
    double worst_b0 = 0.0;
    for (const auto& nc : {chf_vg(1.0), chf_student3(), chf_cauchy()}) {
        const double b = numeric_b(nc.chf, nc.dchf, nc.M);
        worst_b0 = std::max(worst_b0, std::fabs(b));
        if (numeric_a(nc.chf, nc.dchf, nc.M) != 0.0)
            return {false, "numeric_a not exactly 0 for even chf " + nc.name};
    }
    const auto w = chf_wiener();
    const double bw = numeric_b(w.chf, w.dchf, w.M);
    std::ostringstream os;
    os << "max |B| pure-jump = " << fmt(worst_b0) << ", wiener B = " << fmt(bw);
    return {worst_b0 <= 1e-3 && std::fabs(bw - 1.0) <= 1e-3, os.str()};
}

Outcome check_levy_khinchin_vg() {
    LevyTriplet t;
    t.W = [](double z) { return w_vg(z, 1.0); };
    const double res = levy_khinchin_residual(
        t, [](double u) { return 1.0 / (1.0 + u * u); }, make_grid(-5.0, 5.0, 21));
    return bound(res, 1e-8, "VG residual on |u| <= 5");
}

Outcome check_levy_khinchin_cauchy() {
    LevyTriplet t = reference_triplet(ReferenceProcess::Cauchy);
    const double res = levy_khinchin_residual(
        t, [](double u) { return std::exp(-std::fabs(u)); }, make_grid(-5.0, 5.0, 21));
    return bound(res, 1e-8, "Cauchy residual on |u| <= 5");
}

// (2/pi) \int_0^inf [sin z ci z - cos z si z] (1 - cos uz) / z dz = log(1+|u|)
double student_lk_integral(double u) {
    const auto f = [](double z) {
        return (std::sin(z) * cos_integral(z) - std::cos(z) * sin_integral(z)) / z;
    };
    const double Z = 100.0;
    const auto integrand = [&](double z) {
        const double s = std::sin(0.5 * u * z);
        return f(z) * 2.0 * s * s;
    };
    double head = 0.0;
    {
        const double cap = std::min(kPi / u, 2.0);
        double lo = 0.0;
        while (lo < Z) {
            const double hi = std::min(Z, lo + cap);
            head += quad::adaptive(integrand, lo, hi, 1e-11);
            lo = hi;
        }
    }
    // analytic tail with f(z) ~ 1/z - 2/z^3:
    //   \int_Z^inf (1-cos uz)/z^2 dz = 1/Z - cos(uZ)/Z - u si(uZ)
    //   \int_Z^inf cos(uz)/z^2 dz   = cos(uZ)/Z + u si(uZ)
    const double siuZ = sin_integral(u * Z);
    const double cosuZ = std::cos(u * Z);
    const double sinuZ = std::sin(u * Z);
    const double t1 = 1.0 / Z - cosuZ / Z - u * siuZ;
    // \int_Z^inf cos(uz)/z^4 dz via two integrations by parts
    const double int_sin_z3 =
        sinuZ / (2.0 * Z * Z) + 0.5 * u * (cosuZ / Z + u * siuZ);
    const double int_cos_z4 = cosuZ / (3.0 * Z * Z * Z) - u / 3.0 * int_sin_z3;
    const double t2 = 1.0 / (3.0 * Z * Z * Z) - int_cos_z4;
    const double tail = t1 - 2.0 * t2;
    return (2.0 / kPi) * (head + tail);
}

Outcome check_levy_khinchin_student() {
    double worst = 0.0;
    for (const double u : {0.5, 1.0, 3.0})
        worst = std::max(worst,
                         std::fabs(student_lk_integral(u) - std::log1p(u)));
    return bound(worst, 1e-6, "max |integral - log(1+u)| at u in {0.5,1,3}");
}

Outcome check_w_integrability() {
    // z^2 W integrable at 0, W integrable at infinity, total mass infinite,
    // small-z divergence exponents 1 (VG) resp. 2 (T3).
    const auto fit_exponent = [](const std::function<double(double)>& W) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int n = 0;
        for (double z = 1e-4; z <= 1e-2; z *= 2.0) {
            const double lx = std::log(z), ly = std::log(W(z));
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
            ++n;
        }
        return -(n * sxy - sx * sy) / (n * sxx - sx * sx);
    };
    const double beta_vg = fit_exponent([](double z) { return w_vg(z, 1.0); });
    const double beta_t3 = fit_exponent([](double z) { return w_student3(z); });
    const double small_vg = quad::adaptive(
        [](double z) { return z * z * w_vg(z, 1.0); }, 0.0, 1.0, 1e-10);
    const double small_t3 = quad::adaptive(
        [](double z) { return z * z * w_student3(z); }, 0.0, 1.0, 1e-10);
    const double big_vg =
        quad::tail_integral([](double z) { return w_vg(z, 1.0); }, 1.0, 1e-10);
    const double big_t3 =
        quad::tail_integral([](double z) { return w_student3(z); }, 1.0, 1e-10);
    const bool finite = std::isfinite(small_vg) && std::isfinite(small_t3) &&
                        std::isfinite(big_vg) && std::isfinite(big_t3) &&
                        small_vg > 0 && small_t3 > 0 && big_vg > 0 && big_t3 > 0;
    const bool exps = std::fabs(beta_vg - 1.0) <= 0.05 && std::fabs(beta_t3 - 2.0) <= 0.05;
    std::ostringstream os;
    os << "exponents " << fmt(beta_vg) << " (vg), " << fmt(beta_t3)
       << " (t3); split integrals finite: " << (finite ? "yes" : "no");
    return {finite && exps, os.str()};
}

std::vector<CheckResult> suite_triplet() {
    std::vector<CheckResult> out;
    out.push_back(timed("triplet", "W evenness", check_w_evenness));
    out.push_back(timed("triplet", "numeric W vs closed forms", check_w_cross_validation));
    out.push_back(timed("triplet", "numeric A and B", check_numeric_ab));
    out.push_back(timed("triplet", "Levy-Khinchin residual (VG)", check_levy_khinchin_vg));
    out.push_back(timed("triplet", "Levy-Khinchin residual (Cauchy)",
                        check_levy_khinchin_cauchy));
    out.push_back(timed("triplet", "Levy-Khinchin integral (T3)",
                        check_levy_khinchin_student));
    out.push_back(timed("triplet", "Levy density integrability split",
                        check_w_integrability));
    return out;
}

// --------------------------------------------------------------- simulate --

Outcome check_sim_determinism() {
    const ForceSpec force(0.1, 8.0);
    const TrajectoryRecord a = ou_path(NoiseKind::Student3_1, force, 2000, 0.0, 42);
    const TrajectoryRecord b = ou_path(NoiseKind::Student3_1, force, 2000, 0.0, 42);
    if (a.values != b.values) return {false, "same seed produced different paths"};

    char* old = std::getenv("LEVY_MIX_THREADS");
    const std::string saved = old ? old : "";
    setenv("LEVY_MIX_THREADS", "1", 1);
    const EscapeStats s1 = escape_stats(NoiseKind::VG_1_sqrt2, 0.1, 8.0, 400, 500, 7);
    setenv("LEVY_MIX_THREADS", "5", 1);
    const EscapeStats s5 = escape_stats(NoiseKind::VG_1_sqrt2, 0.1, 8.0, 400, 500, 7);
    if (old)
        setenv("LEVY_MIX_THREADS", saved.c_str(), 1);
    else
        unsetenv("LEVY_MIX_THREADS");
    if (s1.escape_fraction != s5.escape_fraction ||
        !(s1.mean_first_escape == s5.mean_first_escape ||
          (std::isnan(s1.mean_first_escape) && std::isnan(s5.mean_first_escape))))
        return {false, "worker count changed the result"};
    return {true, "bit-identical across repeats and worker counts"};
}

Outcome check_sim_free_path_stats() {
    // free Levy path: increment autocorrelation and window exchangeability
    const int N = 100000;
    double worst_ac = 0.0;
    double worst_window = 0.0;
    for (const NoiseKind kind :
         {NoiseKind::Normal01, NoiseKind::VG_1_sqrt2, NoiseKind::Student3_1}) {
        CounterRng rng = CounterRng::for_path(321, 9);
        std::vector<double> dx(N);
        for (int i = 0; i < N; ++i) dx[i] = sample_increment(kind, rng);
        double mean = 0.0;
        for (const double v : dx) mean += v;
        mean /= N;
        double var = 0.0;
        for (const double v : dx) var += (v - mean) * (v - mean);
        var /= N;
        for (int lag = 1; lag <= 3; ++lag) {
            double acc = 0.0;
            for (int i = 0; i + lag < N; ++i) acc += (dx[i] - mean) * (dx[i + lag] - mean);
            acc /= (N - lag) * var;
            worst_ac = std::max(worst_ac, std::fabs(acc));
        }
        // exchangeability of disjoint windows: first vs second half means
        double m1 = 0.0, m2 = 0.0;
        for (int i = 0; i < N / 2; ++i) {
            m1 += dx[i];
            m2 += dx[N / 2 + i];
        }
        const double zdiff = (m1 - m2) / (N / 2) / std::sqrt(var * 4.0 / N);
        worst_window = std::max(worst_window, std::fabs(zdiff));
    }
    std::ostringstream os;
    os << "max |autocorr| lags 1..3 = " << fmt(worst_ac) << " (limit "
       << fmt(3.0 / std::sqrt(static_cast<double>(N))) << "), window mean z = "
       << fmt(worst_window) << " (limit 4)";
    return {worst_ac <= 3.0 / std::sqrt(static_cast<double>(N)) && worst_window <= 4.0,
            os.str()};
}

Outcome check_sim_variance_growth() {
    // free Student path: Var[Y_m] = m
    const int n_paths = 20000, m = 100;
    std::vector<double> y(n_paths, 0.0);
    double sum = 0.0, sum2 = 0.0;
    for (int p = 0; p < n_paths; ++p) {
        CounterRng rng = CounterRng::for_path(999, p);
        double yy = 0.0;
        for (int i = 0; i < m; ++i) yy += sample_increment(NoiseKind::Student3_1, rng);
        sum += yy;
        sum2 += yy * yy;
    }
    const double var = sum2 / n_paths - (sum / n_paths) * (sum / n_paths);
    return bound(std::fabs(var / m - 1.0), 0.15, "rel |Var[Y_100]/100 - 1|");
}

Outcome check_sim_zero_noise() {
    // degenerate noise: Y_m = y0 (1-k)^m exactly (up to rounding)
    double y = 10.0;
    const double k = 0.1;
    double worst = 0.0;
    for (int m = 1; m <= 50; ++m) {
        y = y + (-k * y);
        worst = std::max(worst, std::fabs(y - 10.0 * std::pow(0.9, m)) / y);
    }
    const ForceSpec f(0.1, std::nullopt);
    (void)f;
    return bound(worst, 1e-12, "max rel deterministic-recursion error");
}

Outcome check_sim_escape_edges() {
    const EscapeStats far = escape_stats(NoiseKind::Normal01, 0.1, 1e9, 200, 200, 5);
    const EscapeStats tiny = escape_stats(NoiseKind::Normal01, 0.1, 1e-12, 200, 200, 5);
    std::ostringstream os;
    os << "q->inf fraction " << far.escape_fraction << ", q->0 fraction "
       << tiny.escape_fraction << " at mean step " << tiny.mean_first_escape;
    return {far.escape_fraction == 0.0 && tiny.escape_fraction == 1.0 &&
                tiny.mean_first_escape == 1.0,
            os.str()};
}

Outcome check_sim_excursions() {
    // Student-driven OU shows > 6 sigma_stat excursions more often than the
    // gaussian one under the same confinement.
    const double k = 0.1;
    const double sigma_stat = std::sqrt(1.0 / (k * (2.0 - k)));
    const double bar = 6.0 * sigma_stat;
    int exc_n = 0, exc_s = 0;
    const int paths = 200, steps = 5000;
    for (int p = 0; p < paths; ++p) {
        const ForceSpec force(k, std::nullopt);
        const TrajectoryRecord rn = ou_path(NoiseKind::Normal01, force, steps, 0.0,
                                            1000 + p);
        const TrajectoryRecord rs = ou_path(NoiseKind::Student3_1, force, steps, 0.0,
                                            2000 + p);
        const auto exceeds = [bar](const TrajectoryRecord& r) {
            for (const double v : r.values)
                if (std::fabs(v) > bar) return true;
            return false;
        };
        exc_n += exceeds(rn);
        exc_s += exceeds(rs);
    }
    std::ostringstream os;
    os << "paths beyond 6 sigma_stat: student " << exc_s << "/200, normal " << exc_n
       << "/200";
    return {exc_s > exc_n + 3 * static_cast<int>(std::sqrt(exc_n + exc_s + 1.0)), os.str()};
}

std::vector<CheckResult> suite_simulate() {
    std::vector<CheckResult> out;
    out.push_back(timed("simulate", "determinism", check_sim_determinism));
    out.push_back(timed("simulate", "free-path increment statistics",
                        check_sim_free_path_stats));
    out.push_back(timed("simulate", "free student path variance growth",
                        check_sim_variance_growth));
    out.push_back(timed("simulate", "deterministic recursion (zero noise)",
                        check_sim_zero_noise));
    out.push_back(timed("simulate", "escape edge cases", check_sim_escape_edges));
    out.push_back(timed("simulate", "heavy-tail excursions", check_sim_excursions));
    return out;
}

// ------------------------------------------------------------- acceptance --

Outcome accept_c1() {
    const auto t0 = Clock::now();
    const Outcome o = check_mixture_exact_identities();
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs > 60.0)
        return {false, o.detail + " BUT runtime " + fmt(secs) + " s exceeds 60 s"};
    return o;
}

Outcome accept_c2() {
    const auto t0 = Clock::now();
    const Outcome o = check_mixture_fourier();
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (secs > 120.0)
        return {false, o.detail + " BUT runtime " + fmt(secs) + " s exceeds 2 min"};
    return o;
}

Outcome accept_c5() {
    // numeric triplets: Wiener (0, 1, 0), Cauchy (0, 0, 1/(pi z^2)) within
    // 1e-3, and numeric W vs both closed forms within 1e-3 relative.
    const auto w = chf_wiener();
    const double aw = numeric_a(w.chf, w.dchf, w.M);
    const double bw = numeric_b(w.chf, w.dchf, w.M);
    double worst_w0 = 0.0;
    for (const double z : {0.5, 1.0, 2.0})
        worst_w0 = std::max(worst_w0, std::fabs(numeric_w(w.chf, w.dchf, z, w.M)));
    const Outcome cross = check_w_cross_validation();
    const Outcome ab = check_numeric_ab();
    std::ostringstream os;
    os << "wiener (A,B,maxW) = (" << fmt(aw) << ", " << fmt(bw) << ", " << fmt(worst_w0)
       << "); " << cross.detail << "; " << ab.detail;
    const bool pass = aw == 0.0 && std::fabs(bw - 1.0) <= 1e-3 && worst_w0 <= 1e-3 &&
                      cross.pass && ab.pass;
    return {pass, os.str()};
}

Outcome accept_c6() {
    const Outcome closure = check_vg_closure();
    // regime classifier against the sign of 2 lambda t - 1
    bool classifier_ok = true;
    for (const double lam : {0.25, 0.5, 1.0, 2.0, 4.0})
        for (const double t : {0.05, 0.125, 0.25, 0.5, 1.0, 2.0, 10.0}) {
            const double s = 2.0 * lam * t;
            const SmallXRegime want = (s < 1.0)   ? SmallXRegime::Singular
                                      : (s == 1.0) ? SmallXRegime::LogSingular
                                                   : SmallXRegime::Finite;
            if (vg_small_x_regime(lam, t) != want) classifier_ok = false;
        }
    // finite-value case: closed form against an independent quadrature of
    // (1/pi) \int_0^inf (1+u^2)^{-lt} du
    double worst_fv = 0.0;
    for (const double lt : {0.8, 2.0, 3.5}) {
        const double got = vg_transition_pdf(lt, 0.0, 1.0);
        const double head = quad::adaptive(
            [lt](double u) { return std::pow(1.0 + u * u, -lt); }, 0.0, 50.0, 1e-12);
        const double tail = quad::tail_integral(
            [lt](double u) { return std::pow(1.0 + u * u, -lt); }, 50.0, 1e-12);
        worst_fv = std::max(worst_fv, std::fabs(got - (head + tail) / kPi));
    }
    std::ostringstream os;
    os << closure.detail << "; classifier " << (classifier_ok ? "ok" : "WRONG")
       << "; finite-value defect " << fmt(worst_fv);
    return {closure.pass && classifier_ok && worst_fv <= 1e-10, os.str()};
}

Outcome accept_c8() {
    const auto t0 = Clock::now();
    const int N = 1000000;

    // Table increment laws: mean/variance bands and the Student KS test.
    CounterRng rn = CounterRng::for_path(2024, 0);
    CounterRng rv = CounterRng::for_path(2024, 1);
    CounterRng rs = CounterRng::for_path(2024, 2);
    double mean_n = 0.0, mean_s = 0.0, m2_v = 0.0, mean_v = 0.0;
    std::vector<double> student(N);
    for (int i = 0; i < N; ++i) {
        mean_n += sample_increment(NoiseKind::Normal01, rn);
        const double v = sample_increment(NoiseKind::VG_1_sqrt2, rv);
        mean_v += v;
        m2_v += v * v;
        student[i] = sample_increment(NoiseKind::Student3_1, rs);
        mean_s += student[i];
    }
    mean_n /= N;
    mean_v /= N;
    mean_s /= N;
    const double var_v = m2_v / N - mean_v * mean_v;

    std::sort(student.begin(), student.end());
    double ks = 0.0;
    for (int i = 0; i < N; ++i) {
        const double x = student[i];
        const double F = 0.5 + (std::atan(x) + x / (1.0 + x * x)) / kPi;
        ks = std::max(ks, std::fabs(F - static_cast<double>(i + 1) / N));
        ks = std::max(ks, std::fabs(F - static_cast<double>(i) / N));
    }
    const double ks_limit = 1.95 / std::sqrt(static_cast<double>(N));

    // escape ordering at 3 sigma with k = 0.1, q = 8
    const EscapeStats en = escape_stats(NoiseKind::Normal01, 0.1, 8.0, 10000, 5000, 77);
    const EscapeStats ev = escape_stats(NoiseKind::VG_1_sqrt2, 0.1, 8.0, 10000, 5000, 77);
    const EscapeStats es = escape_stats(NoiseKind::Student3_1, 0.1, 8.0, 10000, 5000, 77);
    const auto sig = [](const EscapeStats& a, const EscapeStats& b) {
        const double va = a.escape_fraction * (1.0 - a.escape_fraction) / a.n_paths;
        const double vb = b.escape_fraction * (1.0 - b.escape_fraction) / b.n_paths;
        return (b.escape_fraction - a.escape_fraction) / std::sqrt(va + vb + 1e-12);
    };
    const double z_nv = sig(en, ev);
    const double z_vs = sig(ev, es);

    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::ostringstream os;
    os << "normal mean " << fmt(mean_n) << " (|.|<=0.004), vg var " << fmt(var_v)
       << " (in 1+-0.015), student mean " << fmt(mean_s) << " (|.|<=0.004), KS "
       << fmt(ks) << " (<= " << fmt(ks_limit) << "); escape fractions "
       << fmt(en.escape_fraction) << " < " << fmt(ev.escape_fraction) << " < "
       << fmt(es.escape_fraction) << " (z = " << fmt(z_nv) << ", " << fmt(z_vs) << ")";
    if (secs > 300.0) os << "; runtime " << fmt(secs) << " s exceeds 5 min";
    const bool pass = std::fabs(mean_n) <= 0.004 && std::fabs(var_v - 1.0) <= 0.015 &&
                      std::fabs(mean_s) <= 0.004 && ks <= ks_limit && z_nv >= 3.0 &&
                      z_vs >= 3.0 && secs <= 300.0;
    return {pass, os.str()};
}

Outcome accept_c9() {
    // byte-identical emissions, simulations and verify renderings under
    // fixed seeds
    std::ostringstream w1, w2;
    weights_csv(w1, 12);
    weights_csv(w2, 12);
    const TrajectoryRecord p1 = ou_path(NoiseKind::VG_1_sqrt2, ForceSpec(0.1, 8.0),
                                        5000, 0.0, 123);
    const TrajectoryRecord p2 = ou_path(NoiseKind::VG_1_sqrt2, ForceSpec(0.1, 8.0),
                                        5000, 0.0, 123);
    const std::string v1 = render(run_suite("process"));
    const std::string v2 = render(run_suite("process"));
    const Outcome d = check_sim_determinism();
    const bool pass =
        w1.str() == w2.str() && p1.values == p2.values && v1 == v2 && d.pass;
    return {pass, std::string("emissions byte-identical: ") +
                      (w1.str() == w2.str() ? "yes" : "no") +
                      "; verify rendering byte-identical: " +
                      (v1 == v2 ? "yes" : "no") + "; " + d.detail};
}

std::vector<CheckResult> suite_acceptance() {
    std::vector<CheckResult> out;
    out.push_back(timed("acceptance", "C1 exact mixture identities n<=200", accept_c1));
    out.push_back(timed("acceptance", "C2 mixture-fourier equivalence n=1..6", accept_c2));
    out.push_back(timed("acceptance", "C3 quartic tail at |x|=200", check_student3_tail));
    out.push_back(timed("acceptance", "C4 Levy-Khinchin identities", [] {
        const Outcome vg = check_levy_khinchin_vg();
        const Outcome st = check_levy_khinchin_student();
        return Outcome{vg.pass && st.pass, vg.detail + "; " + st.detail};
    }));
    out.push_back(timed("acceptance", "C5 triplet cross-validation", accept_c5));
    out.push_back(timed("acceptance", "C6 VG process checks", accept_c6));
    out.push_back(timed("acceptance", "C7 gaussian limit at t=1e4", [] {
        const double d = gaussian_limit_distance(1e4, make_grid(-5.0, 5.0, 101));
        // The sup distance is exactly of order t^{-1/2}: the leading error
        // term e^{-u^2/2} u^3/(3 sqrt t) peaks at 0.3862/sqrt(t), so at
        // t = 1e4 the best achievable sup on |u| <= 5 is ~3.86e-3 and the
        // stated 1e-3 bound first holds near t = 1.5e5.
        const double predicted = std::sqrt(27.0) * std::exp(-1.5) / 3.0 / std::sqrt(1e4);
        std::ostringstream os;
        os << "sup |chf^t - gaussian| = " << fmt(d) << " (limit 0.001; exact leading"
           << " asymptote " << fmt(predicted) << " -- the bound is unattainable at"
           << " t=1e4, reached only for t >~ 1.5e5)";
        return Outcome{d <= 1e-3, os.str()};
    }));
    out.push_back(timed("acceptance", "C8 monte carlo statistics", accept_c8));
    out.push_back(timed("acceptance", "C9 determinism", accept_c9));
    return out;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"specfun", "laws", "process", "mixture", "triplet", "simulate",
            "acceptance"};
}

std::vector<CheckResult> run_suite(const std::string& name) {
    if (name == "specfun") return suite_specfun();
    if (name == "laws") return suite_laws();
    if (name == "process") return suite_process();
    if (name == "mixture") return suite_mixture();
    if (name == "triplet") return suite_triplet();
    if (name == "simulate") return suite_simulate();
    if (name == "acceptance") return suite_acceptance();
    if (name == "all") {
        std::vector<CheckResult> out;
        for (const auto& s : suite_names()) {
            auto r = run_suite(s);
            out.insert(out.end(), r.begin(), r.end());
        }
        return out;
    }
    throw std::domain_error("unknown suite: " + name);
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

std::string render(const std::vector<CheckResult>& results, bool timings) {
    std::ostringstream os;
    std::size_t width = 0;
    for (const auto& r : results)
        width = std::max(width, r.suite.size() + r.name.size() + 3);
    for (const auto& r : results) {
        std::string label = r.suite + " / " + r.name;
        label.resize(width, ' ');
        os << (r.pass ? "[PASS] " : "[FAIL] ") << label;
        if (timings) {
            char secs[32];
            std::snprintf(secs, sizeof(secs), "%8.2fs", r.seconds);
            os << secs;
        }
        os << "  " << r.detail << "\n";
    }
    os << (all_passed(results) ? "all checks passed" : "FAILURES present") << " ("
       << results.size() << " checks)\n";
    return os.str();
}

}  // namespace levymix::verify
