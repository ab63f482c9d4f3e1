#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "levymix/errors.hpp"
#include "levymix/grid.hpp"
#include "levymix/laws.hpp"
#include "levymix/mixture.hpp"
#include "levymix/process.hpp"
#include "levymix/simulate.hpp"
#include "levymix/specfun.hpp"
#include "levymix/triplet.hpp"
#include "levymix/verify.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace levymix;

PYBIND11_MODULE(_levymix, m) {
    m.doc() = "Variance Gamma / Student Levy processes: densities, chfs, exact "
              "mixture weights, Levy triplets and OU simulation";
    m.attr("__version__") = "0.1.0";

    // special functions
    m.def("bessel_k_half", py::vectorize(&bessel_k_half), "n"_a, "z"_a);
    m.def("bessel_k", py::vectorize(&bessel_k), "nu"_a, "z"_a);
    m.def("log_bessel_k", py::vectorize(&log_bessel_k), "nu"_a, "z"_a);
    m.def("upper_gamma", &upper_gamma_complex, "a"_a, "z"_a);
    m.def("sin_integral", py::vectorize(&sin_integral), "x"_a);
    m.def("cos_integral", py::vectorize(&cos_integral), "x"_a);
    m.def("log_gamma", py::vectorize(&log_gamma), "x"_a);
    m.def("beta", py::vectorize(&beta), "a"_a, "b"_a);

    // laws
    m.def("vg_pdf",
          py::vectorize([](double lam, double alpha, double x) {
              return vg_pdf(VGParams(lam, alpha), x);
          }),
          "lam"_a, "alpha"_a, "x"_a);
    m.def("vg_chf",
          py::vectorize([](double lam, double alpha, double u) {
              return vg_chf(VGParams(lam, alpha), u);
          }),
          "lam"_a, "alpha"_a, "u"_a);
    m.def("vg_moment",
          [](double lam, double alpha, int order) {
              return vg_moment(VGParams(lam, alpha), order);
          },
          "lam"_a, "alpha"_a, "order"_a);
    m.def("vg_variance",
          [](double lam, double alpha) { return vg_variance(VGParams(lam, alpha)); },
          "lam"_a, "alpha"_a);
    m.def("student_pdf",
          py::vectorize([](double nu, double delta, double x) {
              return student_pdf(StudentParams(nu, delta), x);
          }),
          "nu"_a, "delta"_a, "x"_a);
    m.def("student_chf",
          py::vectorize([](double nu, double delta, double u) {
              return student_chf(StudentParams(nu, delta), u);
          }),
          "nu"_a, "delta"_a, "u"_a);
    m.def("student_chf_odd", py::vectorize(&student_chf_odd), "n"_a, "u"_a);
    m.def("student_moment",
          [](double nu, double delta, int order) {
              return student_moment(StudentParams(nu, delta), order);
          },
          "nu"_a, "delta"_a, "order"_a);
    m.def("student_variance",
          [](double nu, double delta) {
              return student_variance(StudentParams(nu, delta));
          },
          "nu"_a, "delta"_a);
    m.def("gh_pdf",
          py::vectorize([](double lam, double alpha, double delta, double x) {
              return gh_pdf(GHParams(lam, alpha, delta), x);
          }),
          "lam"_a, "alpha"_a, "delta"_a, "x"_a);
    m.def("gh_chf",
          py::vectorize([](double lam, double alpha, double delta, double u) {
              return gh_chf(GHParams(lam, alpha, delta), u);
          }),
          "lam"_a, "alpha"_a, "delta"_a, "u"_a);

    // process
    m.def("vg_transition_pdf", py::vectorize(&vg_transition_pdf), "lam"_a, "x"_a,
          "t"_a, "reduced units: alpha = 1, T = 1");
    m.def("student3_transition_pdf", py::vectorize(&student3_transition_pdf), "x"_a,
          "t"_a);
    m.def("student3_tail_coefficient", &student3_tail_coefficient, "t"_a);
    m.def("gaussian_limit_distance", &gaussian_limit_distance, "t"_a, "u_grid"_a);
    m.def(
        "invert_chf",
        [](const std::function<double(double)>& chf, const std::vector<double>& xs,
           double truncation_M, int panels) {
            const GridFunction g = invert_chf(chf, xs, truncation_M, panels);
            return py::make_tuple(g.xs, g.values);
        },
        "chf"_a, "xs"_a, "truncation_M"_a = 60.0, "panels"_a = 0);

    // mixture
    m.def(
        "mixture_weights",
        [](int n) {
            const MixtureWeights w = mixture_weights(n);
            std::vector<double> vals;
            std::vector<std::string> rats;
            for (int k = 0; k <= n; ++k) {
                vals.push_back(w.value(k));
                rats.push_back(w.rational(k));
            }
            return py::make_tuple(vals, rats);
        },
        "n"_a, "returns (decimal weights, exact rationals), k = 0..n");
    m.def("mixture_pdf", py::vectorize([](double x, int n) { return mixture_pdf(x, n); }),
          "x"_a, "n"_a);

    // triplet
    m.def("w_vg", py::vectorize(&w_vg), "z"_a, "lam"_a);
    m.def("w_student3", py::vectorize(&w_student3), "z"_a);
    m.def("numeric_w", &numeric_w, "chf"_a, "chf_derivative"_a, "z"_a, "M"_a);
    m.def("numeric_a", &numeric_a, "chf"_a, "chf_derivative"_a, "M"_a,
          "eps_sequence"_a = std::vector<double>{0.2, 0.1, 0.05, 0.025});
    m.def("numeric_b", &numeric_b, "chf"_a, "chf_derivative"_a, "M"_a,
          "eps_sequence"_a = std::vector<double>{0.2, 0.1, 0.05, 0.025});

    // simulate
    m.def(
        "sample_increments",
        [](const std::string& noise, int count, std::uint64_t seed) {
            CounterRng rng = CounterRng::for_path(seed, 0);
            const NoiseKind kind = noise_from_name(noise);
            std::vector<double> out(count);
            for (int i = 0; i < count; ++i) out[i] = sample_increment(kind, rng);
            return out;
        },
        "noise"_a, "count"_a, "seed"_a);
    m.def("student3_quantile", py::vectorize(&student3_quantile), "p"_a);
    m.def(
        "ou_path",
        [](const std::string& noise, double k, std::optional<double> q, int steps,
           double y0, std::uint64_t seed) {
            const TrajectoryRecord r =
                ou_path(noise_from_name(noise), ForceSpec(k, q), steps, y0, seed);
            return py::make_tuple(r.values, r.escapes);
        },
        "noise"_a, "k"_a, "q"_a, "steps"_a, "y0"_a = 0.0, "seed"_a = 1);
    m.def(
        "escape_stats",
        [](const std::string& noise, double k, double q, int n_paths, int steps,
           std::uint64_t seed) {
            const EscapeStats s =
                escape_stats(noise_from_name(noise), k, q, n_paths, steps, seed);
            py::dict d;
            d["noise"] = noise;
            d["k"] = s.k;
            d["q"] = s.q;
            d["n_paths"] = s.n_paths;
            d["steps"] = s.steps;
            d["escape_fraction"] = s.escape_fraction;
            d["mean_first_escape"] = s.mean_first_escape;
            d["seed"] = s.seed;
            return d;
        },
        "noise"_a, "k"_a, "q"_a, "n_paths"_a, "steps"_a, "seed"_a);

    // verification
    m.def(
        "run_suite",
        [](const std::string& name) {
            py::list out;
            for (const auto& r : verify::run_suite(name)) {
                py::dict d;
                d["suite"] = r.suite;
                d["name"] = r.name;
                d["pass"] = r.pass;
                d["detail"] = r.detail;
                d["seconds"] = r.seconds;
                out.append(d);
            }
            return out;
        },
        "name"_a);

    py::register_exception<numeric_error>(m, "NumericError", PyExc_ArithmeticError);
}
