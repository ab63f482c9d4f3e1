// levymix command line: densities, chfs, mixture weights, Levy triplets,
// verification suites and path simulation, emitting figure-ready CSV/JSON.
#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "levymix/emit.hpp"
#include "levymix/errors.hpp"
#include "levymix/grid.hpp"
#include "levymix/laws.hpp"
#include "levymix/mixture.hpp"
#include "levymix/process.hpp"
#include "levymix/simulate.hpp"
#include "levymix/triplet.hpp"
#include "levymix/verify.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr double kPi = 3.14159265358979323846;

using levymix::emit::g17;

enum ExitCode { kOk = 0, kDomainError = 1, kNumericError = 2, kVerifyFailed = 3 };

struct GridSpec {
    double min = -10.0, max = 10.0;
    int count = 401;
};

GridSpec parse_grid(const std::string& s) {
    GridSpec g;
    if (std::sscanf(s.c_str(), "%lf:%lf:%d", &g.min, &g.max, &g.count) != 3)
        throw std::domain_error("grid must be min:max:count, got '" + s + "'");
    return g;
}

void write_text(const std::string& path, const std::string& body) {
    if (path.empty() || path == "-") {
        std::cout << body;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::domain_error("cannot open output file " + path);
    out << body;
}

std::string csv_header(const std::string& extra = "") {
    std::string h = std::string("# levymix ") + kVersion;
    if (!extra.empty()) h += " " + extra;
    return h + "\n";
}

struct LawOptions {
    std::string law = "student3";
    double lambda = 1.0;
    double alpha = 1.0;
    double nu = 3.0;
    double delta = 1.0;
    double sigma = 1.0;
    double T = 1.0;
};

void add_law_options(CLI::App* cmd, LawOptions& law) {
    cmd->add_option("--law", law.law,
                    "law family: vg | student | student3 | gh | normal | cauchy")
        ->default_val("student3");
    cmd->add_option("--lambda", law.lambda, "VG / GH type index");
    cmd->add_option("--alpha", law.alpha, "VG / GH inverse spatial scale");
    cmd->add_option("--nu", law.nu, "Student tail index");
    cmd->add_option("--delta", law.delta, "Student / GH / Cauchy scale");
    cmd->add_option("--sigma", law.sigma, "Normal scale");
    cmd->add_option("--time-scale", law.T, "time scale T of the process")
        ->default_val(1.0);
}

levymix::LawParams make_law(const LawOptions& o) {
    if (o.law == "vg") return levymix::VGParams(o.lambda, o.alpha);
    if (o.law == "student") return levymix::StudentParams(o.nu, o.delta);
    if (o.law == "student3") return levymix::StudentParams(3.0, o.delta);
    if (o.law == "gh") return levymix::GHParams(o.lambda, o.alpha, o.delta);
    if (o.law == "normal") return levymix::NormalParams(o.sigma);
    if (o.law == "cauchy") return levymix::CauchyParams(o.delta);
    throw std::domain_error("unknown law: " + o.law);
}

// Transition density over elapsed time t for the requested law, routed to the
// closed forms where they exist and to numeric chf inversion otherwise.
levymix::GridFunction transition_density(const LawOptions& o, double t,
                                         const std::vector<double>& xs,
                                         double tol) {
    using namespace levymix;
    const double s = t / o.T;
    if (!(s > 0.0)) throw std::domain_error("t must be > 0");
    GridFunction g;
    g.xs = xs;
    g.values.resize(xs.size());

    if (o.law == "vg") {
        for (std::size_t i = 0; i < xs.size(); ++i)
            g.values[i] = o.alpha * vg_transition_pdf(o.lambda, o.alpha * xs[i], s);
        return g;
    }
    if (o.law == "student3") {
        const double n_round = std::round(s);
        if (std::fabs(s - n_round) < 1e-12 && n_round >= 1.0 && n_round <= 500.0) {
            const MixtureWeights w = mixture_weights(static_cast<int>(n_round));
            for (std::size_t i = 0; i < xs.size(); ++i)
                g.values[i] = mixture_pdf(w, xs[i] / o.delta) / o.delta;
        } else {
            for (std::size_t i = 0; i < xs.size(); ++i)
                g.values[i] = student3_transition_pdf(xs[i] / o.delta, s) / o.delta;
        }
        return g;
    }
    if (o.law == "normal") {
        const NormalParams p(o.sigma * std::sqrt(s));
        for (std::size_t i = 0; i < xs.size(); ++i) g.values[i] = normal_pdf(p, xs[i]);
        return g;
    }
    if (o.law == "cauchy") {
        const CauchyParams p(o.delta * s);
        for (std::size_t i = 0; i < xs.size(); ++i) g.values[i] = cauchy_pdf(p, xs[i]);
        return g;
    }
    // student (general nu) and gh: the law itself at s = 1, numeric inversion
    // of [phi]^s otherwise
    const LawParams law = make_law(o);
    if (s == 1.0) {
        for (std::size_t i = 0; i < xs.size(); ++i) g.values[i] = law_pdf(law, xs[i]);
        return g;
    }
    const auto chf = [&law, s](double u) {
        const double phi = law_chf(law, u);
        return std::exp(s * std::log(phi));
    };
    return invert_chf(chf, xs, 60.0, 0, tol);
}

int cmd_pdf(const LawOptions& law, double t, const GridSpec& grid, double tol,
            const std::string& out) {
    const std::vector<double> xs = levymix::make_grid(grid.min, grid.max, grid.count);
    const levymix::GridFunction g = transition_density(law, t, xs, tol);
    std::ostringstream os;
    os << csv_header("pdf law=" + law.law + " t=" + g17(t));
    os << "x,pdf\n";
    for (std::size_t i = 0; i < xs.size(); ++i)
        os << g17(g.xs[i]) << ',' << g17(g.values[i]) << '\n';
    write_text(out, os.str());
    return kOk;
}

int cmd_chf(const LawOptions& law, double t, const GridSpec& grid,
            const std::string& out) {
    const levymix::ProcessSpec spec{make_law(law), law.T};
    const std::vector<double> us = levymix::make_grid(grid.min, grid.max, grid.count);
    std::ostringstream os;
    os << csv_header("chf law=" + law.law + " t=" + g17(t));
    os << "u,chf\n";
    for (const double u : us)
        os << g17(u) << ',' << g17(levymix::transition_chf(spec, u, t)) << '\n';
    write_text(out, os.str());
    return kOk;
}

int cmd_weights(int n, int n_max, const std::string& out) {
    std::ostringstream os;
    os << csv_header("weights");
    if (n > 0) {
        const levymix::MixtureWeights w = levymix::mixture_weights(n);
        os << "n,k,q_decimal,q_rational\n";
        for (int k = 0; k <= n; ++k)
            os << n << ',' << k << ',' << g17(w.value(k)) << ',' << w.rational(k)
               << '\n';
    } else {
        levymix::weights_csv(os, n_max);
    }
    write_text(out, os.str());
    return kOk;
}

int cmd_triplet(const LawOptions& law, const GridSpec& grid, bool numeric,
                const std::string& out) {
    using namespace levymix;
    const std::vector<double> zs = make_grid(grid.min, grid.max, grid.count);
    std::ostringstream os;

    Chf chf, dchf;
    std::function<double(double)> w_closed;
    double M = 600.0;
    double A = 0.0, B = 0.0;
    if (law.law == "vg") {
        const double lam = law.lambda;
        chf = [lam](double u) { return std::pow(1.0 + u * u, -lam); };
        dchf = [lam](double u) {
            return -2.0 * lam * u * std::pow(1.0 + u * u, -lam - 1.0);
        };
        w_closed = [lam](double z) { return w_vg(z, lam); };
        M = 2000.0;
    } else if (law.law == "student3") {
        chf = [](double u) {
            const double au = std::fabs(u);
            return std::exp(-au) * (1.0 + au);
        };
        dchf = [](double u) {
            const double au = std::fabs(u);
            return -((u >= 0.0) ? 1.0 : -1.0) * au * std::exp(-au);
        };
        w_closed = [](double z) { return w_student3(z); };
    } else if (law.law == "wiener" || law.law == "normal") {
        chf = [](double u) { return std::exp(-0.5 * u * u); };
        dchf = [](double u) { return -u * std::exp(-0.5 * u * u); };
        const LevyTriplet t = reference_triplet(ReferenceProcess::Wiener);
        w_closed = t.W;
        B = t.B;
        M = 20.0;
    } else if (law.law == "cauchy") {
        chf = [](double u) { return std::exp(-std::fabs(u)); };
        dchf = [](double u) {
            return -((u >= 0.0) ? 1.0 : -1.0) * std::exp(-std::fabs(u));
        };
        const LevyTriplet t = reference_triplet(ReferenceProcess::Cauchy);
        w_closed = t.W;
    } else {
        throw std::domain_error("triplet: law must be vg | student3 | wiener | cauchy");
    }

    if (numeric) {
        A = numeric_a(chf, dchf, M);
        B = numeric_b(chf, dchf, M);
    }
    os << csv_header("triplet law=" + law.law + " A=" + g17(A) + " B=" + g17(B) +
                     (numeric ? " (numeric)" : " (closed form)"));
    os << "z,w\n";
    for (const double z : zs) {
        if (z == 0.0) continue;  // non-integrable point of the Levy density
        const double wv = numeric ? numeric_w(chf, dchf, z, M) : w_closed(z);
        os << g17(z) << ',' << g17(wv) << '\n';
    }
    write_text(out, os.str());
    return kOk;
}

int cmd_verify(const std::string& suite, bool timings, const std::string& out) {
    const auto results = levymix::verify::run_suite(suite);
    write_text(out, levymix::verify::render(results, timings));
    return levymix::verify::all_passed(results) ? kOk : kVerifyFailed;
}

int cmd_simulate(const std::string& noise, double k, std::optional<double> q,
                 int steps, int paths, double y0, std::uint64_t seed,
                 const std::string& out) {
    using namespace levymix;
    const NoiseKind kind = noise_from_name(noise);
    if (paths == 1) {
        const ForceSpec force(k, q);
        const TrajectoryRecord rec = ou_path(kind, force, steps, y0, seed);
        std::ostringstream os;
        os << csv_header("simulate noise=" + noise + " seed=" + std::to_string(seed));
        os << "step,y\n";
        for (int m = 0; m < static_cast<int>(rec.values.size()); ++m)
            os << m << ',' << g17(rec.values[m]) << '\n';
        write_text(out, os.str());
        return kOk;
    }
    if (!q) throw std::domain_error("simulate: --q required when --paths > 1");
    const EscapeStats st = escape_stats(kind, k, *q, paths, steps, seed);
    nlohmann::ordered_json j;
    j["noise"] = noise;
    j["k"] = st.k;
    j["q"] = st.q;
    j["n_paths"] = st.n_paths;
    j["steps"] = st.steps;
    j["escape_fraction"] = st.escape_fraction;
    if (std::isnan(st.mean_first_escape))
        j["mean_first_escape"] = nullptr;
    else
        j["mean_first_escape"] = st.mean_first_escape;
    j["seed"] = st.seed;
    write_text(out, j.dump(2) + "\n");
    return kOk;
}

// figure-ready presets
int cmd_fig_weights(const std::string& out) { return cmd_weights(0, 20, out); }

int cmd_fig_levy_density(const std::string& out) {
    std::ostringstream os;
    os << csv_header("levy-density preset lambda=1");
    const std::vector<double> zs = levymix::make_grid(0.05, 5.0, 100);
    levymix::triplet_csv(os, zs, 1.0);
    write_text(out, os.str());
    return kOk;
}

int cmd_fig_ou_paths(std::uint64_t seed, const std::string& out) {
    using namespace levymix;
    const int steps = 5000;
    const double k = 0.1, q = 8.0;
    const TrajectoryRecord a =
        ou_path(NoiseKind::Normal01, ForceSpec(k, std::nullopt), steps, 0.0, seed);
    const TrajectoryRecord b =
        ou_path(NoiseKind::VG_1_sqrt2, ForceSpec(k, std::nullopt), steps, 0.0, seed + 1);
    const TrajectoryRecord c =
        ou_path(NoiseKind::Student3_1, ForceSpec(k, std::nullopt), steps, 0.0, seed + 2);
    const TrajectoryRecord d =
        ou_path(NoiseKind::Student3_1, ForceSpec(k, q), steps, 0.0, seed + 2);
    std::ostringstream os;
    os << csv_header("ou-paths preset k=0.1 q=8 seed=" + std::to_string(seed));
    os << "step,ou_normal,ou_vg,ou_student,ou_student_cutoff\n";
    for (int m = 0; m <= steps; ++m)
        os << m << ',' << g17(a.values[m]) << ',' << g17(b.values[m]) << ','
           << g17(c.values[m]) << ',' << g17(d.values[m]) << '\n';
    write_text(out, os.str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Variance Gamma / Student Levy process toolkit"};
    app.set_version_flag("--version", kVersion);
    app.set_config("--config", "", "flat key=value config file; flags override it");
    app.require_subcommand(1);

    LawOptions law;
    GridSpec grid;
    std::string grid_str;
    std::string out;
    double t = 1.0;
    double tol = 1e-9;
    int n = 0, n_max = 20;
    bool numeric = false;
    std::string suite = "all";
    std::string noise = "student";
    double k = 0.1;
    double q_val = 8.0;
    int steps = 5000, paths = 1;
    double y0 = 0.0;
    std::uint64_t seed = 1;

    const auto add_common = [&](CLI::App* cmd, bool with_grid) {
        cmd->add_option("--out,-o", out, "output path (default stdout)");
        if (with_grid)
            cmd->add_option("--grid", grid_str, "evaluation grid min:max:count");
    };

    auto* pdf = app.add_subcommand("pdf", "transition density on a grid");
    add_law_options(pdf, law);
    pdf->add_option("--t", t, "elapsed time")->default_val(1.0);
    pdf->add_option("--tol", tol, "absolute tolerance of numeric chf inversion")
        ->default_val(1e-9);
    add_common(pdf, true);

    auto* chf = app.add_subcommand("chf", "transition chf on a grid");
    add_law_options(chf, law);
    chf->add_option("--t", t, "elapsed time")->default_val(1.0);
    add_common(chf, true);

    auto* weights = app.add_subcommand("weights", "exact mixture weights CSV");
    weights->add_option("--n", n, "single time index n");
    weights->add_option("--nmax", n_max, "emit all n up to this bound")
        ->default_val(20);
    add_common(weights, false);

    auto* triplet = app.add_subcommand("triplet", "Levy density / triplet emission");
    add_law_options(triplet, law);
    triplet->add_flag("--numeric", numeric,
                      "extract (A, B, W) numerically from the chf");
    add_common(triplet, true);

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", suite,
                       "specfun | laws | process | mixture | triplet | simulate | "
                       "acceptance | all")
        ->default_val("all");
    bool timings = false;
    verify->add_flag("--timings", timings, "include per-check wall-clock times");
    add_common(verify, false);

    auto* simulate = app.add_subcommand("simulate", "OU paths and escape statistics");
    simulate->add_option("--noise", noise, "normal | vg | student")
        ->default_val("student");
    simulate->add_option("--k", k, "restoring stiffness")->default_val(0.1);
    auto* qopt = simulate->add_option("--q", q_val, "force range cutoff");
    simulate->add_option("--steps", steps, "steps per path")->default_val(5000);
    simulate->add_option("--paths", paths, "1: trajectory CSV; >1: stats JSON")
        ->default_val(1);
    simulate->add_option("--y0", y0, "initial condition")->default_val(0.0);
    simulate->add_option("--seed", seed, "RNG seed")->default_val(1);
    add_common(simulate, false);

    auto* figw = app.add_subcommand("fig-weights", "preset: mixture weights, n <= 20");
    add_common(figw, false);
    auto* figd = app.add_subcommand("fig-levy-density",
                                    "preset: Levy densities of T(3) and VG");
    add_common(figd, false);
    auto* figp = app.add_subcommand("fig-ou-paths", "preset: four OU sample paths");
    figp->add_option("--seed", seed, "RNG seed")->default_val(1);
    add_common(figp, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (!grid_str.empty()) grid = parse_grid(grid_str);
        if (pdf->parsed()) return cmd_pdf(law, t, grid, tol, out);
        if (chf->parsed()) {
            if (grid_str.empty()) grid = GridSpec{-20.0, 20.0, 401};
            return cmd_chf(law, t, grid, out);
        }
        if (weights->parsed()) return cmd_weights(n, n_max, out);
        if (triplet->parsed()) {
            if (grid_str.empty()) grid = GridSpec{0.05, 5.0, 100};
            return cmd_triplet(law, grid, numeric, out);
        }
        if (verify->parsed()) return cmd_verify(suite, timings, out);
        if (simulate->parsed())
            return cmd_simulate(noise, k,
                                qopt->count() ? std::optional<double>(q_val)
                                              : std::nullopt,
                                steps, paths, y0, seed, out);
        if (figw->parsed()) return cmd_fig_weights(out);
        if (figd->parsed()) return cmd_fig_levy_density(out);
        if (figp->parsed()) return cmd_fig_ou_paths(seed, out);
    } catch (const levymix::numeric_error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kNumericError;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kDomainError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    }
    return kOk;
}
