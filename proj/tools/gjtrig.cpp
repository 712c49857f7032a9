// Command-line front end: identity-verification suites, function evaluation,
// dynamics simulation and configuration sampling with machine-readable
// output.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gjtrig/dynamics.hpp"
#include "gjtrig/gjelliptic.hpp"
#include "gjtrig/mdim.hpp"
#include "gjtrig/suites.hpp"

using nlohmann::json;

namespace {

json report_to_json(const gjtrig::SuiteReport& rep) {
    json entries = json::array();
    for (const auto& e : rep.entries) {
        entries.push_back({{"identity", e.identity},
                           {"max_residual", e.max_residual},
                           {"tolerance", e.tolerance},
                           {"informational", e.informational},
                           {"pass", e.informational || e.max_residual <= e.tolerance}});
    }
    return {{"suite", rep.suite}, {"trials", rep.trials},   {"seed", rep.seed},
            {"tol_scale", rep.tol_scale}, {"pass", rep.pass()}, {"identities", entries}};
}

int run_verify(const std::string& suite, int trials, std::uint64_t seed, double tol_scale) {
    std::vector<std::string> names;
    if (suite == "all")
        names = gjtrig::suite_names();
    else
        names.push_back(suite);
    json out{{"schema", 1}, {"seed", seed}, {"trials", trials}, {"tol_scale", tol_scale}};
    json suites = json::array();
    bool pass = true;
    for (const auto& name : names) {
        const gjtrig::SuiteReport rep = gjtrig::run_suite(name, trials, seed, tol_scale);
        pass = pass && rep.pass();
        suites.push_back(report_to_json(rep));
        std::fprintf(stderr, "suite %-22s %s  (%.2fs)\n", rep.suite.c_str(),
                     rep.pass() ? "pass" : "FAIL", rep.wall_seconds);
    }
    out["suites"] = suites;
    out["pass"] = pass;
    std::cout << out.dump(2) << "\n";
    return pass ? 0 : 1;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int simulate_top3(const json& params, double t0, double t1, double rel_tol, std::ostream& os) {
    const auto iv = params.at("I").get<std::vector<double>>();
    const auto mv = params.at("M0").get<std::vector<double>>();
    if (iv.size() != 3 || mv.size() != 3) throw gjtrig::domain_error("I and M0 must have 3 entries");
    const gjtrig::Inertia3 in(iv[0], iv[1], iv[2]);
    const Eigen::Vector3d m0(mv[0], mv[1], mv[2]);
    bool closed_ok = true;
    std::unique_ptr<gjtrig::Euler3ClosedForm> cf;
    try {
        cf = std::make_unique<gjtrig::Euler3ClosedForm>(in, m0, t0);
    } catch (const gjtrig::domain_error&) {
        closed_ok = false;
    }
    auto rhs = [&](double, const Eigen::VectorXd& y) {
        return Eigen::VectorXd(gjtrig::euler3_rhs(Eigen::Vector3d(y), in));
    };
    std::vector<double> ts;
    const int samples = 200;
    for (int i = 0; i <= samples; ++i) ts.push_back(t0 + (t1 - t0) * i / samples);
    const gjtrig::ScalarField h1 = gjtrig::euler3_energy(in), h2 = gjtrig::euler3_momentum_sq();
    const gjtrig::Trajectory tr =
        gjtrig::integrate(rhs, m0, t0, t1, rel_tol, ts,
                          {[&](const Eigen::VectorXd& y) { return h1.value(y); },
                           [&](const Eigen::VectorXd& y) { return h2.value(y); }});
    os << "t,M1,M2,M3,H1,H2" << (closed_ok ? ",closed_form_error" : "") << "\n";
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
        os << fmt(tr.times[i]);
        for (int c = 0; c < 3; ++c) os << "," << fmt(tr.states[i][c]);
        os << "," << fmt(tr.conserved[i][0]) << "," << fmt(tr.conserved[i][1]);
        if (closed_ok) {
            const double err =
                ((*cf)(tr.times[i]) - Eigen::Vector3d(tr.states[i])).lpNorm<Eigen::Infinity>();
            os << "," << fmt(err);
        }
        os << "\n";
    }
    return 0;
}

int simulate_top4(const json& params, double t0, double t1, double rel_tol, std::ostream& os) {
    const auto av = params.at("A").get<std::vector<double>>();
    if (av.size() != 4) throw gjtrig::domain_error("A must have 4 entries");
    const Eigen::Vector4d amp(av[0], av[1], av[2], av[3]);
    const double rate = params.at("K").get<double>();
    const double k1 = params.at("k1").get<double>(), k2 = params.at("k2").get<double>();
    const Eigen::Vector4d coeff = gjtrig::euler4_coefficients(amp, rate, k1, k2);
    const gjtrig::Euler4ClosedForm cf{amp, rate, k1, k2, t0};
    const gjtrig::Nambu4Params np = gjtrig::fit_nambu4_params(coeff);
    auto rhs = [&](double, const Eigen::VectorXd& y) {
        Eigen::VectorXd out(4);
        out << coeff[0] * y[1] * y[2] * y[3], coeff[1] * y[0] * y[2] * y[3],
            coeff[2] * y[0] * y[1] * y[3], coeff[3] * y[0] * y[1] * y[2];
        return out;
    };
    std::vector<double> ts;
    const int samples = 200;
    for (int i = 0; i <= samples; ++i) ts.push_back(t0 + (t1 - t0) * i / samples);
    const gjtrig::ScalarField h1 = gjtrig::euler4_h1();
    const gjtrig::ScalarField h2 = gjtrig::euler4_weighted(np.alpha), h3 = gjtrig::euler4_weighted(np.beta);
    const gjtrig::Trajectory tr =
        gjtrig::integrate(rhs, cf(t0), t0, t1, rel_tol, ts,
                          {[&](const Eigen::VectorXd& y) { return h1.value(y); },
                           [&](const Eigen::VectorXd& y) { return h2.value(y); },
                           [&](const Eigen::VectorXd& y) { return h3.value(y); }});
    os << "t,M1,M2,M3,M4,H1,H2,H3,closed_form_error\n";
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
        os << fmt(tr.times[i]);
        for (int c = 0; c < 4; ++c) os << "," << fmt(tr.states[i][c]);
        for (int c = 0; c < 3; ++c) os << "," << fmt(tr.conserved[i][static_cast<std::size_t>(c)]);
        os << "," << fmt((cf(tr.times[i]) - Eigen::Vector4d(tr.states[i])).lpNorm<Eigen::Infinity>());
        os << "\n";
    }
    return 0;
}

int simulate_dell(const json& params, double t0, double t1, double rel_tol, std::ostream& os) {
    const gjtrig::DELLParams dp(params.at("g").get<double>(), params.at("ktilde").get<double>());
    const double energy = params.at("E").get<double>();
    const gjtrig::DellClosedForm cf(dp, energy, t0);
    const gjtrig::Vector6cd x0 = cf(t0);
    const gjtrig::Vector4cd leaf = gjtrig::dell_quadric_values(x0, dp);
    auto rhs = [&](double, const Eigen::VectorXd& y) {
        gjtrig::Vector6cd x;
        for (int i = 0; i < 6; ++i) x[i] = std::complex<double>(y[i], y[6 + i]);
        const gjtrig::Vector6cd dx = gjtrig::dell_quadric_rhs(x, dp, leaf, 1e-2);
        Eigen::VectorXd out(12);
        for (int i = 0; i < 6; ++i) {
            out[i] = dx[i].real();
            out[6 + i] = dx[i].imag();
        }
        return out;
    };
    Eigen::VectorXd y0(12);
    for (int i = 0; i < 6; ++i) {
        y0[i] = x0[i].real();
        y0[6 + i] = x0[i].imag();
    }
    std::vector<double> ts;
    const int samples = 200;
    for (int i = 0; i <= samples; ++i) ts.push_back(t0 + (t1 - t0) * i / samples);
    const gjtrig::Trajectory tr = gjtrig::integrate(rhs, y0, t0, t1, rel_tol, ts);
    os << "t";
    for (int c = 1; c <= 6; ++c) os << ",x" << c << "_re,x" << c << "_im";
    os << ",Q1_re,Q1_im,Q2_re,Q2_im,Q3_re,Q3_im,Q4_re,Q4_im,closed_form_error\n";
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
        os << fmt(tr.times[i]);
        gjtrig::Vector6cd x;
        for (int c = 0; c < 6; ++c) {
            x[c] = std::complex<double>(tr.states[i][c], tr.states[i][6 + c]);
            os << "," << fmt(x[c].real()) << "," << fmt(x[c].imag());
        }
        const gjtrig::Vector4cd q = gjtrig::dell_quadric_values(x, dp);
        for (int c = 0; c < 4; ++c) os << "," << fmt(q[c].real()) << "," << fmt(q[c].imag());
        const gjtrig::Vector6cd xc = cf(tr.times[i]);
        double err = 0.0;
        for (int c = 0; c < 6; ++c) err = std::max(err, std::abs(xc[c] - x[c]));
        os << "," << fmt(err) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperspherical trigonometry / elliptic function toolkit"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run identity-verification suites");
    std::string suite = "all";
    int trials = 100;
    std::uint64_t seed = 1;
    double tol_scale = 1.0;
    verify->add_option("--suite", suite, "suite name or 'all'");
    verify->add_option("--trials", trials, "number of random trials");
    verify->add_option("--seed", seed, "master seed");
    verify->add_option("--tol-scale", tol_scale, "multiplier applied to all tolerances");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate special functions");
    eval->require_subcommand(1);
    double u = 0.0, k = 0.5, k1 = 0.8, k2 = 0.3, phi = 0.0;
    auto* eval_gj = eval->add_subcommand("gj", "generalized two-modulus functions");
    eval_gj->add_option("--u", u)->required();
    eval_gj->add_option("--k1", k1)->required();
    eval_gj->add_option("--k2", k2)->required();
    auto* eval_jac = eval->add_subcommand("jacobi", "sn, cn, dn");
    eval_jac->add_option("--u", u)->required();
    eval_jac->add_option("--k", k)->required();
    auto* eval_k = eval->add_subcommand("K", "complete integral of the first kind");
    eval_k->add_option("--k", k)->required();
    auto* eval_f = eval->add_subcommand("F", "incomplete integral of the first kind");
    eval_f->add_option("--phi", phi)->required();
    eval_f->add_option("--k", k)->required();

    // simulate
    auto* sim = app.add_subcommand("simulate", "integrate a dynamical system and compare closed forms");
    std::string system;
    sim->add_option("system", system, "top3 | top4 | dell")->required();
    double t0 = 0.0, t1 = 10.0, rel_tol = 1e-10;
    std::string params_path, out_path;
    std::uint64_t sim_seed = 1;
    sim->add_option("--t0", t0);
    sim->add_option("--t1", t1);
    sim->add_option("--rel-tol", rel_tol);
    sim->add_option("--seed", sim_seed);
    sim->add_option("--params", params_path, "JSON parameter file")->required();
    sim->add_option("--out", out_path, "CSV output path (default stdout)");

    // sample
    auto* sample = app.add_subcommand("sample", "emit a random unit-vector configuration");
    int m = 4;
    std::uint64_t sample_seed = 1;
    sample->add_option("--m", m, "number of vertices (3..8)");
    sample->add_option("--seed", sample_seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0; // --help
        std::cerr << app.help() << "\n" << e.what() << "\n";
        return 2;
    }

    try {
        if (*verify) return run_verify(suite, trials, seed, tol_scale);
        if (*eval) {
            json out;
            if (*eval_gj) {
                const gjtrig::GJModuli m2(k1, k2);
                const gjtrig::GJQuad q = gjtrig::gj_eval(u, m2);
                out = {{"u", u},   {"k1", k1},  {"k2", k2},  {"s", q.s},
                       {"c", q.c}, {"d1", q.d1}, {"d2", q.d2}};
                out["identity_residuals"] = {
                    {"c2", std::abs(q.c * q.c - (1 - q.s * q.s))},
                    {"d1sq", std::abs(q.d1 * q.d1 - (1 - k1 * k1 * q.s * q.s))},
                    {"d2sq", std::abs(q.d2 * q.d2 - (1 - k2 * k2 * q.s * q.s))},
                    {"cross", std::abs(k1 * k1 * q.d2 * q.d2 - k2 * k2 * q.d1 * q.d1 - (k1 * k1 - k2 * k2))}};
            } else if (*eval_jac) {
                const gjtrig::JacobiTriple j = gjtrig::jacobi(u, k);
                out = {{"u", u}, {"k", k}, {"sn", j.sn}, {"cn", j.cn}, {"dn", j.dn}, {"am", j.am}};
            } else if (*eval_k) {
                out = {{"k", k}, {"K", gjtrig::complete_K(k)}};
            } else {
                out = {{"phi", phi}, {"k", k}, {"F", gjtrig::incomplete_F(phi, k)}};
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*sim) {
            std::ifstream pf(params_path);
            if (!pf) {
                std::cerr << "cannot open parameter file " << params_path << "\n";
                return 2;
            }
            const json params = json::parse(pf);
            std::ofstream of;
            std::ostream* os = &std::cout;
            if (!out_path.empty()) {
                of.open(out_path);
                if (!of) {
                    std::cerr << "cannot open output path " << out_path << "\n";
                    return 2;
                }
                os = &of;
            }
            if (system == "top3") return simulate_top3(params, t0, t1, rel_tol, *os);
            if (system == "top4") return simulate_top4(params, t0, t1, rel_tol, *os);
            if (system == "dell") return simulate_dell(params, t0, t1, rel_tol, *os);
            std::cerr << "unknown system " << system << "\n";
            return 2;
        }
        if (*sample) {
            const gjtrig::GramMatrix g = gjtrig::sample_simplex_gram(m, sample_seed);
            json cos = json::array();
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j) cos.push_back(g.cos(i, j));
            const json out{{"m", m}, {"cos", cos}};
            std::cout << out.dump(2) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
