// Command-line surface: transition curves, rate tables, oracle verification,
// and the Monte Carlo harness.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "l1pt/instance.hpp"
#include "l1pt/io.hpp"
#include "l1pt/kernels.hpp"
#include "l1pt/ldp.hpp"
#include "l1pt/model.hpp"
#include "l1pt/montecarlo.hpp"
#include "l1pt/oracles.hpp"
#include "l1pt/pt.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using l1pt::Model;
using l1pt::ModelParams;
using nlohmann::json;

struct Global {
    std::uint64_t seed = 1;
    int threads = 0;  // 0 = hardware default
    std::string format = "csv";
    std::string out;
};

// Grid syntax: "lo:step:hi" or a comma-separated list.
std::vector<double> parse_grid(const std::string& s) {
    std::vector<double> g;
    if (s.find(':') != std::string::npos) {
        double lo, step, hi;
        if (std::sscanf(s.c_str(), "%lf:%lf:%lf", &lo, &step, &hi) != 3 || step <= 0.0)
            throw CLI::ValidationError("grid", "expected lo:step:hi with step > 0");
        for (double v = lo; v <= hi + 1e-12; v += step) g.push_back(v);
    } else {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) g.push_back(std::stod(tok));
    }
    if (g.empty()) throw CLI::ValidationError("grid", "empty grid");
    return g;
}

std::string default_out(const Global& g, const std::string& stem) {
    if (!g.out.empty()) return g.out;
    return stem + (g.format == "json" ? ".json" : ".csv");
}

json tail_name(l1pt::ldp::Tail t) {
    switch (t) {
        case l1pt::ldp::Tail::Upper: return "upper";
        case l1pt::ldp::Tail::Lower: return "lower";
        default: return "at-transition";
    }
}

int cmd_pt(const Global& g, Model model, double mu, const std::string& grid_spec) {
    std::vector<double> grid;
    if (!grid_spec.empty()) {
        grid = parse_grid(grid_spec);
    } else if (model == Model::Binary) {
        grid = parse_grid("0.02:0.02:0.48");
    } else {
        grid = parse_grid("0.20:0.05:0.95");
    }
    const auto curve = l1pt::pt::pt_curve(model, mu, grid);

    l1pt::io::Table t;
    t.columns = {"alpha", "beta", "mu"};
    for (const auto& p : curve.points) t.rows.push_back({p.alpha, p.beta, p.mu});
    const std::string path = default_out(g, "pt_" + to_string(model));
    json meta{{"model", to_string(model)}, {"mu", mu}};
    l1pt::io::write_table(t, path, g.format, "l1pt-pt-curve/1", meta);
    if (g.format == "csv")
        l1pt::io::write_gnuplot_script(path + ".gp", path, t, "alpha", "beta",
                                       to_string(model) + " l1 weak transition curve");
    for (const auto& w : curve.warnings) std::cerr << "warning: skipped " << w << "\n";
    std::cout << "wrote " << curve.points.size() << " points to " << path << "\n";
    return 0;
}

int cmd_ldp(const Global& g, Model model, double beta, double mu, const std::string& grid_spec,
            bool table1, bool table3) {
    std::vector<double> grid;
    if (table1) {
        model = Model::Binary;
        beta = 0.22933;
        grid = {0.30, 0.35, 0.40, 0.45, 0.50};
    } else if (table3) {
        model = Model::Box;
        beta = 0.18469;
        mu = 0.85;
        grid = {0.40, 0.45, 0.50, 0.55, 0.60};
    } else {
        if (beta <= 0.0) throw CLI::ValidationError("--beta", "required without a preset");
        grid = parse_grid(grid_spec.empty() ? "0.30:0.05:0.50" : grid_spec);
    }

    const auto curve = l1pt::ldp::rate_curve(beta, mu, model, grid);
    l1pt::io::Table t;
    t.columns = {"alpha", "beta",  "mu", "y1",   "gamma_g", "a_cone", "y2",
                 "nu",    "a0",    "c3", "gamma", "rate",    "tail"};
    for (const auto& row : curve.rows) {
        const auto& s = row.sol;
        t.rows.push_back({row.alpha, beta, model == Model::Box ? mu : 1.0, s.y1, s.gamma_g,
                          s.a_cone, s.y2, s.nu, s.a0, s.c3, s.gamma, s.rate, tail_name(s.tail)});
    }
    const std::string path =
        default_out(g, table1 ? "table1" : table3 ? "table3" : "ldp_" + to_string(model));
    json meta{{"model", to_string(model)}, {"beta", beta}, {"mu", mu}};
    l1pt::io::write_table(t, path, g.format, "l1pt-ldp-curve/1", meta);
    for (const auto& w : curve.warnings) std::cerr << "warning: skipped " << w << "\n";
    std::cout << "wrote " << curve.rows.size() << " rows to " << path << "\n";
    return 0;
}

struct VerifyStats {
    int checked = 0, skipped = 0, failed = 0;
    double worst = 0.0;
    std::string worst_point;
};

void verify_grid(Model model, double beta, double mu, const std::vector<double>& grid, double tol,
                 l1pt::io::Table& t, VerifyStats& st) {
    for (double a : grid) {
        const ModelParams p{a, beta, mu, model};
        std::string status = "OK";
        double rate = 0.0, dz = 0.0, dg = 0.0, darg = 0.0;
        try {
            const auto s = l1pt::ldp::solve_ldp(p);
            rate = s.rate;
            const auto z = l1pt::oracle::minimize_zeta_prob(p);
            const auto geo = l1pt::oracle::solve_geom(p);
            dz = std::fabs(z.value - rate);
            dg = std::fabs(geo.psi_net - rate);
            darg = std::max({std::fabs(z.c3 - s.c3), std::fabs(z.nu - s.nu),
                             std::fabs(z.a0 - s.a0), std::fabs(geo.y_i - s.y2),
                             std::fabs(geo.y_e - s.y1), std::fabs(geo.gamma_g - s.gamma_g)});
            const double worst_here = std::max(dz, dg);
            if (worst_here > st.worst) {
                st.worst = worst_here;
                st.worst_point = to_string(model) + " alpha=" + l1pt::io::fmt(a);
            }
            if (dz > tol || dg > tol || darg > 1e-4) {
                status = "FAIL";
                ++st.failed;
            }
            ++st.checked;
        } catch (const std::exception& e) {
            status = std::string("SKIPPED");
            ++st.skipped;
        }
        t.rows.push_back({to_string(model), a, beta, model == Model::Box ? mu : 1.0, rate, dz, dg,
                          darg, status});
    }
}

int cmd_verify(const Global& g, const std::string& which, double tol, int points) {
    l1pt::io::Table t;
    t.columns = {"model", "alpha", "beta", "mu", "rate", "d_zeta", "d_geom", "d_argmin", "status"};
    VerifyStats st;
    auto linspace = [&](double lo, double hi) {
        std::vector<double> v;
        for (int i = 0; i < points; ++i) v.push_back(lo + (hi - lo) * i / (points - 1));
        return v;
    };
    if (which == "binary" || which == "both")
        verify_grid(Model::Binary, 0.22933, 1.0, linspace(0.27, 0.55), tol, t, st);
    if (which == "box" || which == "both")
        verify_grid(Model::Box, 0.18469, 0.85, linspace(0.38, 0.64), tol, t, st);

    if (!g.out.empty())
        l1pt::io::write_table(t, g.out, g.format, "l1pt-verify/1", json{{"tol", tol}});
    std::printf("verify: %d checked, %d skipped, %d failed; worst |closed-form - oracle| = %.3e%s%s\n",
                st.checked, st.skipped, st.failed, st.worst,
                st.worst_point.empty() ? "" : " at ", st.worst_point.c_str());
    std::printf("%s\n", st.failed == 0 ? "PASS" : "FAIL");
    return st.failed == 0 ? 0 : 1;
}

struct SimRow {
    double alpha_nominal;  // theory evaluated here
    std::size_t n, m, k;
};

int cmd_simulate(const Global& g, Model model, double beta_nominal, double mu,
                 std::vector<SimRow> rows, std::uint64_t trials, const std::string& method_name,
                 const std::string& interior, const std::string& preset_name) {
    l1pt::mc::RunConfig cfg;
    cfg.trials = trials;
    cfg.seed = g.seed;
    cfg.threads = g.threads;
    cfg.method = method_name == "nullspace" ? l1pt::mc::Method::NullSpace
                                            : l1pt::mc::Method::LpCompare;
    if (interior.rfind("const:", 0) == 0) {
        cfg.fill.uniform = false;
        cfg.fill.value = std::stod(interior.substr(6));
    }

    l1pt::io::Table t;
    t.columns = {"alpha", "beta", "mu", "n", "m", "k", "trials", "failures",
                 "i_err_hat", "i_cor_hat", "ci_lo", "ci_hi", "theory_rate", "solver_errors"};

    for (const auto& row : rows) {
        const auto dims = l1pt::instance::make_dims(row.n, row.m, row.k, model, mu);
        const auto est = l1pt::mc::run_trials(dims, model, mu, cfg);

        // Censored cells report the one-sided bound; the CI columns describe
        // the rare side (the one with fewer counts).
        const bool err_rare = est.failures <= est.successes();
        const auto ci = err_rare ? est.i_err_ci : est.i_cor_ci;
        json i_err = est.i_err ? json(*est.i_err) : json(est.censor_bound);
        json i_cor = est.i_cor ? json(*est.i_cor) : json(est.censor_bound);

        json theory;
        try {
            theory = l1pt::ldp::rate_function({row.alpha_nominal, beta_nominal, mu, model});
        } catch (const std::exception&) {
            theory = nullptr;
        }
        t.rows.push_back({row.alpha_nominal, beta_nominal, model == Model::Box ? mu : 1.0,
                          row.n, row.m, row.k, est.trials, est.failures, i_err, i_cor,
                          ci.lo, ci.hi, theory, est.solver_errors});
        std::printf("alpha=%.2f n=%zu m=%zu k=%zu: failures=%llu/%llu errors=%llu\n",
                    row.alpha_nominal, row.n, row.m, row.k,
                    static_cast<unsigned long long>(est.failures),
                    static_cast<unsigned long long>(est.trials),
                    static_cast<unsigned long long>(est.solver_errors));
    }

    const std::string path = default_out(g, preset_name.empty() ? "simulate" : preset_name);
    json meta{{"seed", g.seed},
              {"method", method_name},
              {"threads", g.threads},
              {"interior", interior},
              {"versions", {{"l1pt", kVersion}, {"kernels", std::string(l1pt::kern::backend_name())}}}};
    l1pt::io::write_table(t, path, g.format, "l1pt-simulate/1", meta);
    {
        std::ofstream mf(path + ".manifest.json");
        mf << meta.dump(2) << '\n';
    }
    std::cout << "wrote " << t.rows.size() << " rows to " << path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary/box l1 transition curves, rate functions, and simulations"};
    app.require_subcommand(1);
    app.fallthrough();

    Global g;
    app.add_option("--seed", g.seed, "base RNG seed")->envname("L1PT_SEED");
    app.add_option("--threads", g.threads, "worker threads (0 = hardware)")
        ->envname("L1PT_THREADS");
    app.add_option("--format", g.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->envname("L1PT_FORMAT");
    app.add_option("--out", g.out, "output path (default derived from command)");

    std::string model_name = "binary";
    double mu = 0.85, beta = 0.0, tol = 1e-6;
    std::string grid, method = "lp", which = "both", interior = "uniform";
    int points = 20;
    bool table1 = false, table3 = false, table2 = false, table4 = false;
    std::uint64_t trials = 10000;
    std::size_t sim_n = 0, sim_m = 0, sim_k = 0;

    auto add_model = [&](CLI::App* c) {
        c->add_option("--model", model_name, "binary or box")
            ->check(CLI::IsMember({"binary", "box"}));
        c->add_option("--mu", mu, "box off-support zero fraction, in (1/2, 1]");
    };

    auto* cpt = app.add_subcommand("pt", "tabulate the weak transition curve");
    add_model(cpt);
    cpt->add_option("--grid", grid, "alpha grid, lo:step:hi or comma list");

    auto* cldp = app.add_subcommand("ldp", "rate function and optimizer variables along alpha");
    add_model(cldp);
    cldp->add_option("--beta", beta, "fixed beta for the sweep");
    cldp->add_option("--grid", grid, "alpha grid, lo:step:hi or comma list");
    cldp->add_flag("--table1", table1, "preset: binary, beta 0.22933, alpha 0.30..0.50");
    cldp->add_flag("--table3", table3, "preset: box, beta 0.18469, mu 0.85, alpha 0.40..0.60");

    auto* cver = app.add_subcommand("verify", "closed form vs numeric oracles");
    cver->add_option("--model", which, "binary, box, or both")
        ->check(CLI::IsMember({"binary", "box", "both"}));
    cver->add_option("--tol", tol, "agreement tolerance on the rate");
    cver->add_option("--points", points, "grid points per model");

    auto* csim = app.add_subcommand("simulate", "Monte Carlo failure-rate estimation");
    add_model(csim);
    csim->add_option("--beta", beta, "nominal beta for the theory column");
    csim->add_option("--n", sim_n, "ambient dimension");
    csim->add_option("--m", sim_m, "equations");
    csim->add_option("--k", sim_k, "ones (binary) or interior entries (box)");
    csim->add_option("--trials", trials, "trials per configuration");
    csim->add_option("--method", method, "lp or nullspace")
        ->check(CLI::IsMember({"lp", "nullspace"}));
    csim->add_option("--interior", interior, "uniform or const:<value>");
    csim->add_flag("--table2", table2, "preset: the five binary configurations");
    csim->add_flag("--table4", table4, "preset: the five box configurations");

    CLI11_PARSE(app, argc, argv);

    try {
        const Model model = l1pt::model_from_string(model_name);
        if (cpt->parsed()) return cmd_pt(g, model, mu, grid);
        if (cldp->parsed()) return cmd_ldp(g, model, beta, mu, grid, table1, table3);
        if (cver->parsed()) return cmd_verify(g, which, tol, points);
        if (csim->parsed()) {
            std::vector<SimRow> rows;
            Model sim_model = model;
            double sim_beta = beta, sim_mu = mu;
            std::string preset;
            if (table2) {
                sim_model = Model::Binary;
                sim_beta = 0.22933;
                rows = {{0.30, 140, 42, 32}, {0.35, 300, 105, 69}, {0.40, 300, 120, 69},
                        {0.45, 300, 135, 69}, {0.50, 140, 70, 32}};
                preset = "table2";
            } else if (table4) {
                sim_model = Model::Box;
                sim_beta = 0.18469;
                sim_mu = 0.85;
                rows = {{0.40, 125, 50, 23}, {0.45, 300, 135, 55}, {0.50, 300, 150, 55},
                        {0.55, 300, 165, 55}, {0.60, 125, 75, 23}};
                preset = "table4";
            } else {
                if (sim_n == 0 || sim_m == 0)
                    throw CLI::ValidationError("--n/--m", "required without a preset");
                const double a = static_cast<double>(sim_m) / static_cast<double>(sim_n);
                if (sim_beta <= 0.0)
                    sim_beta = static_cast<double>(sim_k) / static_cast<double>(sim_n);
                rows = {{a, sim_n, sim_m, sim_k}};
            }
            return cmd_simulate(g, sim_model, sim_beta, sim_mu, rows, trials, method, interior,
                                preset);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
