// alpharoot: transforms, densities, simulation, and ergodicity diagnostics
// for the stable square-root model dY = (a - bY)dt + Y^{1/alpha} dL with
// companion dX = (m - theta X)dt + sqrt(Y) dB.
//
// Exit codes: 0 success, 1 usage/IO, 2 validation, 3 quadrature,
// 4 acceptance-check failure. Failures print one line on stderr:
//   alpharoot: error kind=<kind> detail="<message>"

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "alpharoot/config.hpp"
#include "alpharoot/csv.hpp"
#include "alpharoot/density.hpp"
#include "alpharoot/exponents.hpp"
#include "alpharoot/lyapunov.hpp"
#include "alpharoot/params.hpp"
#include "alpharoot/riccati.hpp"
#include "alpharoot/simulate.hpp"
#include "alpharoot/stats.hpp"
#include "alpharoot/transforms.hpp"
#include "alpharoot/tv_decay.hpp"

namespace {

using namespace alpharoot;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitQuadrature = 3;
constexpr int kExitCheckFailed = 4;

void error_line(const std::string& kind, const std::string& detail) {
    std::cerr << "alpharoot: error kind=" << kind << " detail=\"" << detail << "\"\n";
}

void warn_line(const std::string& kind, const std::string& detail) {
    std::cerr << "alpharoot: warning kind=" << kind << " detail=\"" << detail << "\"\n";
}

void set_default(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (!cfg.has(key)) cfg.set(key, value);
}

// Materialize every key the command will read, so the echoed header is the
// complete resolved configuration (identical configs => identical bytes).
void resolve_defaults(RunConfig& cfg) {
    const std::string cmd = cfg.command();
    for (const auto& [k, v] : std::map<std::string, std::string>{
             {"a", "1"},
             {"b", "1"},
             {"alpha", "1.5"},
             {"m", "0"},
             {"theta", "1"},
             {"abs_tol", "1e-10"},
             {"rel_tol", "1e-08"},
             {"max_subdivisions", "400"},
             {"xi_truncation", "0"},
             {"n_threads", "0"}})
        set_default(cfg, k, v);
    if (!cfg.has("seed")) {
        const char* env = std::getenv("ALPHAROOT_SEED");
        cfg.set("seed", env ? env : "12345");
    }
    set_default(cfg, "out", cmd + ".csv");

    if (cmd == "laplace") {
        set_default(cfg, "t", "1");
        set_default(cfg, "y0", "1");
        set_default(cfg, "lambda", "0.5,1,2");
    } else if (cmd == "density") {
        set_default(cfg, "t", "1");
        set_default(cfg, "y0", "1");
        set_default(cfg, "grid", "0:20:512");
        set_default(cfg, "representation", "fourier");
    } else if (cmd == "cdf") {
        set_default(cfg, "t", "1");
        set_default(cfg, "y0", "1");
        if (!cfg.has("x")) set_default(cfg, "grid", "0:20:512");
    } else if (cmd == "simulate") {
        set_default(cfg, "horizon", "1");
        set_default(cfg, "dt", "0.001");
        set_default(cfg, "n_paths", "10000");
        set_default(cfg, "y0", "1");
        set_default(cfg, "x0", "0");
        set_default(cfg, "mode", "summary");
        set_default(cfg, "n_slices", "100");
        set_default(cfg, "threshold", "1e-06");
    } else if (cmd == "lyapunov-check") {
        set_default(cfg, "t", "2");
        set_default(cfg, "dt", "0.001");
        set_default(cfg, "n_paths", "10000");
        set_default(cfg, "init_a", "10,10");
        set_default(cfg, "check", "true");
    } else if (cmd == "tv-decay") {
        set_default(cfg, "ts", "0.5,1,2,4,8");
        set_default(cfg, "dt", "0.002");
        set_default(cfg, "n_paths", "10000");
        set_default(cfg, "init_a", "0,0");
        set_default(cfg, "init_b", "10,10");
        set_default(cfg, "bins_refine", "1");
    } else if (cmd == "bounds-check") {
        set_default(cfg, "t", "1");
        set_default(cfg, "angle", "pi/2");
        set_default(cfg, "check", "true");
        const double alpha = cfg.get_double("alpha", 1.5);
        const bool imag_regime =
            std::abs(std::abs(parse_angle(cfg.get("angle"))) - 0.5 * pi()) < 0.01;
        if (!cfg.has("rho_min") || !cfg.has("rho_max") || !cfg.has("rho_count")) {
            const std::vector<double> grid = default_rho_grid(alpha, imag_regime);
            set_default(cfg, "rho_min", format_double(grid.front()));
            set_default(cfg, "rho_max", format_double(grid.back()));
            set_default(cfg, "rho_count", format_int(static_cast<std::int64_t>(grid.size())));
        }
    }
}

void write_config_header(CsvWriter& csv, const RunConfig& cfg) {
    csv.comment(kVersion);
    std::string line;
    for (char c : cfg.serialize()) {
        if (c == '\n') {
            csv.comment(line);
            line.clear();
        } else {
            line += c;
        }
    }
}

SimConfig sim_config_from(const RunConfig& cfg, const std::string& time_key) {
    SimConfig sim;
    sim.params = cfg.params();
    sim.y0 = cfg.get_double("y0", 1.0);
    sim.x0 = cfg.get_double("x0", 0.0);
    sim.t = cfg.get_double(time_key, 1.0);
    sim.dt = cfg.get_double("dt", 1e-3);
    sim.n_paths = cfg.get_int("n_paths", 10000);
    sim.seed = cfg.get_uint("seed", 12345);
    sim.n_threads = static_cast<int>(cfg.get_int("n_threads", 0));
    return sim;
}

int run_laplace(const RunConfig& cfg) {
    const ModelParams p = cfg.params();
    const QuadratureConfig quad = cfg.quadrature();
    const double t = cfg.get_double("t", 1.0);
    const double y0 = cfg.get_double("y0", 1.0);
    CsvWriter csv(cfg.get("out"));
    write_config_header(csv, cfg);
    csv.header({"lambda", "value"});
    for (double lambda : cfg.get_list("lambda"))
        csv.row({lambda, laplace_y(t, y0, lambda, p, quad)});
    csv.close();
    return kExitOk;
}

int run_density(const RunConfig& cfg) {
    const ModelParams p = cfg.params();
    const QuadratureConfig quad = cfg.quadrature();
    const double t = cfg.get_double("t", 1.0);
    const double y0 = cfg.get_double("y0", 1.0);
    const RunConfig::GridSpec grid = cfg.get_grid("grid", "0:20:512");
    const DensityRepresentation rep = cfg.get("representation", "fourier") == "fourier"
                                          ? DensityRepresentation::fourier
                                          : DensityRepresentation::real_axis;
    const DensityGrid dg = density_grid(t, y0, grid.points(), p, quad, rep);
    CsvWriter csv(cfg.get("out"));
    write_config_header(csv, cfg);
    csv.comment("norm_defect=" + format_double(dg.norm_defect));
    csv.comment("trapz=" + format_double(dg.trapz) +
                " head_estimate=" + format_double(dg.head_estimate) +
                " tail_estimate=" + format_double(dg.tail_estimate));
    if (dg.boundary_x0)
        csv.comment("boundary: the x=0 row is the inversion-formula value at the "
                    "support edge (the limit from x > 0), not a claim about f(0)");
    csv.header({"x", "f", "representation", "norm_defect"});
    const std::string rep_name = to_string(dg.representation);
    const std::string defect = format_double(dg.norm_defect);
    for (std::size_t i = 0; i < dg.xs.size(); ++i)
        csv.row({format_double(dg.xs[i]), format_double(dg.values[i]), rep_name, defect});
    csv.close();
    return kExitOk;
}

int run_cdf(const RunConfig& cfg) {
    const ModelParams p = cfg.params();
    const QuadratureConfig quad = cfg.quadrature();
    const double t = cfg.get_double("t", 1.0);
    const double y0 = cfg.get_double("y0", 1.0);
    CsvWriter csv(cfg.get("out"));
    write_config_header(csv, cfg);
    if (cfg.has("x")) {
        // Single point: the literal adaptive integral of the density.
        csv.comment("method=adaptive_density_integral");
        csv.header({"x", "F"});
        const double x = cfg.get_double("x", 0.0);
        csv.row({x, cdf_y(t, y0, x, p, quad)});
    } else {
        // Grid: one shared transform table, integrated in x through the
        // (1 - e^{-ix xi})/(i xi) kernel; agrees with cdf_y up to tolerance.
        const RunConfig::GridSpec grid = cfg.get_grid("grid", "0:20:512");
        const std::vector<double> xs = grid.points();
        const FourierDensityTable table(t, y0, p, quad, std::max(xs.back(), 1.0));
        csv.comment("method=transform_kernel");
        csv.header({"x", "F"});
        for (double x : xs) csv.row({x, std::clamp(table.cdf(x), 0.0, 1.0)});
    }
    csv.close();
    return kExitOk;
}

int run_simulate(const RunConfig& cfg) {
    SimConfig sim = sim_config_from(cfg, "horizon");
    const std::string mode = cfg.get("mode", "summary");
    const std::int64_t n_steps =
        static_cast<std::int64_t>(std::llround(sim.t / sim.dt));
    if (mode == "paths") {
        sim.record_full_paths = true;
    } else {
        const std::int64_t slices =
            std::min<std::int64_t>(cfg.get_int("n_slices", 100), n_steps);
        for (std::int64_t i = 1; i <= slices; ++i)
            sim.snapshot_ts.push_back(static_cast<double>(n_steps * i / slices) * sim.dt);
    }
    const PathEnsemble ens = simulate_pair(sim);

    CsvWriter csv(cfg.get("out"));
    write_config_header(csv, cfg);
    csv.comment("projections=" + format_int(ens.n_projections));
    if (sim.params.a == 0.0) {
        const double threshold = cfg.get_double("threshold", 1e-6);
        csv.comment("empirical_atom=" + format_double(empirical_atom(ens, threshold)) +
                    " threshold=" + format_double(threshold));
    }
    if (mode == "paths") {
        csv.header({"path", "step", "t", "y", "x"});
        for (std::int64_t path = 0; path < sim.n_paths; ++path)
            for (std::int64_t k = 0; k <= ens.n_steps; ++k) {
                const std::size_t idx = static_cast<std::size_t>(path * (ens.n_steps + 1) + k);
                csv.row({format_int(path), format_int(k),
                         format_double(static_cast<double>(k) * sim.dt),
                         format_double(ens.y_path[idx]), format_double(ens.x_path[idx])});
            }
    } else {
        csv.header({"t", "mean_y", "mean_x", "var_x"});
        csv.row({0.0, sim.y0, sim.x0, 0.0});
        for (std::size_t s = 0; s < ens.snapshot_ts.size(); ++s) {
            const MeanSe my = mean_se(ens.y_snap[s]);
            const MeanSe mx = mean_se(ens.x_snap[s]);
            csv.row({ens.snapshot_ts[s], my.mean, mx.mean, mx.sd * mx.sd});
        }
    }
    csv.close();
    return kExitOk;
}

int run_lyapunov_check(const RunConfig& cfg) {
    const ModelParams p = cfg.params();
    const LyapunovSpec spec = choose_beta_c_M(p);
    const DriftCertificate cert = certify_drift(spec, p);
    const std::array<double, 2> init = cfg.get_pair("init_a");
    const double t = cfg.get_double("t", 2.0);
    SimConfig sim = sim_config_from(cfg, "t");
    const DriftCheck mc = drift_mc_check(init[0], init[1], t, spec, sim);

    CsvWriter csv(cfg.get("out"));
    write_config_header(csv, cfg);
    csv.comment("beta=" + format_double(spec.beta) + " c=" + format_double(spec.c) +
                " M=" + format_double(spec.M) +
                " sup_h_second=" + format_double(spec.sup_h_second));
    csv.comment("grid_certificate: worst_slack=" + format_double(cert.worst_slack) +
                " grid_ok=" + std::string(cert.grid_ok ? "true" : "false") +
                " y_coefficient_ok=" + std::string(cert.y_coefficient_ok ? "true" : "false") +
                " x_tail_ok=" + std::string(cert.x_tail_ok ? "true" : "false"));
    csv.header({"y0", "x0", "t", "lhs", "rhs", "pass"});
    csv.row({format_double(init[0]), format_double(init[1]), format_double(t),
             format_double(mc.lhs), format_double(mc.rhs), mc.pass ? "1" : "0"});
    csv.close();

    if (cfg.get_bool("check", true) && !(cert.pass() && mc.pass)) {
        error_line("check", "drift inequality not certified (grid " +
                                std::string(cert.pass() ? "ok" : "failed") + ", MC " +
                                std::string(mc.pass ? "ok" : "failed") + ")");
        return kExitCheckFailed;
    }
    return kExitOk;
}

int run_tv_decay(const RunConfig& cfg) {
    SimConfig sim = sim_config_from(cfg, "t");  // horizon comes from ts
    HistogramSpec binning;
    binning.refine = cfg.get_double("bins_refine", 1.0);
    const std::vector<double> ts = cfg.get_list("ts");
    const TvDecayReport report =
        tv_decay(cfg.get_pair("init_a"), cfg.get_pair("init_b"), ts, sim, binning);

    CsvWriter csv(cfg.get("out"));
    write_config_header(csv, cfg);
    csv.comment("fit_rate=" + format_double(report.fit_rate) +
                " spearman_log_tv=" + format_double(report.spearman_log_tv));
    for (const TvSlice& s : report.slices)
        if (s.sparse)
            csv.comment("sparse histogram at t=" + format_double(s.t) +
                        " (max bin count " + format_int(s.max_count) + " < 10)");
    csv.header({"t", "tv", "se_proxy"});
    for (const TvSlice& s : report.slices) csv.row({s.t, s.tv, s.se_proxy});
    csv.close();

    if (report.any_sparse)
        warn_line("sparse_histogram", "some slices have max bin count < 10; "
                                      "increase n_paths or coarsen bins");
    return kExitOk;
}

int run_bounds_check(const RunConfig& cfg) {
    const ModelParams p = cfg.params();
    const QuadratureConfig quad = cfg.quadrature();
    const double t = cfg.get_double("t", 1.0);
    const double angle = parse_angle(cfg.get("angle", "pi/2"));
    const double rho_min = cfg.get_double("rho_min", 2.0);
    const double rho_max = cfg.get_double("rho_max", 512.0);
    const std::int64_t count = cfg.get_int("rho_count", 9);
    std::vector<double> rhos(count);
    for (std::int64_t i = 0; i < count; ++i)
        rhos[i] = count == 1 ? rho_min
                             : rho_min * std::pow(rho_max / rho_min,
                                                  static_cast<double>(i) / (count - 1));
    const ExponentCheck check = ray_exponent_check(t, p, angle, rhos, quad);
    const double expected = 2.0 - p.alpha;

    CsvWriter csv(cfg.get("out"));
    write_config_header(csv, cfg);
    csv.comment("slope=" + format_double(check.slope) +
                " intercept=" + format_double(check.intercept) +
                " expected_slope=" + format_double(expected) + " regime=" +
                (check.imag_axis_regime ? "imag_axis" : "magnitude_ratio"));
    csv.header({"rho", "value", "ratio"});
    for (std::size_t i = 0; i < check.rhos.size(); ++i)
        csv.row({check.rhos[i], check.values[i],
                 check.values[i] / std::pow(check.rhos[i], expected)});
    csv.close();

    if (check.imag_axis_regime && cfg.get_bool("check", true) &&
        std::abs(check.slope - expected) > 0.05) {
        error_line("check", "regressed exponent " + format_double(check.slope) +
                                " deviates from " + format_double(expected) +
                                " by more than 0.05");
        return kExitCheckFailed;
    }
    return kExitOk;
}

int dispatch(const RunConfig& cfg) {
    const std::string cmd = cfg.command();
    if (cmd == "laplace") return run_laplace(cfg);
    if (cmd == "density") return run_density(cfg);
    if (cmd == "cdf") return run_cdf(cfg);
    if (cmd == "simulate") return run_simulate(cfg);
    if (cmd == "lyapunov-check") return run_lyapunov_check(cfg);
    if (cmd == "tv-decay") return run_tv_decay(cfg);
    if (cmd == "bounds-check") return run_bounds_check(cfg);
    error_line("validation", "unknown command '" + cmd + "'");
    return kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stable square-root model toolkit: transforms, densities, "
                 "simulation, drift certificates, TV decay, exponent checks"};
    app.require_subcommand(0, 1);

    // Every subcommand takes the same flat keys; values are carried as strings
    // and validated centrally so file config and flags follow identical rules.
    struct FlagSpec {
        const char* flag;
        const char* key;
    };
    static const std::vector<FlagSpec> flags = {
        {"--a", "a"},
        {"--b", "b"},
        {"--alpha", "alpha"},
        {"--m", "m"},
        {"--theta", "theta"},
        {"--abs-tol", "abs_tol"},
        {"--rel-tol", "rel_tol"},
        {"--max-subdivisions", "max_subdivisions"},
        {"--xi-truncation", "xi_truncation"},
        {"--t", "t"},
        {"--horizon", "horizon"},
        {"--dt", "dt"},
        {"--paths", "n_paths"},
        {"--seed", "seed"},
        {"--threads", "n_threads"},
        {"--y0", "y0"},
        {"--x0", "x0"},
        {"--x", "x"},
        {"--lambda", "lambda"},
        {"--grid", "grid"},
        {"--representation", "representation"},
        {"--ts", "ts"},
        {"--init-a", "init_a"},
        {"--init-b", "init_b"},
        {"--bins-refine", "bins_refine"},
        {"--threshold", "threshold"},
        {"--angle", "angle"},
        {"--rho-min", "rho_min"},
        {"--rho-max", "rho_max"},
        {"--rho-count", "rho_count"},
        {"--mode", "mode"},
        {"--n-slices", "n_slices"},
        {"--check", "check"},
        {"--out", "out"},
    };
    static const std::vector<std::pair<std::string, std::string>> commands = {
        {"laplace", "Laplace transform of Y_t at the given lambda values"},
        {"density", "density of Y_t on a grid (Fourier or real-axis route)"},
        {"cdf", "distribution function of Y_t"},
        {"simulate", "jump-Euler ensemble of (Y, X); summary or full paths"},
        {"lyapunov-check", "drift-certificate constants, grid check, MC check"},
        {"tv-decay", "coupled two-start total-variation decay report"},
        {"bounds-check", "large-radius exponent regression along a ray"},
        {"validate", "report config violations without running anything"},
    };

    std::map<std::string, std::map<std::string, std::string>> collected;
    std::map<std::string, std::string> config_paths;
    for (const auto& [name, desc] : commands) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option_function<std::string>(
            "--config", [&, name = name](const std::string& v) { config_paths[name] = v; },
            "key=value config file; flags override its entries");
        for (const FlagSpec& fs : flags) {
            const std::string key = fs.key;
            sub->add_option_function<std::string>(
                fs.flag,
                [&, name = name, key](const std::string& v) { collected[name][key] = v; },
                alpharoot::RunConfig::known_keys().at(key));
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (app.get_subcommands().empty()) {
        std::cout << app.help();
        return kExitOk;
    }
    const std::string name = app.get_subcommands().front()->get_name();

    try {
        RunConfig cfg;
        if (config_paths.count(name)) cfg = RunConfig::load_file(config_paths[name]);
        if (name != "validate") cfg.kv["command"] = name;
        for (const auto& [k, v] : collected[name]) cfg.set(k, v);

        if (name == "validate") {
            const std::vector<std::string> violations = validate_config(cfg);
            for (const std::string& v : violations) std::cout << v << "\n";
            return violations.empty() ? kExitOk : kExitValidation;
        }

        resolve_defaults(cfg);
        const std::vector<std::string> violations = validate_config(cfg);
        if (!violations.empty()) {
            error_line("validation", violations.front());
            return kExitValidation;
        }
        return dispatch(cfg);
    } catch (const validation_error& e) {
        error_line("validation", e.what());
        return kExitValidation;
    } catch (const quadrature_error& e) {
        error_line("quadrature", e.what());
        return kExitQuadrature;
    } catch (const io_error& e) {
        error_line("io", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        error_line("internal", e.what());
        return kExitUsage;
    }
}
