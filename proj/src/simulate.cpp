#include "alpharoot/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>

#include "alpharoot/parallel.hpp"
#include "alpharoot/rng.hpp"
#include "alpharoot/stable.hpp"

namespace alpharoot {

namespace {

std::int64_t steps_for(double t, double dt) {
    const double raw = t / dt;
    const std::int64_t n = static_cast<std::int64_t>(std::llround(raw));
    if (n < 1 || std::abs(raw - static_cast<double>(n)) > 1e-6 * raw)
        throw validation_error("simulate_pair: t must be an integer multiple of dt");
    return n;
}

}  // namespace

PathEnsemble simulate_pair(const SimConfig& cfg) {
    validate(cfg.params);
    if (!(cfg.y0 >= 0.0)) throw validation_error("simulate_pair: y0 must be >= 0");
    if (!(cfg.t > 0.0) || !(cfg.dt > 0.0))
        throw validation_error("simulate_pair: t and dt must be > 0");
    if (cfg.n_paths < 1) throw validation_error("simulate_pair: n_paths must be >= 1");
    const ModelParams& p = cfg.params;
    if (1.0 - p.b * cfg.dt < 0.0)
        throw validation_error("simulate_pair: step too coarse, require b*dt <= 1");
    if (p.theta > 0.0 && p.theta * cfg.dt > 1.0)
        throw validation_error("simulate_pair: step too coarse, require theta*dt <= 1");

    PathEnsemble ens;
    ens.config = cfg;
    const std::int64_t n_steps = steps_for(cfg.t, cfg.dt);
    ens.n_steps = n_steps;

    // snapshot step indices, deduplicated, ascending
    std::vector<std::int64_t> snap_steps;
    for (double ts : cfg.snapshot_ts) {
        if (!(ts > 0.0) || ts > cfg.t + 1e-12)
            throw validation_error("simulate_pair: snapshot time outside (0, t]");
        const std::int64_t k = static_cast<std::int64_t>(std::llround(ts / cfg.dt));
        if (k < 1 || std::abs(ts / cfg.dt - static_cast<double>(k)) > 1e-6 * k)
            throw validation_error("simulate_pair: snapshot time not on the step grid");
        snap_steps.push_back(std::min(k, n_steps));
    }
    std::sort(snap_steps.begin(), snap_steps.end());
    snap_steps.erase(std::unique(snap_steps.begin(), snap_steps.end()), snap_steps.end());
    for (std::int64_t k : snap_steps)
        ens.snapshot_ts.push_back(static_cast<double>(k) * cfg.dt);
    ens.y_snap.assign(snap_steps.size(), std::vector<double>(cfg.n_paths));
    ens.x_snap.assign(snap_steps.size(), std::vector<double>(cfg.n_paths));
    ens.y_final.resize(cfg.n_paths);
    ens.x_final.resize(cfg.n_paths);
    if (cfg.record_full_paths) {
        if (cfg.n_paths * (n_steps + 1) > (std::int64_t{1} << 27))
            throw validation_error("simulate_pair: full-path recording too large");
        ens.y_path.resize(cfg.n_paths * (n_steps + 1));
        ens.x_path.resize(cfg.n_paths * (n_steps + 1));
    }

    const StableScheme stable(p.alpha);
    const double jump_scale = std::pow(cfg.dt, 1.0 / p.alpha) * stable.scale_unit;
    const double sqrt_dt = std::sqrt(cfg.dt);
    const double inv_alpha = 1.0 / p.alpha;
    std::atomic<std::int64_t> projections{0};

    parallel_for(
        cfg.n_paths,
        [&](std::int64_t path) {
            RngStream jumps(cfg.seed, static_cast<std::uint64_t>(path), kTagStable);
            RngStream gauss(cfg.seed, static_cast<std::uint64_t>(path), kTagGauss);
            double y = cfg.y0, x = cfg.x0;
            std::int64_t local_proj = 0;
            std::size_t next_snap = 0;
            if (cfg.record_full_paths) {
                ens.y_path[path * (n_steps + 1)] = y;
                ens.x_path[path * (n_steps + 1)] = x;
            }
            for (std::int64_t k = 0; k < n_steps; ++k) {
                const double g = gauss.next_gaussian();
                x += (p.m - p.theta * x) * cfg.dt + std::sqrt(y) * sqrt_dt * g;
                const double dl = jump_scale * stable.draw_standard(jumps);
                double yn = y + (p.a - p.b * y) * cfg.dt + std::pow(y, inv_alpha) * dl;
                if (yn < 0.0) {
                    yn = 0.0;
                    ++local_proj;
                }
                y = yn;
                if (cfg.record_full_paths) {
                    ens.y_path[path * (n_steps + 1) + k + 1] = y;
                    ens.x_path[path * (n_steps + 1) + k + 1] = x;
                }
                if (next_snap < snap_steps.size() && k + 1 == snap_steps[next_snap]) {
                    ens.y_snap[next_snap][path] = y;
                    ens.x_snap[next_snap][path] = x;
                    ++next_snap;
                }
            }
            ens.y_final[path] = y;
            ens.x_final[path] = x;
            projections.fetch_add(local_proj, std::memory_order_relaxed);
        },
        cfg.n_threads);

    ens.n_projections = projections.load();
    return ens;
}

double empirical_atom(const PathEnsemble& ens, double threshold) {
    if (!(threshold > 0.0)) throw validation_error("empirical_atom: threshold must be > 0");
    if (ens.y_final.empty()) throw validation_error("empirical_atom: empty ensemble");
    std::int64_t hits = 0;
    for (double y : ens.y_final) hits += (y < threshold);
    return static_cast<double>(hits) / static_cast<double>(ens.y_final.size());
}

}  // namespace alpharoot
