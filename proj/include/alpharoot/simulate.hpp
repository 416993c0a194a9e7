#pragma once

#include <cstdint>
#include <vector>

#include "alpharoot/params.hpp"

namespace alpharoot {

struct SimConfig {
    ModelParams params;
    double y0 = 1.0;
    double x0 = 0.0;
    double t = 1.0;
    double dt = 1e-3;
    std::int64_t n_paths = 10000;
    std::uint64_t seed = 12345;
    int n_threads = 0;                 // 0: hardware concurrency
    std::vector<double> snapshot_ts;   // intermediate recording times
    bool record_full_paths = false;    // every step of every path
};

// Jump-Euler output. Terminal states always; snapshots[s][p] at snapshot_ts;
// full trajectories only on request (memory scales n_paths * n_steps).
struct PathEnsemble {
    SimConfig config;
    std::int64_t n_steps = 0;
    std::vector<double> y_final, x_final;          // [path]
    std::vector<double> snapshot_ts;               // resolved (rounded to steps)
    std::vector<std::vector<double>> y_snap, x_snap;
    std::vector<double> y_path, x_path;            // [path * (n_steps+1) + step]
    std::int64_t n_projections = 0;                // Y clamped to 0 count
};

// Scheme, per step k (Y_k enters both updates):
//   X_{k+1} = X_k + (m - theta X_k) dt + sqrt(Y_k dt) G_k
//   Y_{k+1} = max(0, Y_k + (a - b Y_k) dt + Y_k^{1/alpha} dL_k)
// G and dL come from independent per-path streams; results are bit-identical
// for any thread count.
PathEnsemble simulate_pair(const SimConfig& cfg);

// fraction of terminal Y below threshold (absorbed mass estimator; the a = 0
// scheme keeps absorbed paths exactly at 0)
double empirical_atom(const PathEnsemble& ens, double threshold = 1e-6);

}  // namespace alpharoot
