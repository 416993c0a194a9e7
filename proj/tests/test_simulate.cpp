#include <cmath>
#include <cstdint>
#include <vector>

#include "alpharoot/params.hpp"
#include "alpharoot/simulate.hpp"
#include "alpharoot/stats.hpp"
#include "alpharoot/transforms.hpp"
#include "doctest.h"

using alpharoot::ModelParams;
using alpharoot::PathEnsemble;
using alpharoot::SimConfig;

namespace {

SimConfig base_config() {
    SimConfig cfg;
    cfg.params.a = 1.0;
    cfg.params.b = 1.0;
    cfg.params.alpha = 1.5;
    cfg.params.m = 0.0;
    cfg.params.theta = 1.0;
    cfg.y0 = 1.0;
    cfg.x0 = 0.0;
    cfg.t = 0.5;
    cfg.dt = 0.01;
    cfg.n_paths = 256;
    cfg.seed = 424242;
    return cfg;
}

}  // namespace

TEST_CASE("ensembles are bit-identical across runs and thread counts") {
    SimConfig cfg = base_config();
    cfg.n_threads = 1;
    const PathEnsemble one = alpharoot::simulate_pair(cfg);
    const PathEnsemble again = alpharoot::simulate_pair(cfg);
    cfg.n_threads = 3;
    const PathEnsemble three = alpharoot::simulate_pair(cfg);
    REQUIRE(one.y_final.size() == again.y_final.size());
    REQUIRE(one.y_final.size() == three.y_final.size());
    for (std::size_t i = 0; i < one.y_final.size(); ++i) {
        CHECK(one.y_final[i] == again.y_final[i]);
        CHECK(one.x_final[i] == again.x_final[i]);
        CHECK(one.y_final[i] == three.y_final[i]);
        CHECK(one.x_final[i] == three.x_final[i]);
    }
    CHECK(one.n_projections == three.n_projections);
}

TEST_CASE("volatility state stays nonnegative") {
    SimConfig cfg = base_config();
    cfg.record_full_paths = true;
    cfg.n_paths = 128;
    const PathEnsemble ens = alpharoot::simulate_pair(cfg);
    for (double y : ens.y_path) CHECK(y >= 0.0);
    CHECK(ens.n_projections >= 0);
}

TEST_CASE("recorded paths start at the initial state") {
    SimConfig cfg = base_config();
    cfg.record_full_paths = true;
    cfg.n_paths = 16;
    cfg.x0 = -0.75;
    const PathEnsemble ens = alpharoot::simulate_pair(cfg);
    const std::int64_t stride = ens.n_steps + 1;
    for (std::int64_t p = 0; p < cfg.n_paths; ++p) {
        CHECK(ens.y_path[p * stride] == cfg.y0);
        CHECK(ens.x_path[p * stride] == cfg.x0);
    }
}

TEST_CASE("unreplenished start at zero stays degenerate") {
    SimConfig cfg = base_config();
    cfg.params.a = 0.0;
    cfg.params.m = 0.5;
    cfg.params.theta = 1.0;
    cfg.y0 = 0.0;
    cfg.x0 = 2.0;
    cfg.t = 1.0;
    cfg.n_paths = 64;
    const PathEnsemble ens = alpharoot::simulate_pair(cfg);
    for (double y : ens.y_final) CHECK(y == 0.0);
    CHECK(ens.n_projections == 0);
    // with Y frozen at 0 the companion is a deterministic recursion: all
    // paths coincide and track the analytic relaxation to first order
    for (double x : ens.x_final) CHECK(x == ens.x_final[0]);
    const double analytic = cfg.x0 * std::exp(-cfg.params.theta * cfg.t) +
                            (cfg.params.m / cfg.params.theta) *
                                (1.0 - std::exp(-cfg.params.theta * cfg.t));
    CHECK(ens.x_final[0] == doctest::Approx(analytic).epsilon(0.01));
    CHECK(alpharoot::empirical_atom(ens) == 1.0);
}

TEST_CASE("ensemble mean tracks the closed-form mean") {
    SimConfig cfg = base_config();
    cfg.t = 1.0;
    cfg.n_paths = 20000;
    const PathEnsemble ens = alpharoot::simulate_pair(cfg);
    const auto m = alpharoot::mean_se(ens.y_final);
    const double target = alpharoot::mean_y(cfg.t, cfg.y0, cfg.params);
    // heavy tails make the plug-in standard error optimistic; keep a fixed
    // allowance on top of the usual three sigma
    CHECK(std::abs(m.mean - target) <= 3.0 * m.se + 0.05);
}

TEST_CASE("snapshot at the horizon reproduces the terminal slice") {
    SimConfig cfg = base_config();
    cfg.snapshot_ts = {0.25, cfg.t};
    const PathEnsemble ens = alpharoot::simulate_pair(cfg);
    REQUIRE(ens.y_snap.size() == 2);
    CHECK(ens.snapshot_ts[0] == doctest::Approx(0.25).epsilon(1e-12));
    for (std::int64_t p = 0; p < cfg.n_paths; ++p) {
        CHECK(ens.y_snap[1][p] == ens.y_final[p]);
        CHECK(ens.x_snap[1][p] == ens.x_final[p]);
    }
}

TEST_CASE("snapshots agree with the recorded trajectory") {
    SimConfig cfg = base_config();
    cfg.record_full_paths = true;
    cfg.n_paths = 8;
    cfg.snapshot_ts = {0.3};
    const PathEnsemble ens = alpharoot::simulate_pair(cfg);
    const std::int64_t k = 30;   // 0.3 / 0.01
    const std::int64_t stride = ens.n_steps + 1;
    for (std::int64_t p = 0; p < cfg.n_paths; ++p) {
        CHECK(ens.y_snap[0][p] == ens.y_path[p * stride + k]);
        CHECK(ens.x_snap[0][p] == ens.x_path[p * stride + k]);
    }
}

TEST_CASE("configuration errors are rejected") {
    using alpharoot::validation_error;
    SimConfig cfg = base_config();

    cfg.dt = 0.0;
    CHECK_THROWS_AS(alpharoot::simulate_pair(cfg), validation_error);
    cfg = base_config();
    cfg.t = -1.0;
    CHECK_THROWS_AS(alpharoot::simulate_pair(cfg), validation_error);
    cfg = base_config();
    cfg.dt = 1.5;
    cfg.t = 3.0;   // b dt > 1
    CHECK_THROWS_AS(alpharoot::simulate_pair(cfg), validation_error);
    cfg = base_config();
    cfg.t = 1.0;
    cfg.dt = 0.3;   // horizon not on the step grid
    CHECK_THROWS_AS(alpharoot::simulate_pair(cfg), validation_error);
    cfg = base_config();
    cfg.snapshot_ts = {0.355};   // off the step grid
    CHECK_THROWS_AS(alpharoot::simulate_pair(cfg), validation_error);
    cfg = base_config();
    cfg.snapshot_ts = {0.7};   // beyond the horizon
    CHECK_THROWS_AS(alpharoot::simulate_pair(cfg), validation_error);
    cfg = base_config();
    cfg.n_paths = 0;
    CHECK_THROWS_AS(alpharoot::simulate_pair(cfg), validation_error);
    cfg = base_config();
    cfg.y0 = -0.1;
    CHECK_THROWS_AS(alpharoot::simulate_pair(cfg), validation_error);
    cfg = base_config();
    cfg.record_full_paths = true;
    cfg.n_paths = 100000;
    cfg.t = 20.0;   // 100000 * 2001 slots exceed the recording cap
    CHECK_THROWS_AS(alpharoot::simulate_pair(cfg), validation_error);
}

TEST_CASE("absorbed-mass estimator") {
    SimConfig cfg = base_config();
    cfg.params.a = 0.0;
    cfg.y0 = 1.0;
    cfg.t = 1.0;
    cfg.n_paths = 4000;
    const PathEnsemble at1 = alpharoot::simulate_pair(cfg);
    cfg.t = 2.0;
    const PathEnsemble at2 = alpharoot::simulate_pair(cfg);
    const double p1 = alpharoot::empirical_atom(at1);
    const double p2 = alpharoot::empirical_atom(at2);
    CHECK(p1 >= 0.0);
    CHECK(p1 <= 0.05);
    CHECK(p2 >= p1);   // absorption accumulates
    CHECK_THROWS_AS(alpharoot::empirical_atom(at1, 0.0), alpharoot::validation_error);
}
