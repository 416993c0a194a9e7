#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <vector>

#include "alpharoot/simulate.hpp"

namespace alpharoot {

// Shared-binning histogram rule: Freedman-Diaconis widths on the pooled
// two-ensemble sample, per axis and per time slice; `refine` scales the
// resulting bin count along each axis (2.0 = twice as fine).
struct HistogramSpec {
    double refine = 1.0;
    void validate() const;
};

struct TvSlice {
    double t = 0.0;
    double tv = 0.0;           // 0.5 sum_cells |p_hat - q_hat|
    double se_proxy = 0.0;     // sqrt(occupied / (2 n)); multinomial noise scale
    std::int64_t occupied = 0; // cells with any mass
    std::int64_t max_count = 0;
    bool sparse = false;       // max_count < 10: estimate unreliable
    double bin_w_y = 0.0, bin_w_x = 0.0;
};

struct TvDecayReport {
    std::array<double, 2> init_a{}, init_b{};   // (y, x) starting points
    std::vector<double> ts;
    std::vector<TvSlice> slices;
    // Fitted over slices with tv > 0; NaN when the statistic is undefined
    // (fit needs 2 such slices, the rank correlation 3 plus a non-constant
    // log tv, e.g. not all slices saturated at tv = 1).
    double fit_rate = std::numeric_limits<double>::quiet_NaN();
    double spearman_log_tv = std::numeric_limits<double>::quiet_NaN();
    std::int64_t n_paths = 0;
    HistogramSpec binning;
    bool any_sparse = false;
};

// Distance between the two time-t laws started from init_a and init_b,
// estimated by a plug-in histogram TV on terminal (Y, X). Both ensembles use
// the same seed, so path k consumes identical draws in both runs (common
// random numbers): coupled ensembles differ only through their starting
// points, and identical starting points give TV exactly 0.
TvDecayReport tv_decay(std::array<double, 2> init_a, std::array<double, 2> init_b,
                       const std::vector<double>& ts, const SimConfig& base,
                       const HistogramSpec& binning = {});

}  // namespace alpharoot
