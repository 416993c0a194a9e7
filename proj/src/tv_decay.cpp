#include "alpharoot/tv_decay.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <utility>
#include <vector>

#include "alpharoot/params.hpp"
#include "alpharoot/stats.hpp"

namespace alpharoot {

void HistogramSpec::validate() const {
    if (!(refine > 0.0) || !std::isfinite(refine))
        throw validation_error("HistogramSpec requires refine > 0");
}

namespace {

// Freedman-Diaconis width on the pooled sample, with range-based fallbacks
// when the interquartile range degenerates.
double fd_width(const std::vector<double>& pooled, double refine) {
    const double iqr = quantile(pooled, 0.75) - quantile(pooled, 0.25);
    double h = 2.0 * iqr * std::pow(static_cast<double>(pooled.size()), -0.25);
    if (!(h > 0.0)) {
        const auto [lo, hi] = std::minmax_element(pooled.begin(), pooled.end());
        h = (*hi - *lo) / 64.0;
    }
    if (!(h > 0.0)) return 0.0;   // all values equal: one cell
    return h / refine;
}

}  // namespace

TvDecayReport tv_decay(std::array<double, 2> init_a, std::array<double, 2> init_b,
                       const std::vector<double>& ts, const SimConfig& base,
                       const HistogramSpec& binning) {
    binning.validate();
    if (ts.empty()) throw validation_error("tv_decay requires at least one time");
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (!(ts[i] > 0.0)) throw validation_error("tv_decay times must be > 0");
        if (i > 0 && !(ts[i] > ts[i - 1]))
            throw validation_error("tv_decay times must be strictly increasing");
    }
    if (!(init_a[0] >= 0.0) || !(init_b[0] >= 0.0))
        throw validation_error("tv_decay initial y must be >= 0");

    // Identical seeds couple the ensembles path-by-path (common random
    // numbers): every difference between the histograms is attributable to
    // the starting points, not to independent sampling noise.
    auto configure = [&](const std::array<double, 2>& init) {
        SimConfig cfg = base;
        cfg.y0 = init[0];
        cfg.x0 = init[1];
        cfg.t = ts.back();
        cfg.snapshot_ts = ts;
        cfg.record_full_paths = false;
        return cfg;
    };
    const PathEnsemble ens_a = simulate_pair(configure(init_a));
    const PathEnsemble ens_b = simulate_pair(configure(init_b));

    TvDecayReport report;
    report.init_a = init_a;
    report.init_b = init_b;
    report.ts.assign(ens_a.snapshot_ts.begin(), ens_a.snapshot_ts.end());
    report.n_paths = base.n_paths;
    report.binning = binning;

    const double n = static_cast<double>(base.n_paths);
    for (std::size_t s = 0; s < report.ts.size(); ++s) {
        const auto& ya = ens_a.y_snap[s];
        const auto& xa = ens_a.x_snap[s];
        const auto& yb = ens_b.y_snap[s];
        const auto& xb = ens_b.x_snap[s];

        std::vector<double> pooled_y(ya), pooled_x(xa);
        pooled_y.insert(pooled_y.end(), yb.begin(), yb.end());
        pooled_x.insert(pooled_x.end(), xb.begin(), xb.end());
        const double hy = fd_width(pooled_y, binning.refine);
        const double hx = fd_width(pooled_x, binning.refine);
        const double lo_y = *std::min_element(pooled_y.begin(), pooled_y.end());
        const double lo_x = *std::min_element(pooled_x.begin(), pooled_x.end());

        auto cell = [&](double y, double x) -> std::int64_t {
            const std::int64_t iy =
                hy > 0.0 ? static_cast<std::int64_t>(std::floor((y - lo_y) / hy)) : 0;
            const std::int64_t ix =
                hx > 0.0 ? static_cast<std::int64_t>(std::floor((x - lo_x) / hx)) : 0;
            return (iy << 32) | (ix & 0xffffffff);
        };
        std::unordered_map<std::int64_t, std::pair<std::int64_t, std::int64_t>> counts;
        counts.reserve(4096);
        for (std::size_t i = 0; i < ya.size(); ++i) ++counts[cell(ya[i], xa[i])].first;
        for (std::size_t i = 0; i < yb.size(); ++i) ++counts[cell(yb[i], xb[i])].second;

        TvSlice slice;
        slice.t = report.ts[s];
        slice.bin_w_y = hy;
        slice.bin_w_x = hx;
        double l1 = 0.0;
        for (const auto& [key, ab] : counts) {
            (void)key;
            l1 += std::abs(static_cast<double>(ab.first - ab.second)) / n;
            slice.max_count = std::max(slice.max_count, ab.first + ab.second);
        }
        slice.tv = 0.5 * l1;
        slice.occupied = static_cast<std::int64_t>(counts.size());
        slice.se_proxy = std::sqrt(static_cast<double>(slice.occupied) / (2.0 * n));
        slice.sparse = slice.max_count < 10;
        report.any_sparse = report.any_sparse || slice.sparse;
        report.slices.push_back(slice);
    }

    std::vector<double> fit_t, fit_log;
    for (const TvSlice& s : report.slices)
        if (s.tv > 0.0) {
            fit_t.push_back(s.t);
            fit_log.push_back(std::log(s.tv));
        }
    if (fit_t.size() >= 2)
        report.fit_rate = fit_line(fit_t, fit_log).slope;
    const bool log_tv_varies =
        !fit_log.empty() &&
        *std::max_element(fit_log.begin(), fit_log.end()) >
            *std::min_element(fit_log.begin(), fit_log.end());
    if (fit_t.size() >= 3 && log_tv_varies)
        report.spearman_log_tv = spearman_rho(fit_t, fit_log);
    return report;
}

}  // namespace alpharoot
