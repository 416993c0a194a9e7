#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <queue>
#include <string>
#include <vector>

#include "alpharoot/params.hpp"

namespace alpharoot {

// Gauss-Kronrod 7/15 pair on [-1, 1]; the embedded 7-point Gauss rule sits at
// the odd-indexed Kronrod abscissae.
namespace gk {
inline constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
}  // namespace gk

template <class T>
struct PanelResult {
    T value{};
    double error = 0.0;
};

// One GK15 panel on [lo, hi]; error estimate from the Gauss/Kronrod difference
// with the usual QUADPACK-style sharpening.
template <class F, class T = std::invoke_result_t<F, double>>
PanelResult<T> gk15_panel(F&& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    T fc = f(mid);
    T kronrod = gk::wgk[7] * fc;
    T gauss = gk::wg[3] * fc;
    double resabs = gk::wgk[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        const double dx = half * gk::xgk[j];
        T f1 = f(mid - dx);
        T f2 = f(mid + dx);
        kronrod += gk::wgk[j] * (f1 + f2);
        resabs += gk::wgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) gauss += gk::wg[j / 2] * (f1 + f2);
    }
    PanelResult<T> r;
    r.value = kronrod * half;
    double err = std::abs(kronrod - gauss) * std::abs(half);
    resabs *= std::abs(half);
    if (resabs > 0.0 && err > 0.0) {
        const double scaled = std::pow(200.0 * err / resabs, 1.5);
        err = (scaled < 1.0) ? resabs * scaled : resabs;
    }
    r.error = err;
    return r;
}

// Globally adaptive integration of f over [a, b] with optional interior
// breakpoints (boundary layers, known kinks). Bisects the worst panel until
// sum(err) <= max(abs_tol, rel_tol*|I|) or max_subdivisions panels exist;
// failure throws quadrature_error carrying the achieved error.
template <class F, class T = std::invoke_result_t<F, double>>
T integrate_adaptive(F&& f, double a, double b, const QuadratureConfig& cfg,
                     const std::vector<double>& breakpoints = {},
                     double* achieved_error = nullptr) {
    if (!(b >= a)) throw validation_error("integrate_adaptive: b < a");
    if (a == b) {
        if (achieved_error) *achieved_error = 0.0;
        return T{};
    }
    struct Panel {
        double lo, hi, error;
        T value;
        std::uint64_t id;
        bool operator<(const Panel& o) const {
            return error != o.error ? error < o.error : id > o.id;
        }
    };
    std::vector<double> edges{a};
    for (double x : breakpoints)
        if (x > a && x < b) edges.push_back(x);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());

    std::priority_queue<Panel> heap;
    std::uint64_t next_id = 0;
    T total{};
    double total_err = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        auto pr = gk15_panel(f, edges[i], edges[i + 1]);
        heap.push(Panel{edges[i], edges[i + 1], pr.error, pr.value, next_id++});
        total += pr.value;
        total_err += pr.error;
    }
    auto tolerance = [&] {
        return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
    };
    while (total_err > tolerance()) {
        if (static_cast<int>(heap.size()) >= cfg.max_subdivisions) {
            throw quadrature_error(
                "integrate_adaptive: tolerance not reached after " +
                    std::to_string(heap.size()) + " panels (error " +
                    std::to_string(total_err) + ")",
                total_err);
        }
        Panel worst = heap.top();
        heap.pop();
        total -= worst.value;
        total_err -= worst.error;
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) {
            throw quadrature_error(
                "integrate_adaptive: panel at floating-point resolution, error " +
                    std::to_string(total_err + worst.error),
                total_err + worst.error);
        }
        for (auto [lo, hi] : {std::pair{worst.lo, mid}, std::pair{mid, worst.hi}}) {
            auto pr = gk15_panel(f, lo, hi);
            heap.push(Panel{lo, hi, pr.error, pr.value, next_id++});
            total += pr.value;
            total_err += pr.error;
        }
    }
    if (achieved_error) *achieved_error = total_err;
    return total;
}

}  // namespace alpharoot
