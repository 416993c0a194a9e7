#include "alpharoot/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "alpharoot/quadrature.hpp"
#include "alpharoot/stats.hpp"

namespace alpharoot {

namespace {

// Logistic form of the normalized bump: w(s) = psi(s) / (psi(s) + psi(1-s))
// with psi(s) = e^{-1/s} equals 1 / (1 + e^{g}), g = 1/s - 1/(1-s). Beyond
// s in (1e-3, 1 - 1e-3) the true values are within e^{-990} of {0, 1}, so the
// clamped returns are exact to double precision.
struct Bump {
    double w, w1, w2;
};

Bump bump(double s) {
    if (s <= 1e-3) return {0.0, 0.0, 0.0};
    if (s >= 1.0 - 1e-3) return {1.0, 0.0, 0.0};
    const double g = 1.0 / s - 1.0 / (1.0 - s);
    const double w = 1.0 / (1.0 + std::exp(g));
    const double k = 1.0 / (s * s) + 1.0 / ((1.0 - s) * (1.0 - s));
    const double kp = -2.0 / (s * s * s) + 2.0 / ((1.0 - s) * (1.0 - s) * (1.0 - s));
    const double w1 = w * (1.0 - w) * k;
    const double w2 = w1 * (1.0 - 2.0 * w) * k + w * (1.0 - w) * kp;
    return {w, w1, w2};
}

// F(x) = int_0^x rho for x in [1, 2]; a single Kronrod panel of the C^inf
// integrand is exact to ~1e-14 here. F(2) = 1/2 holds exactly by the symmetry
// w(s) + w(1 - s) = 1, which keeps h(x) = |x| bitwise for |x| >= 2.
double ramp_integral(double x) {
    if (x <= 1.0) return 0.0;
    if (x >= 2.0) return 0.5 + (x - 2.0);
    return gk15_panel([](double u) { return bump(u - 1.0).w; }, 1.0, x).value;
}

// Certified sup of |h''| = sup of rho' over [1, 2]: dense-grid maximum plus a
// Lipschitz slack from a (padded) grid bound on |rho''|.
double certified_sup_h_second() {
    static const double value = [] {
        const int n = 20000;
        const double step = 1.0 / n;
        double sup1 = 0.0, sup2 = 0.0;
        for (int i = 0; i <= n; ++i) {
            const Bump b = bump(i * step);
            sup1 = std::max(sup1, std::abs(b.w1));
            sup2 = std::max(sup2, std::abs(b.w2));
        }
        return sup1 + 0.5 * step * (1.5 * sup2);
    }();
    return value;
}

}  // namespace

void LyapunovSpec::validate() const {
    if (!(beta > 0.0)) throw validation_error("LyapunovSpec requires beta > 0");
    if (!(c > 0.0)) throw validation_error("LyapunovSpec requires c > 0");
    if (!(M > 0.0)) throw validation_error("LyapunovSpec requires M > 0");
    if (!(sup_h_second > 0.0))
        throw validation_error("LyapunovSpec requires a positive h'' bound");
}

double lyapunov_rho(double u) { return bump(u - 1.0).w; }
double lyapunov_rho_prime(double u) { return bump(u - 1.0).w1; }
double lyapunov_rho_second(double u) { return bump(u - 1.0).w2; }

double lyapunov_h(double x) { return ramp_integral(std::abs(x)) + 1.5; }

double lyapunov_h_prime(double x) {
    const double r = lyapunov_rho(std::abs(x));
    return x >= 0.0 ? r : -r;   // rho(|0|) = 0, so h'(0) = 0 either way
}

double lyapunov_h_second(double x) { return lyapunov_rho_prime(std::abs(x)); }

double generator_on_V(double y, double x, const LyapunovSpec& spec,
                      const ModelParams& p) {
    spec.validate();
    validate(p);
    if (!(y >= 0.0)) throw validation_error("generator_on_V requires y >= 0");
    return (p.a - p.b * y) * spec.beta + (p.m - p.theta * x) * lyapunov_h_prime(x) +
           0.5 * y * lyapunov_h_second(x);
}

LyapunovSpec choose_beta_c_M(const ModelParams& p) {
    validate(p);
    if (!(p.theta > 0.0))
        throw validation_error("drift constants require theta > 0");

    LyapunovSpec spec;
    spec.sup_h_second = certified_sup_h_second();
    spec.c = std::min(0.5 * p.b, p.theta);
    // y-coefficient of A V + c V is (c - b) beta + h''/2 <= -b beta / 2 + h''/2;
    // beta = 2 sup h'' / b makes it <= -sup h'' / 2 < 0 with a factor-2 margin.
    spec.beta = std::max(1.0, 2.0 * spec.sup_h_second / p.b);

    // With the y-coefficient negative, sup_y (A V + c V) sits at y = 0:
    //   g(x) = a beta + (m - theta x) h'(x) + c h(x).
    // For |x| >= 2, g is linear with slope +-(c - theta) <= 0, so the maximum
    // over that region is at |x| = 2 (on the grid boundary). Over |x| <= 2,
    // take a dense-grid maximum plus Lipschitz slack.
    auto g = [&](double x) {
        return p.a * spec.beta + (p.m - p.theta * x) * lyapunov_h_prime(x) +
               spec.c * lyapunov_h(x);
    };
    const int n = 8000;
    const double step = 4.0 / n;
    double sup_g = g(-2.0);
    for (int i = 1; i <= n; ++i) sup_g = std::max(sup_g, g(-2.0 + i * step));
    const double lip = p.theta + (std::abs(p.m) + 2.0 * p.theta) * spec.sup_h_second +
                       spec.c;
    spec.M = sup_g + 0.5 * step * lip;
    return spec;
}

DriftCertificate certify_drift(const LyapunovSpec& spec, const ModelParams& p,
                               double y_max, double x_max, int ny, int nx) {
    spec.validate();
    validate(p);
    if (ny < 2 || nx < 2 || !(y_max > 0.0) || !(x_max > 0.0))
        throw validation_error("certify_drift requires a nondegenerate grid");

    DriftCertificate cert;
    cert.y_coefficient_ok =
        (spec.c - p.b) * spec.beta + 0.5 * spec.sup_h_second <= 0.0;
    cert.x_tail_ok = spec.c <= p.theta;

    double worst = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < ny; ++i) {
        const double y = y_max * i / (ny - 1);
        for (int j = 0; j < nx; ++j) {
            const double x = -x_max + 2.0 * x_max * j / (nx - 1);
            const double slack =
                generator_on_V(y, x, spec, p) + spec.c * lyapunov_v(y, x, spec) - spec.M;
            worst = std::max(worst, slack);
        }
    }
    cert.worst_slack = worst;
    cert.grid_ok = worst <= 0.0;
    return cert;
}

DriftCheck drift_mc_check(double y0, double x0, double t,
                          const LyapunovSpec& spec, const SimConfig& base) {
    spec.validate();
    SimConfig cfg = base;
    cfg.y0 = y0;
    cfg.x0 = x0;
    cfg.t = t;
    const PathEnsemble ens = simulate_pair(cfg);

    std::vector<double> v(ens.y_final.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = lyapunov_v(ens.y_final[i], ens.x_final[i], spec);
    const MeanSe m = mean_se(v);

    DriftCheck out;
    out.lhs = m.mean;
    out.se = m.se;
    out.rhs = std::exp(-spec.c * t) * lyapunov_v(y0, x0, spec) + spec.M / spec.c;
    out.bias_allowance = 0.1 * std::sqrt(cfg.dt) * (1.0 + std::abs(out.lhs));
    out.pass = out.lhs <= out.rhs + 3.0 * out.se + out.bias_allowance;
    return out;
}

}  // namespace alpharoot
