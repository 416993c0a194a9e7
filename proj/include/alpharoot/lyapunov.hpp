#pragma once

#include "alpharoot/params.hpp"
#include "alpharoot/simulate.hpp"

namespace alpharoot {

// Drift certificate V(y, x) = beta * y + h(x) with
//   h(x) = F(|x|) + 2 - F(2),  F(x) = int_0^x rho,
// rho a C^inf ramp: 0 on (-inf, 1], 1 on [2, +inf). Then h >= 1, h is C^2,
// and h(x) = |x| exactly for |x| >= 2. Constants certify A V <= -c V + M.
struct LyapunovSpec {
    double beta = 1.0;
    double c = 0.0;
    double M = 0.0;
    double sup_h_second = 0.0;   // certified bound used for the y-coefficient sign
    void validate() const;
};

// The ramp rho(u) = 1 / (1 + e^{1/s - 1/(1-s)}) at s = u - 1 (clamped), and
// the pieces built from it. All pure; h'' is even and vanishes off (1, 2).
double lyapunov_h(double x);
double lyapunov_h_prime(double x);
double lyapunov_h_second(double x);
double lyapunov_rho(double u);
double lyapunov_rho_prime(double u);
double lyapunov_rho_second(double u);

inline double lyapunov_v(double y, double x, const LyapunovSpec& s) {
    return s.beta * y + lyapunov_h(x);
}

// A V(y, x) = (a - b y) beta + (m - theta x) h'(x) + y h''(x) / 2.
// The driver's jump integral vanishes identically: V is affine in y, so the
// integrand V(y + u, x) - V(y, x) - u dV/dy telescopes to zero at every jump
// size, leaving only drift and the Brownian second-order term.
double generator_on_V(double y, double x, const LyapunovSpec& spec,
                      const ModelParams& p);

// Constants for the drift inequality: c = min(b/2, theta); beta large enough
// that the y-coefficient of A V + c V is negative (the smallness condition
// (c - b) beta + sup h''/2 <= 0); M a numerically certified bound of sup (A V + c V):
// dense-grid maximum over |x| <= 2 plus a Lipschitz slack, closed form outside.
// Requires theta > 0.
LyapunovSpec choose_beta_c_M(const ModelParams& p);

// Pointwise re-check of A V + c V <= M on an ny-by-nx grid over
// [0, y_max] x [-x_max, x_max], together with the two exact sign conditions
// that extend it off-grid: the y-coefficient (-b + c) beta + sup h''/2 <= 0
// and the |x| > 2 slope c - theta <= 0.
struct DriftCertificate {
    bool grid_ok = false;
    bool y_coefficient_ok = false;
    bool x_tail_ok = false;
    double worst_slack = 0.0;   // max over grid of A V + c V - M (<= 0 if ok)
    bool pass() const { return grid_ok && y_coefficient_ok && x_tail_ok; }
};
DriftCertificate certify_drift(const LyapunovSpec& spec, const ModelParams& p,
                               double y_max = 50.0, double x_max = 50.0,
                               int ny = 200, int nx = 200);

// Monte Carlo check of E V(Y_t, X_t) <= e^{-c t} V(y0, x0) + M / c.
struct DriftCheck {
    double lhs = 0.0;            // ensemble mean of V at t
    double rhs = 0.0;            // e^{-ct} V(y0, x0) + M / c
    double se = 0.0;             // standard error of lhs
    double bias_allowance = 0.0; // discretization slack, O(sqrt(dt))
    bool pass = false;           // lhs <= rhs + 3 se + allowance
};
DriftCheck drift_mc_check(double y0, double x0, double t,
                          const LyapunovSpec& spec, const SimConfig& base);

}  // namespace alpharoot
