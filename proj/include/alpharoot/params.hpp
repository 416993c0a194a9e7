#pragma once

#include <stdexcept>
#include <string>

namespace alpharoot {

// Thrown when inputs violate a documented precondition.
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when an adaptive quadrature cannot reach its tolerance; carries the
// error estimate actually achieved so callers can report or relax.
struct quadrature_error : std::runtime_error {
    quadrature_error(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_error(achieved) {}
    double achieved_error;
};

// Model
//   dY_t = (a - b Y_t) dt + Y_{t-}^{1/alpha} dL_t
//   dX_t = (m - theta X_t) dt + sqrt(Y_t) dB_t
// with L spectrally positive alpha-stable, compensated, E[e^{-l L_1}] = e^{l^alpha/alpha}.
struct ModelParams {
    double a = 1.0;      // >= 0; > 0 required for absolutely continuous Y marginals
    double b = 1.0;      // > 0
    double alpha = 1.5;  // in (1, 2)
    double m = 0.0;
    double theta = 1.0;  // > 0 required for the ergodicity tooling
};

inline void validate(const ModelParams& p) {
    if (!(p.a >= 0.0)) throw validation_error("ModelParams: a must be >= 0");
    if (!(p.b > 0.0)) throw validation_error("ModelParams: b must be > 0");
    if (!(p.alpha > 1.0 && p.alpha < 2.0))
        throw validation_error("ModelParams: alpha must lie in (1, 2)");
    if (!(p.m == p.m) || !(p.theta == p.theta))
        throw validation_error("ModelParams: m, theta must be finite");
}

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_subdivisions = 400;
    // Fourier-side truncation of the transform integral. 0 means: choose
    // automatically from the fitted modulus envelope c1*exp(-c2 xi^(2-alpha)).
    double xi_truncation = 0.0;
};

inline void validate(const QuadratureConfig& q) {
    if (!(q.abs_tol > 0.0) || !(q.rel_tol >= 0.0))
        throw validation_error("QuadratureConfig: tolerances must be positive");
    if (q.max_subdivisions < 1)
        throw validation_error("QuadratureConfig: max_subdivisions must be >= 1");
    if (!(q.xi_truncation >= 0.0))
        throw validation_error("QuadratureConfig: xi_truncation must be >= 0");
}

}  // namespace alpharoot
