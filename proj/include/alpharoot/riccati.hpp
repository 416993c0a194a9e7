#pragma once

#include "alpharoot/complex_power.hpp"
#include "alpharoot/params.hpp"
#include "alpharoot/quadrature.hpp"

namespace alpharoot {

// Solution of dv/dt = -b v - v^alpha/alpha, v_0 = z, on C \ {0}:
//   v_t(z) = ((1/(alpha b) + z^{1-alpha}) e^{b(alpha-1)t} - 1/(alpha b))^{1/(1-alpha)}
// principal-branch powers. Signals (domain error) if the inner expression
// degenerates to 0, the one point the branch excludes.
Complex riccati_v(double t, Complex z, const ModelParams& p);

// Real positive ray: same flow, kept in double arithmetic. Returns exactly
// lambda at t = 0 and exactly 0 at lambda = 0.
double riccati_v(double t, double lambda, const ModelParams& p);

// int_0^t v_s(z) ds by adaptive Gauss-Kronrod. Large |z| develops an
// O(|z|^{1-alpha}) initial boundary layer; the interval is pre-split there.
Complex riccati_v_integral(double t, Complex z, const ModelParams& p,
                           const QuadratureConfig& quad);
double riccati_v_integral(double t, double lambda, const ModelParams& p,
                          const QuadratureConfig& quad);

// d(t) = lim_{lambda -> inf} v_t(lambda) = ((e^{b(alpha-1)t} - 1)/(alpha b))^{1/(1-alpha)},
// finite for t > 0; the left extremity of the Laplace exponent's range.
double limit_d(double t, const ModelParams& p);

}  // namespace alpharoot
