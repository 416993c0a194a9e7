#pragma once

#include "alpharoot/complex_power.hpp"
#include "alpharoot/params.hpp"

namespace alpharoot {

// E[exp(-lambda Y_t) | Y_0 = y0] = exp(-a int_0^t v_s(lambda) ds - y0 v_t(lambda)).
// lambda = 0 returns exactly 1.
double laplace_y(double t, double y0, double lambda, const ModelParams& p,
                 const QuadratureConfig& quad);

// E[exp(i xi Y_t) | Y_0 = y0]; the Laplace formula continued to lambda = -i xi.
Complex charfn_y(double t, double y0, double xi, const ModelParams& p,
                 const QuadratureConfig& quad);

// P(Y_t = 0 | Y_0 = y0) = exp(-y0 d(t)) for the a = 0 process; rejects a != 0
// (with replenishment the law at t > 0 has no atom).
double atom_probability(double t, double y0, const ModelParams& p);

// E[Y_t | Y_0 = y0] = y0 e^{-bt} + (a/b)(1 - e^{-bt}); the driver is compensated.
double mean_y(double t, double y0, const ModelParams& p);

}  // namespace alpharoot
