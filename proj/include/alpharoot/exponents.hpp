#pragma once

#include <vector>

#include "alpharoot/params.hpp"

namespace alpharoot {

// Large-|z| scaling of the transform exponent along a ray z = rho e^{i angle}:
// the time integral int_0^t v_s(z) ds grows like rho^{2-alpha}. Near the
// imaginary axis (|angle| within 0.01 of pi/2) the regressed quantity is
// Re int; on rays strictly inside the left half-plane it is |int|, where only
// boundedness of |int| / rho^{2-alpha} is asserted, not a sharp exponent.
struct ExponentCheck {
    double slope = 0.0;      // d log(value) / d log(rho)
    double intercept = 0.0;
    bool imag_axis_regime = false;
    std::vector<double> rhos;
    std::vector<double> values;   // Re int (imag-axis regime) or |int|
};

ExponentCheck ray_exponent_check(double t, const ModelParams& p,
                                      double ray_angle,
                                      const std::vector<double>& rho_grid,
                                      const QuadratureConfig& quad);

// Geometric default grids. The rho^{2-alpha} law is asymptotic: the regression
// window must sit past the crossover where the boundary-layer contribution
// (which scales like rho^{1-alpha} in s) stops polluting the slope, and below
// the point where the time quadrature loses the layer entirely. The window
// therefore shifts with alpha. The magnitude-ratio regime keeps the small
// [2, 512] grid, where boundedness (not the slope) is the claim.
std::vector<double> default_rho_grid(double alpha, bool imag_axis_regime);

}  // namespace alpharoot
