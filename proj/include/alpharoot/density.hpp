#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "alpharoot/params.hpp"

namespace alpharoot {

enum class DensityRepresentation { fourier, real_axis };

std::string to_string(DensityRepresentation r);

// Fixed quadrature discretization of the half-line inversion integral
//   f(x) = (1/pi) Re int_0^xi_max e^{-i x xi} Phi(xi) dxi,
//   Phi(xi) = exp(-a int_0^t v_s(-i xi) ds - y0 v_t(-i xi)).
// Panels are tied to the finest oscillation 2 pi / x_max, so one table serves
// every abscissa up to x_max; cdf() integrates the same discretization in x
// exactly through the kernel (1 - e^{-i x xi})/(i xi).
class FourierDensityTable {
  public:
    FourierDensityTable(double t, double y0, const ModelParams& p,
                        const QuadratureConfig& quad, double x_max);

    double density(double x) const;
    double cdf(double x) const;

    double xi_max() const { return xi_max_; }
    double tail_bound() const { return tail_bound_; }     // envelope mass beyond xi_max
    std::size_t node_count() const { return xi_.size(); }

  private:
    std::vector<double> xi_, wre_, wim_;   // node, weight * Re Phi, weight * Im Phi
    double xi_max_ = 0.0;
    double tail_bound_ = 0.0;
};

// Density of Y_t given Y_0 = y0 by Fourier inversion. x = 0 is the support
// boundary: the formula value (half-limit) is returned; see DensityGrid docs.
double density_fourier(double t, double y0, double x, const ModelParams& p,
                       const QuadratureConfig& quad);

// Real-axis representation, valid for y0 = 0:
//   f(x) = (1/pi) int_0^inf e^{-xz} (-Im exp(-a int_0^t v_s(-z) ds)) dz
// with v_s(-z) taken at the upper-half-plane limit Arg(-z) = +pi.
double density_real_axis(double t, double y0, double x, const ModelParams& p,
                         const QuadratureConfig& quad);

struct DensityGrid {
    double t = 0.0;
    double y0 = 0.0;
    ModelParams params;
    DensityRepresentation representation = DensityRepresentation::fourier;
    std::vector<double> xs, values;
    double trapz = 0.0;          // trapezoid over the grid
    double head_estimate = 0.0;  // mass below xs.front() (0 when the grid starts at 0)
    double tail_estimate = 0.0;  // mass above xs.back(), from the transform-space CDF
    double norm_defect = 0.0;    // |trapz + head + tail - 1|
    bool boundary_x0 = false;    // grid contains x = 0 (formula value reported there)
};

DensityGrid density_grid(double t, double y0, const std::vector<double>& xs,
                         const ModelParams& p, const QuadratureConfig& quad,
                         DensityRepresentation representation);

// P(Y_t <= x): adaptive integral of the Fourier density from 0 to x.
double cdf_y(double t, double y0, double x, const ModelParams& p,
             const QuadratureConfig& quad);

}  // namespace alpharoot
