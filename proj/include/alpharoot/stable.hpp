#pragma once

#include <cmath>

#include "alpharoot/params.hpp"
#include "alpharoot/rng.hpp"

namespace alpharoot {

// Chambers-Mallows-Stuck transform for the compensated, spectrally positive
// alpha-stable driver. With U ~ Unif(-pi/2, pi/2), W ~ Exp(1) and
// B = atan(tan(pi alpha/2))/alpha, the increment over a step dt is
//   dL = (dt/alpha)^{1/alpha} sin(alpha(U+B)) cos(U)^{-1/alpha}
//        (cos(U - alpha(U+B)) / W)^{(1-alpha)/alpha}
// and satisfies E[exp(-l dL)] = exp(dt l^alpha / alpha) for l >= 0.
struct StableScheme {
    double alpha;
    double inv_alpha;
    double skew_shift;   // B
    double tail_expo;    // (1-alpha)/alpha
    double scale_unit;   // (1/alpha)^{1/alpha}; multiply by dt^{1/alpha}

    explicit StableScheme(double a) {
        if (!(a > 1.0 && a < 2.0))
            throw validation_error("StableScheme: alpha must lie in (1, 2)");
        alpha = a;
        inv_alpha = 1.0 / a;
        skew_shift = std::atan(std::tan(1.5707963267948966 * a)) / a;
        tail_expo = (1.0 - a) / a;
        scale_unit = std::pow(1.0 / a, inv_alpha);
    }

    // standardized variate (dt = alpha, i.e. without the scale factor)
    double draw_standard(RngStream& rng) const {
        const double u = (rng.next_u01() - 0.5) * 3.141592653589793238462643383280;
        const double w = rng.next_exponential();
        const double au = alpha * (u + skew_shift);
        return std::sin(au) * std::pow(std::cos(u), -inv_alpha) *
               std::pow(std::cos(u - au) / w, tail_expo);
    }

    double draw_increment(RngStream& rng, double dt) const {
        return std::pow(dt, inv_alpha) * scale_unit * draw_standard(rng);
    }
};

// convenience single-shot form
double sample_stable_increment(RngStream& rng, double alpha, double dt);

}  // namespace alpharoot
