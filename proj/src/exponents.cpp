#include "alpharoot/exponents.hpp"

#include <cmath>
#include <limits>

#include "alpharoot/complex_power.hpp"
#include "alpharoot/riccati.hpp"
#include "alpharoot/stats.hpp"

namespace alpharoot {

namespace {

constexpr double kRegimeWindow = 0.01;   // |angle| within this of pi/2

bool is_imag_axis_regime(double angle) {
    return std::abs(std::abs(angle) - 0.5 * pi()) < kRegimeWindow;
}

}  // namespace

ExponentCheck ray_exponent_check(double t, const ModelParams& p,
                                      double ray_angle,
                                      const std::vector<double>& rho_grid,
                                      const QuadratureConfig& quad) {
    validate(p);
    validate(quad);
    if (!(t > 0.0)) throw validation_error("exponent check requires t > 0");
    const double mag = std::abs(ray_angle);
    if (!(mag >= 0.5 * pi() - kRegimeWindow) || !(mag <= pi() + 1e-12))
        throw validation_error(
            "ray angle must satisfy pi/2 - 0.01 <= |angle| <= pi (left half-plane rays)");
    if (rho_grid.size() < 2)
        throw validation_error("rho grid needs at least two points for a regression");
    for (std::size_t i = 0; i < rho_grid.size(); ++i) {
        if (!(rho_grid[i] >= 2.0))
            throw validation_error("rho grid must satisfy rho >= 2");
        if (i > 0 && !(rho_grid[i] > rho_grid[i - 1]))
            throw validation_error("rho grid must be strictly increasing");
    }

    ExponentCheck out;
    out.imag_axis_regime = is_imag_axis_regime(ray_angle);
    out.rhos = rho_grid;

    std::vector<double> log_rho, log_val;
    for (double rho : rho_grid) {
        const Complex z(rho * std::cos(ray_angle), rho * std::sin(ray_angle));
        const Complex integral = riccati_v_integral(t, z, p, quad);
        const double value =
            out.imag_axis_regime ? integral.real() : std::abs(integral);
        if (!(value > 0.0) || !std::isfinite(value))
            throw quadrature_error("exponent regression degenerate: nonpositive value at rho=" +
                                       std::to_string(rho),
                                   std::numeric_limits<double>::quiet_NaN());
        out.values.push_back(value);
        log_rho.push_back(std::log(rho));
        log_val.push_back(std::log(value));
    }
    const LineFit fit = fit_line(log_rho, log_val);
    out.slope = fit.slope;
    out.intercept = fit.intercept;
    return out;
}

std::vector<double> default_rho_grid(double alpha, bool imag_axis_regime) {
    if (!(alpha > 1.0) || !(alpha < 2.0))
        throw validation_error("alpha must lie in open interval (1,2)");
    std::vector<double> grid;
    if (!imag_axis_regime) {
        for (int k = 1; k <= 9; ++k) grid.push_back(std::ldexp(1.0, k));  // 2 .. 512
        return grid;
    }
    // Regression window past the boundary-layer crossover; the crossover
    // moves out as alpha drops toward 1 (layer width rho^{1-alpha} shrinks
    // more slowly), and the window must stay below quadrature exhaustion.
    int k0 = 17;
    if (alpha < 1.35)
        k0 = 21;
    else if (alpha < 1.65)
        k0 = 15;
    for (int i = 0; i < 9; ++i) grid.push_back(std::ldexp(1.0, k0 + i));
    return grid;
}

}  // namespace alpharoot
