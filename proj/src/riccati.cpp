#include "alpharoot/riccati.hpp"

#include <cmath>
#include <vector>

namespace alpharoot {

namespace {

void check_common(double t, const ModelParams& p) {
    validate(p);
    if (!(t >= 0.0)) throw validation_error("riccati_v: t must be >= 0");
}

// breakpoints covering the fast initial transient of s -> v_s(z)
std::vector<double> layer_breakpoints(double t, double mod_z, double alpha) {
    std::vector<double> bp;
    if (mod_z > 4.0) {
        const double s_star = std::pow(mod_z, 1.0 - alpha);
        for (double s = s_star; s < t; s *= 8.0) bp.push_back(s);
    }
    return bp;
}

}  // namespace

Complex riccati_v(double t, Complex z, const ModelParams& p) {
    check_common(t, p);
    if (z == Complex(0.0, 0.0))
        throw validation_error("riccati_v: z = 0 is outside the branch domain");
    if (t == 0.0) return z;
    const double iab = 1.0 / (p.alpha * p.b);
    const Complex g =
        (iab + pow_principal(z, 1.0 - p.alpha)) * std::exp(p.b * (p.alpha - 1.0) * t) -
        iab;
    if (std::abs(g) <= 1e-14)
        throw validation_error("riccati_v: inner expression degenerates at the branch point 0");
    return pow_principal(g, 1.0 / (1.0 - p.alpha));
}

double riccati_v(double t, double lambda, const ModelParams& p) {
    check_common(t, p);
    if (!(lambda >= 0.0))
        throw validation_error("riccati_v: real overload expects lambda >= 0");
    if (lambda == 0.0) return 0.0;
    if (t == 0.0) return lambda;
    const double iab = 1.0 / (p.alpha * p.b);
    // g stays strictly positive on the positive ray (increasing in t from lambda^{1-alpha})
    const double g =
        (iab + std::pow(lambda, 1.0 - p.alpha)) * std::exp(p.b * (p.alpha - 1.0) * t) -
        iab;
    return std::pow(g, 1.0 / (1.0 - p.alpha));
}

Complex riccati_v_integral(double t, Complex z, const ModelParams& p,
                           const QuadratureConfig& quad) {
    check_common(t, p);
    validate(quad);
    if (t == 0.0) return Complex(0.0, 0.0);
    auto f = [&](double s) { return riccati_v(s, z, p); };
    return integrate_adaptive(f, 0.0, t, quad, layer_breakpoints(t, std::abs(z), p.alpha));
}

double riccati_v_integral(double t, double lambda, const ModelParams& p,
                          const QuadratureConfig& quad) {
    check_common(t, p);
    validate(quad);
    if (lambda == 0.0 || t == 0.0) return 0.0;
    auto f = [&](double s) { return riccati_v(s, lambda, p); };
    return integrate_adaptive(f, 0.0, t, quad, layer_breakpoints(t, lambda, p.alpha));
}

double limit_d(double t, const ModelParams& p) {
    check_common(t, p);
    if (!(t > 0.0)) throw validation_error("limit_d: t must be > 0");
    const double g = std::expm1(p.b * (p.alpha - 1.0) * t) / (p.alpha * p.b);
    return std::pow(g, 1.0 / (1.0 - p.alpha));
}

}  // namespace alpharoot
