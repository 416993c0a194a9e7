#include "alpharoot/transforms.hpp"

#include <cmath>

#include "alpharoot/riccati.hpp"

namespace alpharoot {

double laplace_y(double t, double y0, double lambda, const ModelParams& p,
                 const QuadratureConfig& quad) {
    validate(p);
    if (!(t >= 0.0)) throw validation_error("laplace_y: t must be >= 0");
    if (!(y0 >= 0.0)) throw validation_error("laplace_y: y0 must be >= 0");
    if (!(lambda >= 0.0)) throw validation_error("laplace_y: lambda must be >= 0");
    if (lambda == 0.0) return 1.0;
    const double integral = riccati_v_integral(t, lambda, p, quad);
    return std::exp(-p.a * integral - y0 * riccati_v(t, lambda, p));
}

Complex charfn_y(double t, double y0, double xi, const ModelParams& p,
                 const QuadratureConfig& quad) {
    validate(p);
    if (!(t >= 0.0)) throw validation_error("charfn_y: t must be >= 0");
    if (!(y0 >= 0.0)) throw validation_error("charfn_y: y0 must be >= 0");
    if (xi == 0.0) return Complex(1.0, 0.0);
    const Complex z(0.0, -xi);
    const Complex expo = -p.a * riccati_v_integral(t, z, p, quad) - y0 * riccati_v(t, z, p);
    return std::exp(expo);
}

double atom_probability(double t, double y0, const ModelParams& p) {
    validate(p);
    if (p.a != 0.0)
        throw validation_error("atom_probability: defined for the a = 0 process only");
    if (!(t > 0.0)) throw validation_error("atom_probability: t must be > 0");
    if (!(y0 >= 0.0)) throw validation_error("atom_probability: y0 must be >= 0");
    return std::exp(-y0 * limit_d(t, p));
}

double mean_y(double t, double y0, const ModelParams& p) {
    validate(p);
    if (!(t >= 0.0)) throw validation_error("mean_y: t must be >= 0");
    if (!(y0 >= 0.0)) throw validation_error("mean_y: y0 must be >= 0");
    const double decay = std::exp(-p.b * t);
    return y0 * decay + (p.a / p.b) * (1.0 - decay);
}

}  // namespace alpharoot
