#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace alpharoot {

using Complex = std::complex<double>;

inline constexpr double pi() { return std::numbers::pi; }

// Principal argument in (-pi, pi]. A +0.0 imaginary part on the negative real
// axis maps to +pi, so v evaluated at -z + i0+ picks the upper-half-plane limit.
inline double principal_arg(Complex z) { return std::atan2(z.imag(), z.real()); }

// z^beta = exp(beta (ln|z| + i Arg z)) on C \ {0}, principal branch.
inline Complex pow_principal(Complex z, double beta) {
    const double r = std::abs(z);
    const double th = principal_arg(z);
    return std::polar(std::pow(r, beta), beta * th);
}

}  // namespace alpharoot
