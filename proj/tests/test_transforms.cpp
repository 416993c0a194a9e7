#include <cmath>
#include <complex>
#include <vector>

#include "alpharoot/params.hpp"
#include "alpharoot/riccati.hpp"
#include "alpharoot/transforms.hpp"
#include "doctest.h"
#include "test_support.hpp"

using alpharoot::Complex;
using alpharoot::ModelParams;
using alpharoot::QuadratureConfig;

namespace {

ModelParams params(double a, double b, double alpha) {
    ModelParams p;
    p.a = a;
    p.b = b;
    p.alpha = alpha;
    p.m = 0.0;
    p.theta = 1.0;
    return p;
}

// exp(-limit_d(1)) for a = 0, b = 1, alpha = 3/2, computed independently
const double kAtomT1Y1 = 0.004764993935398;

}  // namespace

TEST_CASE("transform at lambda = 0 is exactly one") {
    const ModelParams p = params(1.0, 1.0, 1.5);
    QuadratureConfig quad;
    CHECK(alpharoot::laplace_y(1.0, 1.0, 0.0, p, quad) == 1.0);
    CHECK(alpharoot::laplace_y(0.3, 0.0, 0.0, p, quad) == 1.0);
}

TEST_CASE("transform splits into replenishment and initial-state factors") {
    QuadratureConfig quad;
    for (double alpha : {1.2, 1.8}) {
        const ModelParams p = params(0.7, 1.3, alpha);
        for (double lambda : {0.5, 2.0, 10.0}) {
            const double both = alpharoot::laplace_y(0.9, 1.7, lambda, p, quad);
            const double base = alpharoot::laplace_y(0.9, 0.0, lambda, p, quad);
            const double v = alpharoot::riccati_v(0.9, lambda, p);
            CHECK(both ==
                  doctest::Approx(base * std::exp(-1.7 * v)).epsilon(1e-12));
        }
    }
}

TEST_CASE("two-step semigroup composition") {
    // E e^{-lambda Y_{t+s}} = exp(-a int_0^t v_u du) E e^{-v_t(lambda) Y_s}
    QuadratureConfig quad;
    const ModelParams p = params(1.0, 1.0, 1.5);
    const double t = 0.6, s = 0.5, y0 = 1.0;
    for (double lambda : {0.5, 1.0, 4.0}) {
        const double lhs = alpharoot::laplace_y(t + s, y0, lambda, p, quad);
        const double vt = alpharoot::riccati_v(t, lambda, p);
        const double It = alpharoot::riccati_v_integral(t, lambda, p, quad);
        const double rhs = std::exp(-p.a * It) * alpharoot::laplace_y(s, y0, vt, p, quad);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("mean matches the log-derivative of the transform at zero") {
    QuadratureConfig quad;
    // E[Y_t^2] is infinite (tail index alpha), so -log E e^{-lambda Y} has a
    // lambda^alpha cumulant term and difference quotients converge only like
    // h^{alpha-1}; no Richardson weights cancel a fractional power. Probe at
    // alpha = 1.8 (bias ~h^{0.8}) with h large enough that the transform's
    // quadrature error (~1e-10/h) stays negligible.
    const ModelParams p = params(1.0, 2.0, 1.8);
    const double t = 0.8, y0 = 1.5;
    const double h = 1e-5;
    auto psi = [&](double lambda) {
        return -std::log(alpharoot::laplace_y(t, y0, lambda, p, quad));
    };
    const double fd = (4.0 * psi(h) / h - psi(2.0 * h) / (2.0 * h)) / 3.0;
    CHECK(fd == doctest::Approx(alpharoot::mean_y(t, y0, p)).epsilon(1e-3));
}

TEST_CASE("mean closed form solves the drift recursion") {
    const ModelParams p = params(2.0, 0.7, 1.5);
    CHECK(alpharoot::mean_y(0.0, 3.0, p) == doctest::Approx(3.0).epsilon(1e-15));
    // long-run level a / b
    CHECK(alpharoot::mean_y(50.0, 3.0, p) ==
          doctest::Approx(p.a / p.b).epsilon(1e-12));
    // semigroup in t
    const double m1 = alpharoot::mean_y(0.4, 3.0, p);
    CHECK(alpharoot::mean_y(0.9, 3.0, p) ==
          doctest::Approx(alpharoot::mean_y(0.5, m1, p)).epsilon(1e-13));
}

TEST_CASE("characteristic function is bounded, centered and Hermitian") {
    QuadratureConfig quad;
    const ModelParams p = params(1.0, 1.0, 1.5);
    const Complex at0 = alpharoot::charfn_y(1.0, 1.0, 0.0, p, quad);
    CHECK(std::abs(at0 - 1.0) <= 1e-12);
    for (double xi : {0.3, 2.0, 17.0, 150.0}) {
        const Complex f = alpharoot::charfn_y(1.0, 1.0, xi, p, quad);
        CHECK(std::abs(f) <= 1.0 + 1e-12);
        const Complex g = alpharoot::charfn_y(1.0, 1.0, -xi, p, quad);
        CHECK(std::abs(g - std::conj(f)) <= 1e-12);
    }
}

TEST_CASE("characteristic function is positive definite") {
    // Hermitian Gram matrix M_{jk} = phi(xi_j - xi_k) must have nonnegative
    // leading principal minors (they are real for a Hermitian matrix)
    QuadratureConfig quad;
    const ModelParams p = params(1.0, 1.0, 1.5);
    const std::vector<double> xis = {0.0, 0.7, 1.9, 4.2};
    std::vector<std::vector<Complex>> m(4, std::vector<Complex>(4));
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
            m[j][k] = alpharoot::charfn_y(1.0, 1.0, xis[j] - xis[k], p, quad);
    for (int k = 1; k <= 4; ++k) {
        std::vector<std::vector<Complex>> minor(k, std::vector<Complex>(k));
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k; ++c) minor[r][c] = m[r][c];
        const Complex det = testsupport::det_complex(minor);
        CHECK(std::abs(det.imag()) <= 1e-10);
        CHECK(det.real() >= -1e-10);
    }
}

TEST_CASE("absorbed mass for the unreplenished process") {
    ModelParams p = params(0.0, 1.0, 1.5);
    CHECK(alpharoot::atom_probability(1.0, 1.0, p) ==
          doctest::Approx(kAtomT1Y1).epsilon(1e-9));
    // monotone: more initial mass, less absorption
    CHECK(alpharoot::atom_probability(1.0, 2.0, p) <
          alpharoot::atom_probability(1.0, 1.0, p));
    // longer horizon, more absorption
    CHECK(alpharoot::atom_probability(2.0, 1.0, p) >
          alpharoot::atom_probability(1.0, 1.0, p));
}

TEST_CASE("replenished process carries no atom") {
    ModelParams p = params(1.0, 1.0, 1.5);
    CHECK_THROWS_AS(alpharoot::atom_probability(1.0, 1.0, p),
                    alpharoot::validation_error);
}

TEST_CASE("transform saturates at the absorbed mass for large lambda") {
    QuadratureConfig quad;
    const ModelParams p = params(0.0, 1.0, 1.5);
    const double atom = alpharoot::atom_probability(1.0, 1.0, p);
    const double sat = alpharoot::laplace_y(1.0, 1.0, 1e10, p, quad);
    CHECK(sat == doctest::Approx(atom).epsilon(1e-3));
    CHECK(sat >= atom);   // E e^{-lambda Y} >= P(Y = 0) for every lambda
}
